//! Backtracking over the free cells of a table.
//!
//! Cells are assigned in a fixed order with values tried in ascending order,
//! so solutions come out lexicographically sorted on the visited cells. Each
//! constraint instance is attached to the position of the last free cell it
//! reads and is evaluated as soon as that cell is set.

use std::cell::RefCell;

pub(crate) struct CellSearch {
    /// Flat table indices of the free cells, in assignment order.
    cells: Vec<usize>,
    /// `checks[i]`: instances to evaluate right after `cells[i]` is assigned.
    checks: Vec<Vec<usize>>,
    /// Instances that read no free cell.
    upfront: Vec<usize>,
    domain: usize,
}

impl CellSearch {
    /// `touches(id, read)` must call `read(cell)` for every cell instance `id`
    /// looks at; the set must not depend on table values.
    pub(crate) fn new<T>(cells: Vec<usize>, table_len: usize, domain: usize, instances: usize, touches: T) -> Self
    where
        T: Fn(usize, &dyn Fn(usize)),
    {
        let mut position = vec![None; table_len];
        for (i, &c) in cells.iter().enumerate() {
            position[c] = Some(i);
        }
        let mut checks = vec![Vec::new(); cells.len()];
        let mut upfront = Vec::new();
        for id in 0..instances {
            let last = RefCell::new(None::<usize>);
            touches(id, &|cell| {
                if let Some(p) = position[cell] {
                    let mut l = last.borrow_mut();
                    *l = Some(l.map_or(p, |q: usize| q.max(p)));
                }
            });
            match last.into_inner() {
                Some(p) => checks[p].push(id),
                None => upfront.push(id),
            }
        }
        CellSearch {
            cells,
            checks,
            upfront,
            domain,
        }
    }

    /// Every completion of `table` (whose non-free cells are already set)
    /// satisfying all instances, in lexicographic order of the free cells.
    pub(crate) fn solve<H>(&self, table: &mut [usize], holds: &H) -> Vec<Vec<usize>>
    where
        H: Fn(usize, &[usize]) -> bool,
    {
        let mut out = Vec::new();
        for &c in &self.cells {
            table[c] = 0;
        }
        if self.upfront.iter().all(|&id| holds(id, table)) {
            self.rec(0, table, holds, &mut out);
        }
        out
    }

    fn rec<H>(&self, pos: usize, table: &mut [usize], holds: &H, out: &mut Vec<Vec<usize>>)
    where
        H: Fn(usize, &[usize]) -> bool,
    {
        if pos == self.cells.len() {
            out.push(table.to_vec());
            return;
        }
        let c = self.cells[pos];
        for v in 0..self.domain {
            table[c] = v;
            if self.checks[pos].iter().all(|&id| holds(id, table)) {
                self.rec(pos + 1, table, holds, out);
            }
        }
        table[c] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_all_assignments_with_constraints() {
        // two cells in 0..3 with cell0 + cell1 ≡ 0 mod 3
        let s = CellSearch::new(vec![0, 1], 2, 3, 1, |_, read| {
            read(0);
            read(1);
        });
        let mut t = vec![0, 0];
        let sols = s.solve(&mut t, &|_, t: &[usize]| (t[0] + t[1]) % 3 == 0);
        assert_eq!(sols, vec![vec![0, 0], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn failing_upfront_instance_empties_the_result() {
        let s = CellSearch::new(vec![1], 2, 2, 1, |_, read| read(0));
        let mut t = vec![0, 0];
        assert!(s.solve(&mut t, &|_, _: &[usize]| false).is_empty());
    }
}
