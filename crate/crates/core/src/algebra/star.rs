use super::group::FiniteGroup;
use super::mla::{verify_mla_with_cap, MultLieAlgebra};
use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;

/// Finds every star table on `group` that satisfies M1–M5 and the given
/// `(x, y, value)` constraints, in row-major lexicographic order.
///
/// Cells are filled in row-major order with values tried in ascending order.
/// Each assignment is pushed through its conjugation orbit (M5), and any
/// M2/M3/M4 instance whose cells are all known is checked immediately.
/// Contradictory constraints give an empty list.
pub fn star_completion(
    group: &FiniteGroup,
    constraints: &[(usize, usize, usize)],
) -> Result<Vec<MultLieAlgebra>> {
    let n = group.order();
    if let Some(c) = constraints.iter().find(|&&(x, y, v)| x >= n || y >= n || v >= n) {
        return Err(Error::Precondition(format!(
            "constraint {c:?} references an element outside a group of order {n}"
        )));
    }
    let mut search = Search {
        group,
        n,
        star: vec![UNSET; n * n],
        out: Vec::new(),
    };
    // M1
    for x in 0..n {
        for cell in [x * n + x, x * n, x] {
            search.star[cell] = 0;
        }
    }
    let mut trail = Vec::new();
    for &(x, y, v) in constraints {
        if !search.assign(x * n + y, v, &mut trail) {
            return Ok(Vec::new());
        }
    }
    if !search.partial_ok() {
        return Ok(Vec::new());
    }
    search.run(0);
    let mut out = search.out;
    out.sort();
    out.dedup();
    Ok(out
        .into_iter()
        .map(|star| MultLieAlgebra::from_flat_unchecked(group.clone(), star))
        .collect())
}

struct Search<'a> {
    group: &'a FiniteGroup,
    n: usize,
    star: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Sets `cell` to `v` and every conjugate cell to the conjugate value.
    /// Newly set cells are pushed onto `trail`. Returns false on conflict.
    fn assign(&mut self, cell: usize, v: usize, trail: &mut Vec<usize>) -> bool {
        let (n, g) = (self.n, self.group);
        let (x, y) = (cell / n, cell % n);
        for z in 0..n {
            let c = g.conj(z, x) * n + g.conj(z, y);
            let w = g.conj(z, v);
            match self.star[c] {
                UNSET => {
                    self.star[c] = w;
                    trail.push(c);
                }
                old if old != w => return false,
                _ => {}
            }
        }
        true
    }

    fn get(&self, a: usize, b: usize) -> Option<usize> {
        match self.star[a * self.n + b] {
            UNSET => None,
            v => Some(v),
        }
    }

    /// Checks every M2/M3/M4 instance whose cells are all assigned.
    fn partial_ok(&self) -> bool {
        let (n, g) = (self.n, self.group);
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    // M2
                    if let (Some(l), Some(a), Some(b)) =
                        (self.get(x, g.mul(y, z)), xy, self.get(x, z))
                    {
                        if l != g.mul(a, g.conj(y, b)) {
                            return false;
                        }
                    }
                    // M3
                    if let (Some(l), Some(a), Some(b)) =
                        (self.get(g.mul(x, y), z), self.get(y, z), self.get(x, z))
                    {
                        if l != g.mul(g.conj(x, a), b) {
                            return false;
                        }
                    }
                    // M4
                    let term = |p: Option<usize>, q: usize| p.and_then(|p| self.get(p, q));
                    if let (Some(a), Some(b), Some(c)) = (
                        term(xy, g.conj(y, z)),
                        term(self.get(y, z), g.conj(z, x)),
                        term(self.get(z, x), g.conj(x, y)),
                    ) {
                        if g.mul(g.mul(a, b), c) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, from: usize) {
        let Some(cell) = (from..self.n * self.n).find(|&c| self.star[c] == UNSET) else {
            if verify_mla_with_cap(self.group, &self.star, 1).is_valid() {
                self.out.push(self.star.clone());
            }
            return;
        };
        for v in 0..self.n {
            let mut trail = Vec::new();
            if self.assign(cell, v, &mut trail) && self.partial_ok() {
                self.run(cell + 1);
            }
            for c in trail {
                self.star[c] = UNSET;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_has_only_the_trivial_star() {
        let all = star_completion(&FiniteGroup::cyclic(2), &[]).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].has_trivial_star());
    }

    #[test]
    fn z2_with_nontrivial_self_star_is_empty() {
        assert!(star_completion(&FiniteGroup::cyclic(2), &[(1, 1, 1)])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn out_of_range_constraint_is_rejected() {
        assert!(star_completion(&FiniteGroup::cyclic(2), &[(2, 1, 0)]).is_err());
    }

    #[test]
    fn d4_generator_constraints_have_a_unique_completion() {
        let d4 = FiniteGroup::dihedral(4);
        let (a, b) = (4, 1);
        let all = star_completion(&d4, &[(a, a, 0), (b, b, 0), (a, b, b)]).unwrap();
        assert_eq!(all.len(), 1);
        let m = &all[0];
        assert!(m.verify().is_valid());
        let expected = vec![
            vec![0, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 3, 3, 3, 3],
            vec![0, 0, 0, 0, 2, 2, 2, 2],
            vec![0, 0, 0, 0, 1, 1, 1, 1],
            vec![0, 1, 2, 3, 0, 3, 2, 1],
            vec![0, 1, 2, 3, 1, 0, 3, 2],
            vec![0, 1, 2, 3, 2, 1, 0, 3],
            vec![0, 1, 2, 3, 3, 2, 1, 0],
        ];
        assert_eq!(m.star_rows(), expected);
    }

    #[test]
    fn small_group_counts() {
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        let count = |g: &FiniteGroup| star_completion(g, &[]).unwrap().len();
        assert_eq!(count(&FiniteGroup::trivial()), 1);
        assert_eq!(count(&FiniteGroup::cyclic(3)), 1);
        assert_eq!(count(&FiniteGroup::cyclic(4)), 1);
        assert_eq!(count(&v4), 4);
    }

    #[test]
    fn results_are_sorted_distinct_and_valid() {
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        let all = star_completion(&v4, &[]).unwrap();
        for w in all.windows(2) {
            assert!(w[0].star_rows() < w[1].star_rows());
        }
        assert!(all.iter().all(|m| m.verify().is_valid()));
    }
}
