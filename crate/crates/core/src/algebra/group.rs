use crate::diagnostics::{Law, Report};
use crate::error::{Error, Result};

/// A finite group stored as a dense multiplication table.
///
/// Elements are the indices `0..order`; index 0 is always the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

/// Checks that `rows` is a square table with entries in range.
pub(crate) fn check_square(rows: &[Vec<usize>], what: &str) -> Result<usize> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Malformed(format!("{what}: empty table")));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!(
                "{what}: row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::Malformed(format!(
                "{what}: row {i} references element {v}, order is {n}"
            )));
        }
    }
    Ok(n)
}

/// Verifies the group axioms for a multiplication table with identity 0.
///
/// Only the first failing tuple of each axiom is reported.
pub fn verify_group(rows: &[Vec<usize>]) -> Result<Report> {
    let n = check_square(rows, "mul")?;
    let mut report = Report::default();
    let m = |a: usize, b: usize| rows[a][b];

    if let Some(x) = (0..n).find(|&x| m(0, x) != x || m(x, 0) != x) {
        report.push(Law::Identity, vec![x]);
    }
    if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| m(x, y) == 0 && m(y, x) == 0)) {
        report.push(Law::Inverse, vec![x]);
    }
    'assoc: for x in 0..n {
        for y in 0..n {
            let xy = m(x, y);
            for z in 0..n {
                if m(xy, z) != m(x, m(y, z)) {
                    report.push(Law::Associativity, vec![x, y, z]);
                    break 'assoc;
                }
            }
        }
    }
    Ok(report)
}

impl FiniteGroup {
    /// Builds a group from its table, rejecting anything that is not a group.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let report = verify_group(rows)?;
        if !report.is_valid() {
            return Err(Error::invalid("group table", report));
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(rows: &[Vec<usize>]) -> Self {
        let n = rows.len();
        let mul: Vec<usize> = rows.iter().flatten().copied().collect();
        Self::from_flat_unchecked(n, mul)
    }

    pub(crate) fn from_flat_unchecked(order: usize, mul: Vec<usize>) -> Self {
        let inv = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| mul[x * order + y] == 0)
                    .unwrap_or(0)
            })
            .collect();
        FiniteGroup { order, mul, inv }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The cyclic group of order `n`; element `i` is the `i`-th power of a generator.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_flat_unchecked(n, mul)
    }

    /// Dihedral group of order `2n` with rotation `b` and reflection `a`.
    ///
    /// Element `j * n + i` is `a^j b^i`, so `b` is index 1 and `a` is index `n`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0);
        let order = 2 * n;
        let mut mul = vec![0; order * order];
        for p in 0..order {
            let (j, i) = (p / n, p % n);
            for q in 0..order {
                let (l, k) = (q / n, q % n);
                // b^i a = a b^{-i}
                let shifted = if l == 1 { (n - i) % n } else { i };
                mul[p * order + q] = ((j + l) % 2) * n + (shifted + k) % n;
            }
        }
        Self::from_flat_unchecked(order, mul)
    }

    /// Direct product; the pair `(a, b)` has index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n1, n2) = (self.order, other.order);
        let order = n1 * n2;
        let mut mul = vec![0; order * order];
        for p in 0..order {
            for q in 0..order {
                mul[p * order + q] =
                    self.mul(p / n2, q / n2) * n2 + other.mul(p % n2, q % n2);
            }
        }
        Self::from_flat_unchecked(order, mul)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `y x y⁻¹`.
    #[inline]
    pub fn conj(&self, y: usize, x: usize) -> usize {
        self.mul(self.mul(y, x), self.inv[y])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted indices of the elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// `a^k` for `k >= 0`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// True if `subset` is closed under the product and inverses and contains 1.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &s in subset {
            if s >= self.order {
                return false;
            }
            member[s] = true;
        }
        member[0]
            && subset.iter().all(|&a| {
                member[self.inv(a)] && subset.iter().all(|&b| member[self.mul(a, b)])
            })
    }

    pub fn is_normal_subgroup(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        subset.iter().for_each(|&s| member[s] = true);
        self.is_subgroup(subset)
            && self
                .elements()
                .all(|g| subset.iter().all(|&h| member[self.conj(g, h)]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_table_is_a_group() {
        let report = verify_group(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(report.is_valid());
    }

    #[test]
    fn missing_inverse_is_reported() {
        let report = verify_group(&[vec![0, 1], vec![1, 1]]).unwrap();
        assert!(!report.is_valid());
        assert_eq!(report.first(Law::Inverse).unwrap().witness, vec![1]);
    }

    #[test]
    fn non_square_table_is_a_format_error() {
        assert!(matches!(
            verify_group(&[vec![0, 1], vec![1]]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            verify_group(&[vec![0, 2], vec![1, 0]]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn non_associative_table_names_a_triple() {
        // A Latin square with identity 0 that is not associative.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let report = verify_group(&rows).unwrap();
        assert!(report.has(Law::Associativity));
        assert_eq!(report.violations().len(), 1);
    }

    #[test]
    fn dihedral_relations() {
        let d4 = FiniteGroup::dihedral(4);
        assert!(verify_group(&d4.rows()).unwrap().is_valid());
        let (a, b) = (4, 1);
        assert_eq!(d4.mul(a, a), 0);
        assert_eq!(d4.pow(b, 4), 0);
        // a b a = b⁻¹
        assert_eq!(d4.mul(d4.mul(a, b), a), d4.inv(b));
        assert_eq!(d4.center(), vec![0, 2]);
    }

    #[test]
    fn klein_four_is_abelian_with_full_center() {
        let v = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert!(v.is_abelian());
        assert_eq!(v.center(), vec![0, 1, 2, 3]);
        assert_eq!(v.order_profile(), vec![1, 2, 2, 2]);
    }
}
