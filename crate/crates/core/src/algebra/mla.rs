use super::group::{check_square, FiniteGroup};
use crate::diagnostics::{Law, Report, DEFAULT_CAP};
use crate::error::{Error, Result};

/// A finite group together with a second operation `*` satisfying the
/// Ellis axioms:
///
/// * M1: `x*x = x*1 = 1*x = 1`
/// * M2: `x*(yz) = (x*y) · ʸ(x*z)`
/// * M3: `(xy)*z = ˣ(y*z) · (x*z)`
/// * M4: `((x*y)*ʸz) · ((y*z)*ᶻx) · ((z*x)*ˣy) = 1`
/// * M5: `ᶻ(x*y) = ᶻx * ᶻy`
///
/// where `ʸw = y w y⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultLieAlgebra {
    group: FiniteGroup,
    star: Vec<usize>,
}

/// Checks M1 through M5 and reports every violated (axiom, tuple), up to `cap`.
pub fn verify_mla_with_cap(group: &FiniteGroup, star: &[usize], cap: usize) -> Report {
    let n = group.order();
    let mut report = Report::with_cap(cap);
    let s = |a: usize, b: usize| star[a * n + b];
    let m = |a: usize, b: usize| group.mul(a, b);
    let c = |y: usize, w: usize| group.conj(y, w);

    for x in 0..n {
        if s(x, x) != 0 || s(x, 0) != 0 || s(0, x) != 0 {
            if !report.push(Law::M1, vec![x]) {
                return report;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = s(x, y);
            for z in 0..n {
                if s(x, m(y, z)) != m(xy, c(y, s(x, z))) && !report.push(Law::M2, vec![x, y, z])
                {
                    return report;
                }
                if s(m(x, y), z) != m(c(x, s(y, z)), s(x, z))
                    && !report.push(Law::M3, vec![x, y, z])
                {
                    return report;
                }
                let jacobi = m(
                    m(s(xy, c(y, z)), s(s(y, z), c(z, x))),
                    s(s(z, x), c(x, y)),
                );
                if jacobi != 0 && !report.push(Law::M4, vec![x, y, z]) {
                    return report;
                }
                if c(z, xy) != s(c(z, x), c(z, y)) && !report.push(Law::M5, vec![x, y, z]) {
                    return report;
                }
            }
        }
    }
    report
}

pub fn verify_mla_parts(group: &FiniteGroup, star: &[usize]) -> Report {
    verify_mla_with_cap(group, star, DEFAULT_CAP)
}

impl MultLieAlgebra {
    /// Builds and verifies a multiplicative Lie algebra.
    pub fn new(group: FiniteGroup, star_rows: &[Vec<usize>]) -> Result<Self> {
        let n = check_square(star_rows, "star")?;
        if n != group.order() {
            return Err(Error::Malformed(format!(
                "star table has order {n}, group has order {}",
                group.order()
            )));
        }
        let star: Vec<usize> = star_rows.iter().flatten().copied().collect();
        let report = verify_mla_parts(&group, &star);
        if !report.is_valid() {
            return Err(Error::invalid("multiplicative Lie algebra", report));
        }
        Ok(MultLieAlgebra { group, star })
    }

    pub(crate) fn from_flat_unchecked(group: FiniteGroup, star: Vec<usize>) -> Self {
        debug_assert_eq!(star.len(), group.order() * group.order());
        MultLieAlgebra { group, star }
    }

    /// Builds from flat tables, verifying the axioms.
    pub(crate) fn from_flat(group: FiniteGroup, star: Vec<usize>) -> Result<Self> {
        let report = verify_mla_parts(&group, &star);
        if !report.is_valid() {
            return Err(Error::invalid("multiplicative Lie algebra", report));
        }
        Ok(MultLieAlgebra { group, star })
    }

    /// Any group with `x*y = 1` everywhere.
    pub fn trivial_star(group: FiniteGroup) -> Self {
        let n = group.order();
        MultLieAlgebra {
            group,
            star: vec![0; n * n],
        }
    }

    /// The commutator structure `x*y = x y x⁻¹ y⁻¹`.
    pub fn commutator(group: FiniteGroup) -> Self {
        let n = group.order();
        let star = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                group.mul(group.mul(x, y), group.mul(group.inv(x), group.inv(y)))
            })
            .collect();
        MultLieAlgebra { group, star }
    }

    pub fn verify(&self) -> Report {
        verify_mla_parts(&self.group, &self.star)
    }

    #[inline]
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.group.inv(a)
    }

    #[inline]
    pub fn conj(&self, y: usize, x: usize) -> usize {
        self.group.conj(y, x)
    }

    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.star[a * self.group.order() + b]
    }

    pub fn star_rows(&self) -> Vec<Vec<usize>> {
        self.star
            .chunks(self.group.order())
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.group.elements()
    }

    pub fn has_trivial_star(&self) -> bool {
        self.star.iter().all(|&v| v == 0)
    }

    /// Group-theoretic center, sorted.
    pub fn center(&self) -> Vec<usize> {
        self.group.center()
    }

    /// `{x : x*y = 1 for all y}`, sorted.
    pub fn lie_center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| self.elements().all(|y| self.star(x, y) == 0))
            .collect()
    }

    /// Componentwise structure on the product; `(a, b)` has index `a * |other| + b`.
    pub fn direct_product(&self, other: &MultLieAlgebra) -> MultLieAlgebra {
        let n2 = other.order();
        let group = self.group.direct_product(&other.group);
        let n = group.order();
        let star = (0..n * n)
            .map(|i| {
                let (p, q) = (i / n, i % n);
                self.star(p / n2, q / n2) * n2 + other.star(p % n2, q % n2)
            })
            .collect();
        MultLieAlgebra { group, star }
    }

    /// True if `subset` is a normal subgroup closed under `*` with every element.
    pub fn is_ideal(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        subset.iter().for_each(|&s| member[s] = true);
        self.group.is_normal_subgroup(subset)
            && subset
                .iter()
                .all(|&h| self.elements().all(|g| member[self.star(h, g)]))
    }

    /// Restricts to a subalgebra. Elements are relabelled in increasing index
    /// order, so the identity stays at 0. Returns the subalgebra and the
    /// embedding back into `self`.
    pub fn subalgebra(&self, subset: &[usize]) -> Result<(MultLieAlgebra, Vec<usize>)> {
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &e) in elems.iter().enumerate() {
            index[e] = i;
        }
        let k = elems.len();
        if elems.first() != Some(&0) {
            return Err(Error::Precondition("subalgebra must contain the identity".into()));
        }
        let mut mul = Vec::with_capacity(k * k);
        let mut star = Vec::with_capacity(k * k);
        for &a in &elems {
            for &b in &elems {
                let (p, s) = (index[self.mul(a, b)], index[self.star(a, b)]);
                if p == usize::MAX || s == usize::MAX {
                    return Err(Error::Precondition(format!(
                        "subset is not closed under the operations at ({a}, {b})"
                    )));
                }
                mul.push(p);
                star.push(s);
            }
        }
        if elems.iter().any(|&a| index[self.inv(a)] == usize::MAX) {
            return Err(Error::Precondition("subset is not closed under inverses".into()));
        }
        let group = FiniteGroup::from_flat_unchecked(k, mul);
        Ok((MultLieAlgebra { group, star }, elems))
    }

    /// Quotient by an ideal. Cosets are ordered by their least element, and
    /// the returned vector maps each element of `self` to its coset.
    pub fn quotient(&self, ideal: &[usize]) -> Result<(MultLieAlgebra, Vec<usize>)> {
        if !self.is_ideal(ideal) {
            return Err(Error::Precondition("subset is not an ideal".into()));
        }
        let n = self.order();
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if proj[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &h in ideal {
                proj[self.mul(g, h)] = c;
            }
        }
        let k = reps.len();
        let mut mul = Vec::with_capacity(k * k);
        let mut star = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                mul.push(proj[self.mul(a, b)]);
                star.push(proj[self.star(a, b)]);
            }
        }
        let group = FiniteGroup::from_flat_unchecked(k, mul);
        Ok((MultLieAlgebra { group, star }, proj))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FiniteGroup {
        FiniteGroup::cyclic(2)
    }

    #[test]
    fn trivial_star_is_valid() {
        for g in [z2(), FiniteGroup::cyclic(4), FiniteGroup::dihedral(4)] {
            assert!(MultLieAlgebra::trivial_star(g).verify().is_valid());
        }
    }

    #[test]
    fn commutator_star_is_valid() {
        let m = MultLieAlgebra::commutator(FiniteGroup::dihedral(4));
        assert!(m.verify().is_valid());
        let s3 = MultLieAlgebra::commutator(FiniteGroup::dihedral(3));
        assert!(s3.verify().is_valid());
    }

    #[test]
    fn self_star_nontrivial_violates_m1() {
        let err = MultLieAlgebra::new(z2(), &[vec![0, 0], vec![0, 1]]).unwrap_err();
        match err {
            Error::Invalid { report, .. } => {
                assert!(report.has(Law::M1));
                assert_eq!(report.first(Law::M1).unwrap().witness, vec![1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lie_center_of_trivial_star_is_everything() {
        let m = MultLieAlgebra::trivial_star(FiniteGroup::dihedral(4));
        assert_eq!(m.lie_center(), (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn product_order_and_validity() {
        let a = MultLieAlgebra::commutator(FiniteGroup::dihedral(4));
        let b = MultLieAlgebra::trivial_star(z2());
        let p = a.direct_product(&b);
        assert_eq!(p.order(), 16);
        assert!(p.verify().is_valid());
        let t = MultLieAlgebra::trivial_star(z2()).direct_product(&b);
        assert!(t.has_trivial_star());
    }

    #[test]
    fn quotient_by_center_of_d4() {
        let m = MultLieAlgebra::commutator(FiniteGroup::dihedral(4));
        let (q, proj) = m.quotient(&[0, 2]).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.verify().is_valid());
        assert_eq!(proj[0], 0);
        assert_eq!(proj[2], 0);
        assert!(q.group().is_abelian());
        // the commutator of D4 lands in the center, so the quotient star is trivial
        assert!(q.has_trivial_star());
    }

    #[test]
    fn non_ideal_quotient_is_rejected() {
        let m = MultLieAlgebra::commutator(FiniteGroup::dihedral(4));
        // {1, a} is not normal
        assert!(m.quotient(&[0, 4]).is_err());
    }
}
