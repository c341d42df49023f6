use super::group::FiniteGroup;
use super::mla::MultLieAlgebra;
use crate::diagnostics::{Law, Report};
use crate::error::{Error, Result};

/// A set map between finite carriers, stored as its table of images.
///
/// Homomorphism laws are not intrinsic; they are checked against concrete
/// structures with [`group_hom_report`] and [`mla_hom_report`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupMap {
    codomain: usize,
    table: Vec<usize>,
}

impl GroupMap {
    pub fn new(codomain: usize, table: Vec<usize>) -> Result<Self> {
        if table.is_empty() {
            return Err(Error::Malformed("map with empty domain".into()));
        }
        if let Some((x, &v)) = table.iter().enumerate().find(|(_, &v)| v >= codomain) {
            return Err(Error::Malformed(format!(
                "map sends {x} to {v}, codomain has order {codomain}"
            )));
        }
        Ok(GroupMap { codomain, table })
    }

    pub(crate) fn from_table_unchecked(codomain: usize, table: Vec<usize>) -> Self {
        GroupMap { codomain, table }
    }

    pub fn identity(n: usize) -> Self {
        GroupMap {
            codomain: n,
            table: (0..n).collect(),
        }
    }

    /// The map sending everything to the identity.
    pub fn trivial(domain: usize, codomain: usize) -> Self {
        GroupMap {
            codomain,
            table: vec![0; domain],
        }
    }

    #[inline]
    pub fn domain(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn codomain(&self) -> usize {
        self.codomain
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `self ∘ inner`, i.e. apply `inner` first.
    pub fn after(&self, inner: &GroupMap) -> Result<GroupMap> {
        if inner.codomain != self.domain() {
            return Err(Error::Precondition(format!(
                "cannot compose: inner codomain {} vs outer domain {}",
                inner.codomain,
                self.domain()
            )));
        }
        Ok(GroupMap {
            codomain: self.codomain,
            table: inner.table.iter().map(|&x| self.table[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain];
        self.table.iter().for_each(|&v| seen[v] = true);
        seen.into_iter().all(|b| b)
    }

    pub fn is_normalized(&self) -> bool {
        self.table[0] == 0
    }

    /// Sorted image.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.table.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Sorted preimage of the identity.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.domain()).filter(|&x| self.table[x] == 0).collect()
    }
}

fn check_dims(map: &GroupMap, domain: usize, codomain: usize) -> Result<()> {
    if map.domain() != domain || map.codomain() != codomain {
        return Err(Error::Malformed(format!(
            "map is {} -> {}, structures are {domain} -> {codomain}",
            map.domain(),
            map.codomain()
        )));
    }
    Ok(())
}

/// Checks `map(xy) = map(x) map(y)` over all pairs.
pub fn group_hom_report(map: &GroupMap, dom: &FiniteGroup, cod: &FiniteGroup) -> Result<Report> {
    check_dims(map, dom.order(), cod.order())?;
    let mut report = Report::default();
    'outer: for x in dom.elements() {
        for y in dom.elements() {
            if map.apply(dom.mul(x, y)) != cod.mul(map.apply(x), map.apply(y))
                && !report.push(Law::GroupHom, vec![x, y])
            {
                break 'outer;
            }
        }
    }
    Ok(report)
}

/// Checks both the group law and `map(x*y) = map(x) * map(y)`.
pub fn mla_hom_report(
    map: &GroupMap,
    dom: &MultLieAlgebra,
    cod: &MultLieAlgebra,
) -> Result<Report> {
    let mut report = group_hom_report(map, dom.group(), cod.group())?;
    'outer: for x in dom.elements() {
        for y in dom.elements() {
            if map.apply(dom.star(x, y)) != cod.star(map.apply(x), map.apply(y))
                && !report.push(Law::StarHom, vec![x, y])
            {
                break 'outer;
            }
        }
    }
    Ok(report)
}

/// All group homomorphisms `dom -> cod`, in lexicographic order of their tables.
///
/// Elements are assigned in index order. An element that is a product of two
/// earlier elements has a forced image, so only a generating set branches.
pub fn enumerate_group_homs(dom: &FiniteGroup, cod: &FiniteGroup) -> Vec<GroupMap> {
    let n = dom.order();
    // forced[x] = Some((a, b)) with a, b < x and ab = x
    let forced: Vec<Option<(usize, usize)>> = (0..n)
        .map(|x| {
            (1..x)
                .flat_map(|a| (1..x).map(move |b| (a, b)))
                .find(|&(a, b)| dom.mul(a, b) == x)
        })
        .collect();
    let mut out = Vec::new();
    let mut table = vec![usize::MAX; n];
    table[0] = 0;
    homs_rec(dom, cod, &forced, 1, &mut table, &mut out);
    out.sort();
    out
}

fn consistent_upto(dom: &FiniteGroup, cod: &FiniteGroup, table: &[usize], x: usize) -> bool {
    // every relation a·b = c among assigned elements that involves x
    for a in 0..=x {
        for b in 0..=x {
            if a != x && b != x && dom.mul(a, b) != x {
                continue;
            }
            let c = dom.mul(a, b);
            if c <= x && table[c] != cod.mul(table[a], table[b]) {
                return false;
            }
        }
    }
    true
}

fn homs_rec(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    forced: &[Option<(usize, usize)>],
    x: usize,
    table: &mut Vec<usize>,
    out: &mut Vec<GroupMap>,
) {
    let n = dom.order();
    if x == n {
        out.push(GroupMap::from_table_unchecked(cod.order(), table.clone()));
        return;
    }
    let candidates: Vec<usize> = match forced[x] {
        Some((a, b)) => vec![cod.mul(table[a], table[b])],
        None => cod.elements().collect(),
    };
    for v in candidates {
        table[x] = v;
        if consistent_upto(dom, cod, table, x) {
            homs_rec(dom, cod, forced, x + 1, table, out);
        }
    }
    table[x] = usize::MAX;
}

/// All homomorphisms of multiplicative Lie algebras, in lexicographic order.
pub fn enumerate_mla_homs(dom: &MultLieAlgebra, cod: &MultLieAlgebra) -> Vec<GroupMap> {
    enumerate_group_homs(dom.group(), cod.group())
        .into_iter()
        .filter(|m| {
            dom.elements().all(|x| {
                dom.elements()
                    .all(|y| m.apply(dom.star(x, y)) == cod.star(m.apply(x), m.apply(y)))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Filters every set map; only usable for tiny orders.
    fn brute_force_homs(dom: &FiniteGroup, cod: &FiniteGroup) -> Vec<Vec<usize>> {
        let (n, m) = (dom.order(), cod.order());
        let total = m.pow(n as u32);
        (0..total)
            .map(|mut code| {
                let mut t = vec![0; n];
                for slot in t.iter_mut().rev() {
                    *slot = code % m;
                    code /= m;
                }
                t
            })
            .filter(|t| {
                dom.elements().all(|x| {
                    dom.elements()
                        .all(|y| t[dom.mul(x, y)] == cod.mul(t[x], t[y]))
                })
            })
            .collect()
    }

    #[test]
    fn matches_brute_force_on_small_groups() {
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        let groups = [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            v4,
            FiniteGroup::dihedral(3),
        ];
        for d in &groups {
            for c in &groups {
                let fast: Vec<Vec<usize>> = enumerate_group_homs(d, c)
                    .into_iter()
                    .map(|m| m.table().to_vec())
                    .collect();
                assert_eq!(fast, brute_force_homs(d, c), "{} -> {}", d.order(), c.order());
            }
        }
    }

    #[test]
    fn identity_is_a_hom_to_itself() {
        let d4 = FiniteGroup::dihedral(4);
        let homs = enumerate_group_homs(&d4, &d4);
        assert!(homs.contains(&GroupMap::identity(8)));
        assert_eq!(homs[0], GroupMap::trivial(8, 8));
    }

    #[test]
    fn z2_into_z3_is_trivial_only() {
        let homs = enumerate_group_homs(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3));
        assert_eq!(homs, vec![GroupMap::trivial(2, 3)]);
    }

    #[test]
    fn star_law_filters_group_homs() {
        let s3 = MultLieAlgebra::commutator(FiniteGroup::dihedral(3));
        let flat = MultLieAlgebra::trivial_star(FiniteGroup::dihedral(3));
        let group_homs = enumerate_group_homs(s3.group(), flat.group());
        let mla_homs = enumerate_mla_homs(&s3, &flat);
        // identity is a group hom but does not kill commutators
        assert!(group_homs.contains(&GroupMap::identity(6)));
        assert!(!mla_homs.contains(&GroupMap::identity(6)));
        assert!(mla_homs.iter().all(|m| group_homs.contains(m)));
    }

    #[test]
    fn hom_report_names_pair() {
        let z2 = FiniteGroup::cyclic(2);
        let bad = GroupMap::new(2, vec![1, 0]).unwrap();
        let r = group_hom_report(&bad, &z2, &z2).unwrap();
        assert_eq!(r.first(Law::GroupHom).unwrap().witness, vec![0, 0]);
    }
}
