use rayon::prelude::*;

use super::Extension;
use crate::algebra::GroupMap;
use crate::error::{Error, Result};

/// Decodes the `i`-th normalized map `K → H` in lexicographic order.
pub(crate) fn nth_normalized_map(i: u128, k_order: usize, h_order: usize) -> Vec<usize> {
    let mut g = vec![0; k_order];
    let mut code = i;
    for slot in g.iter_mut().skip(1).rev() {
        *slot = (code % h_order as u128) as usize;
        code /= h_order as u128;
    }
    g
}

/// Number of normalized maps `K → H`, `|H|^(|K|-1)`.
pub(crate) fn normalized_map_count(k_order: usize, h_order: usize) -> u128 {
    (h_order as u128).pow((k_order - 1) as u32)
}

/// Searches for an equivalence `E1 → E2`.
///
/// Any equivalence fixes `H` pointwise and covers the identity of `K`, so by
/// unique decomposition it has the form `ι(a) t1(x) ↦ ι(a g(x)) t2(x)` for a
/// normalized `g: K → H`, with `t1`, `t2` the canonical sections. Each such
/// map is tested for preserving both operations; the first witness in
/// lexicographic order of `g` is returned.
pub fn equivalent_extensions(e1: &Extension, e2: &Extension) -> Result<Option<GroupMap>> {
    if e1.kernel() != e2.kernel() || e1.quotient() != e2.quotient() {
        return Err(Error::Precondition(
            "extensions must share the same H and K".into(),
        ));
    }
    let (t1, t2) = (e1.canonical_section(), e2.canonical_section());
    let (k, m) = (e1.quotient().order(), e1.kernel().order());
    let h = e1.kernel_group();
    let (g1, g2) = (e1.total(), e2.total());
    // decompositions of E1's elements are shared by every candidate
    let parts: Vec<(usize, usize)> = g1.elements().map(|u| e1.decompose(&t1, u)).collect();
    let count = normalized_map_count(k, m);
    let hit = (0..count).into_par_iter().find_first(|&i| {
        let g = nth_normalized_map(i, k, m);
        let mu: Vec<usize> = parts
            .iter()
            .map(|&(a, x)| e2.compose(&t2, h.mul(a, g[x]), x))
            .collect();
        g1.elements().all(|u| {
            g1.elements().all(|v| {
                mu[g1.mul(u, v)] == g2.mul(mu[u], mu[v])
                    && mu[g1.star(u, v)] == g2.star(mu[u], mu[v])
            })
        })
    });
    Ok(hit.map(|i| GroupMap::from_table_unchecked(m, nth_normalized_map(i, k, m))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteGroup, MultLieAlgebra};
    use crate::extensions::tests::z4_over_z2;

    #[test]
    fn extension_is_equivalent_to_itself_via_trivial_map() {
        let e = z4_over_z2();
        let g = equivalent_extensions(&e, &e).unwrap().unwrap();
        assert_eq!(g.table(), &[0, 0]);
    }

    #[test]
    fn z4_and_klein_are_not_equivalent() {
        let split = Extension::split(
            &FiniteGroup::cyclic(2),
            &MultLieAlgebra::trivial_star(FiniteGroup::cyclic(2)),
        )
        .unwrap();
        assert!(equivalent_extensions(&z4_over_z2(), &split).unwrap().is_none());
    }

    #[test]
    fn mismatched_quotients_are_rejected() {
        let other = Extension::split(
            &FiniteGroup::cyclic(2),
            &MultLieAlgebra::trivial_star(FiniteGroup::cyclic(3)),
        )
        .unwrap();
        assert!(equivalent_extensions(&z4_over_z2(), &other).is_err());
    }

    #[test]
    fn map_decoding_is_lexicographic() {
        let all: Vec<Vec<usize>> = (0..normalized_map_count(3, 2))
            .map(|i| nth_normalized_map(i, 3, 2))
            .collect();
        assert_eq!(
            all,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]
        );
    }
}
