//! Randomized invariants over the desk-scale enumeration.

use std::sync::OnceLock;

use proptest::prelude::*;

use mla_core::acceptance::desk_configs;
use mla_core::algebra::{end_mla, enumerate_group_homs, enumerate_mla_homs, star_completion};
use mla_core::cohomology::{coboundary, CohomologyGroup, SearchOptions};
use mla_core::extensions::{decompose, enumerate_sections, extract_center_data, extract_lie_center_data};
use mla_core::factor_systems::{realize, validate, FactorSystem, Mode, PairFunction};
use mla_core::io;
use mla_core::samples::klein_four;
use mla_core::{FiniteGroup, GroupMap, MultLieAlgebra};

/// Cohomology of every desk configuration with a nonempty `Z²`.
fn groups() -> &'static [CohomologyGroup] {
    static GROUPS: OnceLock<Vec<CohomologyGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        desk_configs()
            .iter()
            .map(|c| CohomologyGroup::compute(&c.setting, SearchOptions::default()).unwrap())
            .filter(|g| g.z2_order() > 0)
            .collect()
    })
}

fn pick<T>(items: &[T], i: usize) -> &T {
    &items[i % items.len()]
}

/// A normalized map `K → H` chosen by `seed`.
fn normalized_map(g: &CohomologyGroup, seed: &[usize]) -> GroupMap {
    let (n, m) = (g.setting().k_order(), g.setting().h_order());
    let table = (0..n).map(|x| if x == 0 { 0 } else { seed[x % seed.len()] % m }).collect();
    GroupMap::new(m, table).unwrap()
}

fn pointwise(g: &CohomologyGroup, a: &GroupMap, b: &GroupMap) -> GroupMap {
    let h = &g.setting().h;
    let table = (0..a.domain()).map(|x| h.mul(a.apply(x), b.apply(x))).collect();
    GroupMap::new(h.order(), table).unwrap()
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=6).prop_map(FiniteGroup::cyclic),
        Just(klein_four()),
        Just(FiniteGroup::dihedral(3)),
        Just(FiniteGroup::dihedral(4)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cocycles_form_an_abelian_group(i in any::<usize>(), a in any::<usize>(), b in any::<usize>()) {
        let g = pick(groups(), i);
        let h = &g.setting().h;
        let (p, q) = (pick(g.cocycles(), a), pick(g.cocycles(), b));
        let pq = p.product(q, h);
        prop_assert!(g.class_of(&pq).is_some(), "product left Z²");
        prop_assert!(g.class_of(&p.inverse(h)).is_some(), "inverse left Z²");
        prop_assert_eq!(&pq, &q.product(p, h));
        prop_assert!(validate(g.setting(), &pq).unwrap().is_valid());
    }

    #[test]
    fn coboundary_map_is_a_homomorphism(i in any::<usize>(), s in prop::collection::vec(any::<usize>(), 1..5), t in prop::collection::vec(any::<usize>(), 1..5)) {
        let g = pick(groups(), i);
        let h = &g.setting().h;
        let (u, v) = (normalized_map(g, &s), normalized_map(g, &t));
        let cu = coboundary(g.setting(), &u).unwrap();
        let cv = coboundary(g.setting(), &v).unwrap();
        let cuv = coboundary(g.setting(), &pointwise(g, &u, &v)).unwrap();
        prop_assert_eq!(cuv, cu.product(&cv, h));
        prop_assert_eq!(g.class_of(&cu), Some(0));
    }

    #[test]
    fn class_product_is_well_defined(i in any::<usize>(), a in any::<usize>(), b in any::<usize>(), s in prop::collection::vec(any::<usize>(), 1..5)) {
        let g = pick(groups(), i);
        let h = &g.setting().h;
        let (p, q) = (pick(g.cocycles(), a), pick(g.cocycles(), b));
        let (cp, cq) = (g.class_of(p).unwrap(), g.class_of(q).unwrap());
        prop_assert_eq!(g.class_of(&p.product(q, h)), Some(g.class_product(cp, cq)));
        let shifted = p.product(&coboundary(g.setting(), &normalized_map(g, &s)).unwrap(), h);
        prop_assert_eq!(g.class_of(&shifted), Some(cp));
    }

    #[test]
    fn realize_then_extract_is_the_identity(i in any::<usize>(), a in any::<usize>()) {
        let g = pick(groups(), i);
        let fs = FactorSystem::new(g.setting().clone(), pick(g.cocycles(), a).clone()).unwrap();
        let (ext, t) = realize(&fs).unwrap();
        let back = match fs.mode() {
            Mode::Center => extract_center_data(&ext, &t).unwrap(),
            Mode::Lie => extract_lie_center_data(&ext, &t).unwrap(),
        };
        prop_assert_eq!(back, fs);
        for s in enumerate_sections(&ext).iter().take(8) {
            for x in ext.quotient().elements() {
                for a in ext.kernel().elements() {
                    let gx = ext.compose(s, a, x);
                    prop_assert_eq!(decompose(&ext, s, gx), (a, x));
                }
            }
        }
    }

    #[test]
    fn factor_systems_round_trip_through_text(i in any::<usize>(), a in any::<usize>()) {
        let g = pick(groups(), i);
        let fs = FactorSystem::new(g.setting().clone(), pick(g.cocycles(), a).clone()).unwrap();
        let text = io::serialize_factor_system(&fs);
        prop_assert_eq!(io::parse_factor_system(&text).unwrap(), fs);
        let report = g.report();
        let text = io::serialize_cohomology_report(&report);
        prop_assert_eq!(io::parse_cohomology_report(&text).unwrap(), report);
    }

    #[test]
    fn pair_functions_round_trip_through_text(n in 1usize..6, m in 1usize..5, seed in prop::collection::vec(any::<usize>(), 36)) {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| if x == 0 || y == 0 { 0 } else { seed[x * 6 + y] % m }).collect())
            .collect();
        let p = PairFunction::new(m, &rows).unwrap();
        let text = io::serialize_pairfn(&p);
        prop_assert_eq!(io::parse_pairfn(&text).unwrap(), p);
    }

    #[test]
    fn completions_are_distinct_valid_algebras(g in small_group(), picks in prop::collection::vec((any::<usize>(), any::<usize>()), 0..3)) {
        let n = g.order();
        // Constraints may admit no completion; an empty result is fine.
        let constraints: Vec<(usize, usize, usize)> =
            picks.iter().map(|&(x, y)| (x % n, y % n, 0)).collect();
        let all = star_completion(&g, &constraints).unwrap();
        for (i, m) in all.iter().enumerate() {
            prop_assert!(m.verify().is_valid());
            for &(x, y, v) in &constraints {
                prop_assert_eq!(m.star(x, y), v);
            }
            for other in &all[i + 1..] {
                prop_assert_ne!(m, other);
            }
            let text = io::serialize_mla(m);
            prop_assert_eq!(&io::parse_mla(&text).unwrap(), m);
        }
    }

    #[test]
    fn products_of_algebras_are_algebras(a in small_group(), b in small_group(), i in any::<usize>(), j in any::<usize>()) {
        prop_assume!(a.order() * b.order() <= 16);
        let ma = star_completion(&a, &[]).unwrap();
        let mb = star_completion(&b, &[]).unwrap();
        let p = pick(&ma, i).direct_product(pick(&mb, j));
        prop_assert_eq!(p.order(), a.order() * b.order());
        prop_assert!(p.verify().is_valid());
    }

    #[test]
    fn mla_homs_refine_group_homs(i in any::<usize>(), j in any::<usize>()) {
        let g = groups();
        let (k1, k2) = (&pick(g, i).setting().k, &pick(g, j).setting().k);
        let group_homs = enumerate_group_homs(k1.group(), k2.group());
        for m in enumerate_mla_homs(k1, k2) {
            prop_assert!(group_homs.contains(&m));
            for x in k1.elements() {
                for y in k1.elements() {
                    prop_assert_eq!(m.apply(k1.star(x, y)), k2.star(m.apply(x), m.apply(y)));
                }
            }
        }
    }
}

#[test]
fn endomorphism_star_matches_its_formula() {
    for h in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), klein_four(), FiniteGroup::cyclic(6)] {
        let end = end_mla(&h).unwrap();
        let alg: &MultLieAlgebra = end.mla();
        assert!(alg.verify().is_valid());
        for f in 0..end.len() {
            for g in 0..end.len() {
                let (ff, gg) = (end.map(f), end.map(g));
                let star = end.map(alg.star(f, g));
                let prod = end.map(alg.mul(f, g));
                for a in h.elements() {
                    let expected = h.mul(ff.apply(gg.apply(a)), gg.apply(ff.apply(h.inv(a))));
                    assert_eq!(star.apply(a), expected);
                    assert_eq!(prod.apply(a), h.mul(ff.apply(a), gg.apply(a)));
                }
            }
        }
    }
}
