use rayon::prelude::*;

use super::group::coboundary_pair;
use super::CohomologyGroup;
use crate::algebra::{
    aut_group, end_mla, enumerate_group_homs, enumerate_mla_homs, FiniteGroup, GroupMap,
    MultLieAlgebra,
};
use crate::error::{Error, Result};
use crate::extensions::{equivalent_extensions, normalized_map_count, nth_normalized_map, Extension, Section};
use crate::factor_systems::{
    realize, realize_unvalidated, Action, CocyclePair, FactorSystem, Mode, Setting, Twist,
};

/// Every admissible twist: MLA homs `K → End(H)` in center mode, group homs
/// `K → Aut(H)` in Lie mode, in lexicographic order of the index tables.
pub fn enumerate_twists(k: &MultLieAlgebra, h: &FiniteGroup, mode: Mode) -> Result<Vec<Twist>> {
    Ok(match mode {
        Mode::Center => {
            let end = end_mla(h)?;
            enumerate_mla_homs(k, end.mla())
                .into_iter()
                .map(|hom| Twist::Gamma(action_of(&hom, |i| end.map(i))))
                .collect()
        }
        Mode::Lie => {
            let aut = aut_group(h);
            enumerate_group_homs(k.group(), aut.group())
                .into_iter()
                .map(|hom| Twist::Sigma(action_of(&hom, |i| aut.map(i))))
                .collect()
        }
    })
}

fn action_of<'a>(hom: &GroupMap, map: impl Fn(usize) -> &'a GroupMap) -> Action {
    let maps: Vec<GroupMap> = hom.table().iter().map(|&i| map(i).clone()).collect();
    Action::from_maps(&maps)
}

/// First normalized `g` in lexicographic order with `c1 = χ(g) · c2`.
pub fn cocycles_equivalent(fs1: &FactorSystem, fs2: &FactorSystem) -> Result<Option<GroupMap>> {
    if fs1.setting != fs2.setting {
        return Err(Error::Precondition(
            "cocycles must share K, H and the twist".into(),
        ));
    }
    let setting = &fs1.setting;
    let (n, m) = (setting.k_order(), setting.h_order());
    let h = &setting.h;
    let hit = (0..normalized_map_count(n, m)).into_par_iter().find_first(|&i| {
        let chi = coboundary_pair(setting, &nth_normalized_map(i, n, m));
        chi.product(&fs2.pair, h) == fs1.pair
    });
    Ok(hit.map(|i| GroupMap::from_table_unchecked(m, nth_normalized_map(i, n, m))))
}

/// One class with its realized extension and the canonical section.
#[derive(Clone, Debug)]
pub struct ClassEntry {
    pub class: usize,
    pub representative: CocyclePair,
    pub extension: Extension,
    pub section: Section,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub entries: Vec<ClassEntry>,
    /// Number of classes found by partitioning the realizations of all of
    /// `Z²` with the extension-level equivalence search.
    pub search_classes: usize,
    /// No two representatives realize equivalent extensions.
    pub distinct: bool,
    /// Each cocycle's realization is equivalent to exactly one
    /// representative, namely the one of its class.
    pub complete: bool,
}

impl Classification {
    pub fn is_bijective(&self) -> bool {
        self.distinct && self.complete && self.search_classes == self.entries.len()
    }
}

/// Realizes every class representative, then checks the correspondence
/// between classes and equivalence classes of extensions.
pub fn classify_extensions(group: &CohomologyGroup) -> Result<Classification> {
    let setting = group.setting();
    let realized: Vec<(Extension, Section)> = group
        .representatives()
        .par_iter()
        .map(|c| realize(&FactorSystem::new(setting.clone(), c.clone())?))
        .collect::<Result<_>>()?;
    let r = realized.len();
    let mut distinct = true;
    for i in 0..r {
        for j in i + 1..r {
            if equivalent_extensions(&realized[i].0, &realized[j].0)?.is_some() {
                distinct = false;
            }
        }
    }
    let all: Vec<Extension> = group
        .cocycles()
        .par_iter()
        .map(|c| realize_unvalidated(&FactorSystem::new(setting.clone(), c.clone())?).map(|p| p.0))
        .collect::<Result<_>>()?;
    // which representatives each cocycle's realization is equivalent to
    let matches: Vec<Vec<usize>> = all
        .par_iter()
        .map(|e| {
            let mut hits = Vec::new();
            for (i, (rep, _)) in realized.iter().enumerate() {
                if equivalent_extensions(e, rep)?.is_some() {
                    hits.push(i);
                }
            }
            Ok(hits)
        })
        .collect::<Result<_>>()?;
    let complete = matches
        .iter()
        .zip(group.cocycles())
        .all(|(hits, c)| hits.len() == 1 && group.class_of(c) == Some(hits[0]));
    let mut heads: Vec<&Extension> = Vec::new();
    for e in &all {
        let mut seen = false;
        for head in &heads {
            if equivalent_extensions(e, head)?.is_some() {
                seen = true;
                break;
            }
        }
        if !seen {
            heads.push(e);
        }
    }
    let entries = group
        .representatives()
        .iter()
        .zip(realized)
        .enumerate()
        .map(|(class, (c, (extension, section)))| ClassEntry {
            class,
            representative: c.clone(),
            extension,
            section,
        })
        .collect();
    Ok(Classification {
        entries,
        search_classes: heads.len(),
        distinct,
        complete,
    })
}

/// The trivial-cocycle extension for one twist, or the reason it fails.
#[derive(Clone, Debug)]
pub struct EtaEntry {
    pub twist: Twist,
    pub outcome: std::result::Result<Extension, String>,
}

/// For every admissible twist, realizes the trivial cocycle pair and checks
/// that extraction with the canonical section returns the same twist.
/// Surjectivity holds when every outcome is `Ok`.
pub fn eta_map(k: &MultLieAlgebra, h: &FiniteGroup, mode: Mode) -> Result<Vec<EtaEntry>> {
    let twists = enumerate_twists(k, h, mode)?;
    twists
        .into_par_iter()
        .map(|twist| {
            let setting = Setting::new(k.clone(), h.clone(), twist.clone())?;
            let fs = FactorSystem::new(setting, CocyclePair::trivial(k.order(), h.order()))?;
            // realize_unvalidated compares the whole extracted system,
            // twist included, with the input
            let outcome = realize_unvalidated(&fs).map(|(e, _)| e).map_err(|e| e.to_string());
            Ok(EtaEntry { twist, outcome })
        })
        .collect()
}
