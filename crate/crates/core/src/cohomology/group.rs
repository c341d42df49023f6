use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::{mla_2cocycles, SearchOptions};
use crate::algebra::{enumerate_mla_homs, GroupMap, MultLieAlgebra};
use crate::error::{Error, Result};
use crate::extensions::{normalized_map_count, nth_normalized_map};
use crate::factor_systems::{validate, CocyclePair, Mode, PairFunction, Setting};

/// `χ(g) = (δg, g*)` without checking membership in `Z²`.
///
/// * center: `δg(x,y) = g(x) g(y) g(xy)⁻¹`,
///   `g*(x,y) = Γ_x(g(y)) Γ_y(g(x)⁻¹) g(x*y)⁻¹`
/// * Lie: `δg(x,y) = g(x) σ_x(g(y)) g(xy)⁻¹`,
///   `g*(x,y) = g(x*y)⁻¹ g(x) g(y) σ_{x*y}(g(x)⁻¹ g(y)⁻¹)`
pub(crate) fn coboundary_pair(setting: &Setting, g: &[usize]) -> CocyclePair {
    let (k, h, act) = (&setting.k, &setting.h, setting.action());
    let (n, m) = (k.order(), h.order());
    let p = |xs: &[usize]| xs.iter().fold(0, |acc, &e| h.mul(acc, e));
    let mut mul = Vec::with_capacity(n * n);
    let mut star = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (gx, gy) = (g[x], g[y]);
            let (gxy, gs) = (h.inv(g[k.mul(x, y)]), h.inv(g[k.star(x, y)]));
            match setting.mode() {
                Mode::Center => {
                    mul.push(p(&[gx, gy, gxy]));
                    star.push(p(&[act.apply(x, gy), act.apply(y, h.inv(gx)), gs]));
                }
                Mode::Lie => {
                    mul.push(p(&[gx, act.apply(x, gy), gxy]));
                    let inner = h.inv(h.mul(gx, gy));
                    star.push(p(&[gs, gx, gy, act.apply(k.star(x, y), inner)]));
                }
            }
        }
    }
    CocyclePair {
        mul: PairFunction::from_flat(n, m, mul),
        star: PairFunction::from_flat(n, m, star),
    }
}

/// The coboundary `χ(g)` of a normalized map `g: K → H`, checked against the
/// displayed equations; a coboundary outside `Z²` is a structural error.
pub fn coboundary(setting: &Setting, g: &GroupMap) -> Result<CocyclePair> {
    if g.domain() != setting.k_order() || g.codomain() != setting.h_order() {
        return Err(Error::Malformed("map has the wrong shape for K → H".into()));
    }
    if !g.is_normalized() {
        return Err(Error::Precondition("g must send 1 to 1".into()));
    }
    let pair = coboundary_pair(setting, g.table());
    let report = validate(setting, &pair)?;
    if !report.is_valid() {
        return Err(Error::Structural(format!(
            "coboundary of {:?} is not a 2-cocycle:\n{report}",
            g.table()
        )));
    }
    Ok(pair)
}

/// `Z² / B²` for one setting, with lexicographically least representatives.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    setting: Setting,
    cocycles: Vec<CocyclePair>,
    coboundaries: Vec<CocyclePair>,
    class_of: Vec<usize>,
    representatives: Vec<CocyclePair>,
    table: Vec<usize>,
}

impl CohomologyGroup {
    /// Enumerates `Z²`, forms `B²` as the image of all `|H|^(|K|-1)`
    /// normalized maps and partitions `Z²` into cosets.
    ///
    /// Fails with a structural error if a nonempty `Z²` is not closed under
    /// products or does not contain `B²`, since the quotient is then
    /// undefined. An empty `Z²` gives zero classes.
    pub fn compute(setting: &Setting, opts: SearchOptions) -> Result<Self> {
        Self::from_cocycles(setting, mla_2cocycles(setting, opts)?)
    }

    /// Builds the quotient from an already enumerated, sorted `Z²`.
    pub fn from_cocycles(setting: &Setting, cocycles: Vec<CocyclePair>) -> Result<Self> {
        if cocycles.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("cocycles must be sorted and distinct".into()));
        }
        let (n, m) = (setting.k_order(), setting.h_order());
        let mut coboundaries: Vec<CocyclePair> = (0..normalized_map_count(n, m))
            .into_par_iter()
            .map(|i| coboundary_pair(setting, &nth_normalized_map(i, n, m)))
            .collect();
        coboundaries.sort();
        coboundaries.dedup();
        let index: HashMap<&CocyclePair, usize> =
            cocycles.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let h = &setting.h;
        // With an empty Z² (no extension carries this twist) there are no
        // classes at all; otherwise Z² must be a group containing B².
        if !cocycles.is_empty() {
            if let Some(b) = coboundaries.iter().find(|b| !index.contains_key(b)) {
                return Err(Error::Structural(format!(
                    "a coboundary fails the displayed equations: {b:?}"
                )));
            }
        }
        let mut class_of = vec![usize::MAX; cocycles.len()];
        let mut representatives = Vec::new();
        for (i, c) in cocycles.iter().enumerate() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let class = representatives.len();
            // sorted order makes the first unassigned member the least of its coset
            representatives.push(c.clone());
            for b in &coboundaries {
                let member = c.product(b, h);
                match index.get(&member) {
                    Some(&j) => class_of[j] = class,
                    None => {
                        return Err(Error::Structural(
                            "cocycle set is not closed under products with coboundaries".into(),
                        ))
                    }
                }
            }
        }
        let r = representatives.len();
        let mut table = Vec::with_capacity(r * r);
        for a in &representatives {
            for b in &representatives {
                match index.get(&a.product(b, h)) {
                    Some(&j) => table.push(class_of[j]),
                    None => {
                        return Err(Error::Structural(
                            "cocycle set is not closed under products".into(),
                        ))
                    }
                }
            }
        }
        Ok(CohomologyGroup {
            setting: setting.clone(),
            cocycles,
            coboundaries,
            class_of,
            representatives,
            table,
        })
    }

    pub fn setting(&self) -> &Setting {
        &self.setting
    }

    /// `Z²`, sorted.
    pub fn cocycles(&self) -> &[CocyclePair] {
        &self.cocycles
    }

    /// `B²`, sorted.
    pub fn coboundaries(&self) -> &[CocyclePair] {
        &self.coboundaries
    }

    /// Least member of each class; class 0 is the trivial class when `Z²`
    /// is nonempty.
    pub fn representatives(&self) -> &[CocyclePair] {
        &self.representatives
    }

    pub fn z2_order(&self) -> usize {
        self.cocycles.len()
    }

    pub fn b2_order(&self) -> usize {
        self.coboundaries.len()
    }

    pub fn h2_order(&self) -> usize {
        self.representatives.len()
    }

    /// Class of a cocycle, or `None` if it is not in `Z²`.
    pub fn class_of(&self, c: &CocyclePair) -> Option<usize> {
        self.cocycles.binary_search(c).ok().map(|i| self.class_of[i])
    }

    pub fn class_product(&self, i: usize, j: usize) -> usize {
        self.table[i * self.h2_order() + j]
    }

    pub fn class_table(&self) -> Vec<Vec<usize>> {
        let r = self.h2_order().max(1);
        self.table.chunks(r).map(<[usize]>::to_vec).collect()
    }
}

/// Outcome of checking `1 → Hom(K,H) → MAP(K,H) → Z² → H² → 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceReport {
    pub map_order: u128,
    /// `|Hom(K,H)|`, homomorphisms of multiplicative Lie algebras into `H`
    /// with trivial star.
    pub hom_order: usize,
    pub kernel_order: usize,
    pub z2_order: usize,
    pub b2_order: usize,
    pub h2_order: usize,
    /// `ker χ` equals `Hom(K,H)` as a set of maps.
    pub kernel_is_hom: bool,
    /// Every coboundary lies in the trivial class and the trivial class is `B²`.
    pub nu_kernel_is_b2: bool,
}

impl ExactSequenceReport {
    /// `|MAP| = |Hom| · |B²|`
    pub fn map_identity(&self) -> bool {
        self.map_order == self.hom_order as u128 * self.b2_order as u128
    }

    /// `|Z²| = |B²| · |H²|`
    pub fn quotient_identity(&self) -> bool {
        self.z2_order == self.b2_order * self.h2_order
    }

    /// `|ker χ| = |Hom|`
    pub fn kernel_identity(&self) -> bool {
        self.kernel_order == self.hom_order
    }

    /// `|MAP| = |ker χ| · |im χ|`
    pub fn image_identity(&self) -> bool {
        self.map_order == self.kernel_order as u128 * self.b2_order as u128
    }

    pub fn is_exact(&self) -> bool {
        self.kernel_is_hom
            && self.nu_kernel_is_b2
            && self.map_identity()
            && self.quotient_identity()
            && self.kernel_identity()
            && self.image_identity()
    }
}

impl fmt::Display for ExactSequenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAILS" };
        writeln!(
            f,
            "|MAP| {}  |Hom| {}  |ker chi| {}  |Z2| {}  |B2| {}  |H2| {}",
            self.map_order, self.hom_order, self.kernel_order, self.z2_order, self.b2_order, self.h2_order
        )?;
        writeln!(f, "ker chi = Hom: {}", mark(self.kernel_is_hom))?;
        writeln!(f, "ker nu = B2: {}", mark(self.nu_kernel_is_b2))?;
        writeln!(f, "|MAP| = |Hom| |B2|: {}", mark(self.map_identity()))?;
        writeln!(f, "|Z2| = |B2| |H2|: {}", mark(self.quotient_identity()))?;
        writeln!(f, "|ker chi| = |Hom|: {}", mark(self.kernel_identity()))?;
        write!(f, "|MAP| = |ker chi| |im chi|: {}", mark(self.image_identity()))
    }
}

/// Checks the exact sequence for a computed cohomology group.
pub fn verify_exact_sequence(group: &CohomologyGroup) -> ExactSequenceReport {
    let setting = group.setting();
    let (n, m) = (setting.k_order(), setting.h_order());
    let target = MultLieAlgebra::trivial_star(setting.h.clone());
    let homs: Vec<Vec<usize>> = enumerate_mla_homs(&setting.k, &target)
        .into_iter()
        .map(|g| g.table().to_vec())
        .collect();
    let trivial = CocyclePair::trivial(n, m);
    let count = normalized_map_count(n, m);
    let mut kernel: Vec<Vec<usize>> = (0..count)
        .into_par_iter()
        .map(|i| nth_normalized_map(i, n, m))
        .filter(|g| coboundary_pair(setting, g) == trivial)
        .collect();
    kernel.sort();
    let nu_kernel_is_b2 = {
        let trivial_class: Vec<&CocyclePair> = group
            .cocycles()
            .iter()
            .filter(|c| group.class_of(c) == Some(0))
            .collect();
        trivial_class.len() == group.b2_order()
            && group.coboundaries().iter().all(|b| group.class_of(b) == Some(0))
    };
    ExactSequenceReport {
        map_order: count,
        hom_order: homs.len(),
        kernel_order: kernel.len(),
        z2_order: group.z2_order(),
        b2_order: group.b2_order(),
        h2_order: group.h2_order(),
        kernel_is_hom: kernel == homs,
        nu_kernel_is_b2,
    }
}

/// The serializable summary of a [`CohomologyGroup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub setting: Setting,
    pub z2_order: usize,
    pub b2_order: usize,
    pub h2_order: usize,
    pub class_table: Vec<Vec<usize>>,
    pub representatives: Vec<CocyclePair>,
}

impl CohomologyGroup {
    pub fn report(&self) -> CohomologyReport {
        CohomologyReport {
            setting: self.setting.clone(),
            z2_order: self.z2_order(),
            b2_order: self.b2_order(),
            h2_order: self.h2_order(),
            class_table: self.class_table(),
            representatives: self.representatives.clone(),
        }
    }
}
