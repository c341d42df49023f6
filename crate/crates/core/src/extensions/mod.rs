//! Extensions `1 → H → G → K → 1` of multiplicative Lie algebras.

mod baer;
mod equivalence;
mod extract;
mod morphism;

pub use baer::baer_sum;
pub use equivalence::equivalent_extensions;
pub(crate) use equivalence::{normalized_map_count, nth_normalized_map};
pub use extract::{
    extract_center_data, extract_general_data, extract_lie_center_data, GeneralData,
};
pub use morphism::{induced_fs_morphism, verify_ext_morphism, ExtMorphism};

use crate::algebra::{mla_hom_report, FiniteGroup, GroupMap, MultLieAlgebra};
use crate::diagnostics::{Law, Report};
use crate::error::{Error, Result};

/// The strongest tag an extension carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionKind {
    General,
    Center,
    LieCenter,
}

impl ExtensionKind {
    pub fn name(self) -> &'static str {
        match self {
            ExtensionKind::General => "general",
            ExtensionKind::Center => "center",
            ExtensionKind::LieCenter => "lie",
        }
    }
}

/// A verified short exact sequence `H →ι G →β K` with `H` abelian and carrying
/// the trivial star.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    kernel: MultLieAlgebra,
    total: MultLieAlgebra,
    quotient: MultLieAlgebra,
    iota: GroupMap,
    beta: GroupMap,
    center: bool,
    lie_center: bool,
    /// `iota_inv[g]` is the preimage of `g` under ι, or `usize::MAX`.
    iota_inv: Vec<usize>,
}

/// Checks every extension invariant. Component structures must already be
/// valid; otherwise this is a precondition error.
pub fn verify_extension(
    kernel: &MultLieAlgebra,
    total: &MultLieAlgebra,
    quotient: &MultLieAlgebra,
    iota: &GroupMap,
    beta: &GroupMap,
) -> Result<Report> {
    for (name, m) in [("H", kernel), ("G", total), ("K", quotient)] {
        let r = m.verify();
        if !r.is_valid() {
            return Err(Error::Precondition(format!(
                "{name} is not a multiplicative Lie algebra:\n{r}"
            )));
        }
    }
    extension_report(kernel, total, quotient, iota, beta)
}

/// The extension checks without re-verifying the components.
pub(crate) fn extension_report(
    kernel: &MultLieAlgebra,
    total: &MultLieAlgebra,
    quotient: &MultLieAlgebra,
    iota: &GroupMap,
    beta: &GroupMap,
) -> Result<Report> {
    let mut report = Report::default();
    if !kernel.group().is_abelian() {
        report.push(Law::KernelAbelian, vec![]);
    }
    if let Some(x) = kernel
        .elements()
        .find(|&x| kernel.elements().any(|y| kernel.star(x, y) != 0))
    {
        report.push(Law::KernelTrivialStar, vec![x]);
    }
    report.merge(mla_hom_report(iota, kernel, total)?);
    report.merge(mla_hom_report(beta, total, quotient)?);
    if !iota.is_injective() {
        report.push(Law::IotaInjective, vec![]);
    }
    if !beta.is_surjective() {
        report.push(Law::BetaSurjective, vec![]);
    }
    if iota.image() != beta.kernel() {
        let bad = total
            .elements()
            .find(|&g| iota.table().contains(&g) != (beta.apply(g) == 0))
            .unwrap_or(0);
        report.push(Law::Exactness, vec![bad]);
    }
    Ok(report)
}

impl Extension {
    pub fn new(
        kernel: MultLieAlgebra,
        total: MultLieAlgebra,
        quotient: MultLieAlgebra,
        iota: GroupMap,
        beta: GroupMap,
    ) -> Result<Self> {
        let report = verify_extension(&kernel, &total, &quotient, &iota, &beta)?;
        if !report.is_valid() {
            return Err(Error::invalid("extension", report));
        }
        Ok(Self::assemble(kernel, total, quotient, iota, beta))
    }

    /// Builds without verification; callers guarantee the invariants.
    pub(crate) fn assemble(
        kernel: MultLieAlgebra,
        total: MultLieAlgebra,
        quotient: MultLieAlgebra,
        iota: GroupMap,
        beta: GroupMap,
    ) -> Self {
        let mut iota_inv = vec![usize::MAX; total.order()];
        for a in kernel.elements() {
            iota_inv[iota.apply(a)] = a;
        }
        let image = iota.image();
        let center = image
            .iter()
            .all(|&g| total.elements().all(|y| total.mul(g, y) == total.mul(y, g)));
        let lie_center = image
            .iter()
            .all(|&g| total.elements().all(|y| total.star(g, y) == 0));
        Extension {
            kernel,
            total,
            quotient,
            iota,
            beta,
            center,
            lie_center,
            iota_inv,
        }
    }

    /// The split extension `H × K` with trivial star on `H` and componentwise
    /// operations; `(a, x)` has index `x·|H| + a`.
    pub fn split(h: &FiniteGroup, k: &MultLieAlgebra) -> Result<Self> {
        let kernel = MultLieAlgebra::trivial_star(h.clone());
        let total = k.direct_product(&kernel);
        let m = h.order();
        let iota = GroupMap::new(total.order(), h.elements().collect())?;
        let beta = GroupMap::new(k.order(), total.elements().map(|g| g / m).collect())?;
        Self::new(kernel, total, k.clone(), iota, beta)
    }

    pub fn kernel(&self) -> &MultLieAlgebra {
        &self.kernel
    }

    pub fn kernel_group(&self) -> &FiniteGroup {
        self.kernel.group()
    }

    pub fn total(&self) -> &MultLieAlgebra {
        &self.total
    }

    pub fn quotient(&self) -> &MultLieAlgebra {
        &self.quotient
    }

    pub fn iota(&self) -> &GroupMap {
        &self.iota
    }

    pub fn beta(&self) -> &GroupMap {
        &self.beta
    }

    pub fn is_center(&self) -> bool {
        self.center
    }

    pub fn is_lie_center(&self) -> bool {
        self.lie_center
    }

    /// Center wins when both tags apply.
    pub fn kind(&self) -> ExtensionKind {
        if self.center {
            ExtensionKind::Center
        } else if self.lie_center {
            ExtensionKind::LieCenter
        } else {
            ExtensionKind::General
        }
    }

    /// The unique `(h, x)` with `g = ι(h)·t(x)`.
    pub fn decompose(&self, t: &Section, g: usize) -> (usize, usize) {
        let x = self.beta.apply(g);
        let core = self.total.mul(g, self.total.inv(t.apply(x)));
        let h = self.iota_inv[core];
        debug_assert!(h != usize::MAX, "section does not split β");
        (h, x)
    }

    /// `ι(h)·t(x)`.
    pub fn compose(&self, t: &Section, h: usize, x: usize) -> usize {
        self.total.mul(self.iota.apply(h), t.apply(x))
    }

    /// The preimage of `g` under ι, if `g` lies in the image.
    pub fn kernel_preimage(&self, g: usize) -> Option<usize> {
        match self.iota_inv[g] {
            usize::MAX => None,
            h => Some(h),
        }
    }

    /// The section choosing the least element of each coset.
    pub fn canonical_section(&self) -> Section {
        let mut t = vec![usize::MAX; self.quotient.order()];
        for g in self.total.elements().rev() {
            t[self.beta.apply(g)] = g;
        }
        t[0] = 0;
        Section(GroupMap::from_table_unchecked(self.total.order(), t))
    }

    /// All normalized sections in lexicographic order of their tables.
    pub fn sections(&self) -> Vec<Section> {
        enumerate_sections(self)
    }
}

/// A normalized set-theoretic splitting `t: K → G` of β.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Section(GroupMap);

impl Section {
    /// Checks `β∘t = id` and `t(1) = 1`.
    pub fn new(ext: &Extension, t: GroupMap) -> Result<Self> {
        if t.domain() != ext.quotient.order() || t.codomain() != ext.total.order() {
            return Err(Error::Malformed(format!(
                "section is {} -> {}, extension has |K| = {}, |G| = {}",
                t.domain(),
                t.codomain(),
                ext.quotient.order(),
                ext.total.order()
            )));
        }
        let mut report = Report::default();
        if t.apply(0) != 0 {
            report.push(Law::SectionNormalized, vec![0]);
        }
        for x in 0..t.domain() {
            if ext.beta.apply(t.apply(x)) != x {
                report.push(Law::SectionSplits, vec![x]);
            }
        }
        if !report.is_valid() {
            return Err(Error::invalid("section", report));
        }
        Ok(Section(t))
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0.apply(x)
    }

    pub fn map(&self) -> &GroupMap {
        &self.0
    }
}

/// All normalized sections, `|H|^(|K|-1)` of them, in lexicographic order.
pub fn enumerate_sections(ext: &Extension) -> Vec<Section> {
    let k = ext.quotient.order();
    let mut cosets = vec![Vec::new(); k];
    for g in ext.total.elements() {
        cosets[ext.beta.apply(g)].push(g);
    }
    let mut out = vec![vec![0usize]];
    for coset in cosets.iter().skip(1) {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                coset.iter().map(move |&g| {
                    let mut p = prefix.clone();
                    p.push(g);
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|t| Section(GroupMap::from_table_unchecked(ext.total.order(), t)))
        .collect()
}

/// `decompose` as a free function, for symmetry with the other operations.
pub fn decompose(ext: &Extension, t: &Section, g: usize) -> (usize, usize) {
    ext.decompose(t, g)
}
