use super::{Extension, Section};
use crate::algebra::{mla_hom_report, GroupMap};
use crate::diagnostics::{Law, Report};
use crate::error::{Error, Result};
use crate::factor_systems::FsMorphism;

/// A morphism of extensions: `λ: H1 → H2`, `μ: G1 → G2`, `ν: K1 → K2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtMorphism {
    pub lambda: GroupMap,
    pub mu: GroupMap,
    pub nu: GroupMap,
}

impl ExtMorphism {
    pub fn identity(e: &Extension) -> Self {
        ExtMorphism {
            lambda: GroupMap::identity(e.kernel().order()),
            mu: GroupMap::identity(e.total().order()),
            nu: GroupMap::identity(e.quotient().order()),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ExtMorphism) -> Result<ExtMorphism> {
        Ok(ExtMorphism {
            lambda: other.lambda.after(&self.lambda)?,
            mu: other.mu.after(&self.mu)?,
            nu: other.nu.after(&self.nu)?,
        })
    }
}

/// Checks that all three maps are homomorphisms of multiplicative Lie algebras
/// and that `μ∘ι1 = ι2∘λ` and `β2∘μ = ν∘β1`.
pub fn verify_ext_morphism(m: &ExtMorphism, e1: &Extension, e2: &Extension) -> Result<Report> {
    let mut report = mla_hom_report(&m.lambda, e1.kernel(), e2.kernel())?;
    report.merge(mla_hom_report(&m.mu, e1.total(), e2.total())?);
    report.merge(mla_hom_report(&m.nu, e1.quotient(), e2.quotient())?);
    for a in e1.kernel().elements() {
        if m.mu.apply(e1.iota().apply(a)) != e2.iota().apply(m.lambda.apply(a)) {
            report.push(Law::SquareCommutes, vec![0, a]);
        }
    }
    for g in e1.total().elements() {
        if e2.beta().apply(m.mu.apply(g)) != m.nu.apply(e1.beta().apply(g)) {
            report.push(Law::SquareCommutes, vec![1, g]);
        }
    }
    Ok(report)
}

/// The factor-system morphism `(ν, g, λ)` induced by an extension morphism,
/// where `μ(t1(x)) = ι2(g(x)) t2(ν(x))`.
pub fn induced_fs_morphism(
    m: &ExtMorphism,
    e1: &Extension,
    t1: &Section,
    e2: &Extension,
    t2: &Section,
) -> Result<FsMorphism> {
    let report = verify_ext_morphism(m, e1, e2)?;
    if !report.is_valid() {
        return Err(Error::invalid("extension morphism", report));
    }
    let g: Vec<usize> = e1
        .quotient()
        .elements()
        .map(|x| e2.decompose(t2, m.mu.apply(t1.apply(x))).0)
        .collect();
    Ok(FsMorphism {
        nu: m.nu.clone(),
        g: GroupMap::new(e2.kernel().order(), g)?,
        lambda: m.lambda.clone(),
    })
}
