use super::{Extension, Section};
use crate::diagnostics::Report;
use crate::error::{Error, Result};
use crate::factor_systems::{
    twist_report, validate, Action, CocyclePair, FactorSystem, PairFunction, Setting, Twist,
};

/// Everything a section reads off an arbitrary extension of an abelian
/// trivial-star `H`: both cocycle parts and both actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralData {
    pub mul: PairFunction,
    pub star: PairFunction,
    /// `σ_x(a) = t(x) a t(x)⁻¹`
    pub sigma: Action,
    /// `Γ_x(a) = t(x) * a`
    pub gamma: Action,
}

fn check_section(ext: &Extension, t: &Section) -> Result<()> {
    Section::new(ext, t.map().clone()).map(|_| ())
}

fn pair_parts(ext: &Extension, t: &Section) -> (PairFunction, PairFunction) {
    let (k, g) = (ext.quotient(), ext.total());
    let m = ext.kernel().order();
    let n = k.order();
    let mut mul = Vec::with_capacity(n * n);
    let mut star = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (tx, ty) = (t.apply(x), t.apply(y));
            mul.push(ext.decompose(t, g.mul(tx, ty)).0);
            star.push(ext.decompose(t, g.star(tx, ty)).0);
        }
    }
    (
        PairFunction::from_flat(n, m, mul),
        PairFunction::from_flat(n, m, star),
    )
}

fn gamma_of(ext: &Extension, t: &Section) -> Action {
    let g = ext.total();
    let rows: Vec<Vec<usize>> = ext
        .quotient()
        .elements()
        .map(|x| {
            ext.kernel()
                .elements()
                .map(|a| ext.decompose(t, g.star(t.apply(x), ext.iota().apply(a))).0)
                .collect()
        })
        .collect();
    Action::new(ext.kernel().order(), &rows).expect("decomposition stays in H")
}

fn sigma_of(ext: &Extension, t: &Section) -> Action {
    let g = ext.total();
    let rows: Vec<Vec<usize>> = ext
        .quotient()
        .elements()
        .map(|x| {
            ext.kernel()
                .elements()
                .map(|a| ext.decompose(t, g.conj(t.apply(x), ext.iota().apply(a))).0)
                .collect()
        })
        .collect();
    Action::new(ext.kernel().order(), &rows).expect("decomposition stays in H")
}

fn finish(ext: &Extension, twist: Twist, pair: CocyclePair, what: &str) -> Result<FactorSystem> {
    let setting = Setting::new(ext.quotient().clone(), ext.kernel_group().clone(), twist)?;
    let tw = twist_report(&setting)?;
    if !tw.is_valid() {
        return Err(Error::Structural(format!(
            "extracted {what} twist is not a homomorphism:\n{tw}"
        )));
    }
    let report: Report = validate(&setting, &pair)?;
    if !report.is_valid() {
        return Err(Error::Structural(format!(
            "extracted {what} factor system fails the displayed equations:\n{report}"
        )));
    }
    FactorSystem::new(setting, pair)
}

/// Reads `(f, h, Γ)` off a center extension, where
/// `t(x)t(y) = f(x,y) t(xy)`, `t(x)*t(y) = h(x,y) t(x*y)` and `Γ_x(a) = t(x)*a`.
///
/// The result is checked against the twist laws and equations C0–C6; a
/// failure there is reported as a structural error.
pub fn extract_center_data(ext: &Extension, t: &Section) -> Result<FactorSystem> {
    if !ext.is_center() {
        return Err(Error::Precondition("not a center extension".into()));
    }
    check_section(ext, t)?;
    let (mul, star) = pair_parts(ext, t);
    finish(ext, Twist::Gamma(gamma_of(ext, t)), CocyclePair { mul, star }, "center")
}

/// Reads `(f, h, σ)` off a Lie-center extension, with `σ_x(a) = t(x) a t(x)⁻¹`.
pub fn extract_lie_center_data(ext: &Extension, t: &Section) -> Result<FactorSystem> {
    if !ext.is_lie_center() {
        return Err(Error::Precondition("not a Lie-center extension".into()));
    }
    check_section(ext, t)?;
    let (mul, star) = pair_parts(ext, t);
    finish(ext, Twist::Sigma(sigma_of(ext, t)), CocyclePair { mul, star }, "Lie-center")
}

/// Reads all four maps off any extension and rebuilds `G` from
///
/// * `(a t(x))(b t(y)) = a σ_x(b) f(x,y) t(xy)`
/// * `(a t(x))*(b t(y)) = a b Γ_x(b) σ_{x*y}(a⁻¹ b⁻¹ Γ_y(a⁻¹)) h(x,y) t(x*y)`
///
/// A mismatch with the actual tables is a structural error naming the pair.
pub fn extract_general_data(ext: &Extension, t: &Section) -> Result<GeneralData> {
    check_section(ext, t)?;
    let (mul, star) = pair_parts(ext, t);
    let sigma = sigma_of(ext, t);
    let gamma = gamma_of(ext, t);
    let (k, g, h) = (ext.quotient(), ext.total(), ext.kernel_group());
    let p = |xs: &[usize]| xs.iter().fold(0, |acc, &e| h.mul(acc, e));
    for u in g.elements() {
        let (a, x) = ext.decompose(t, u);
        for v in g.elements() {
            let (b, y) = ext.decompose(t, v);
            let prod = ext.compose(t, p(&[a, sigma.apply(x, b), mul.get(x, y)]), k.mul(x, y));
            let xy = k.star(x, y);
            let inner = p(&[h.inv(a), h.inv(b), gamma.apply(y, h.inv(a))]);
            let st = ext.compose(
                t,
                p(&[a, b, gamma.apply(x, b), sigma.apply(xy, inner), star.get(x, y)]),
                xy,
            );
            if prod != g.mul(u, v) || st != g.star(u, v) {
                return Err(Error::Structural(format!(
                    "general laws do not reproduce G at ({u}, {v})"
                )));
            }
        }
    }
    Ok(GeneralData {
        mul,
        star,
        sigma,
        gamma,
    })
}
