use super::{FactorSystem, Mode};
use crate::algebra::{group_hom_report, mla_hom_report, GroupMap};
use crate::diagnostics::{Law, Report};
use crate::error::{Error, Result};

/// A morphism of factor systems `(ν, g, λ)` with `ν: K1 → K2`, `g: K1 → H2`
/// normalized and `λ: H1 → H2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsMorphism {
    pub nu: GroupMap,
    pub g: GroupMap,
    pub lambda: GroupMap,
}

impl FsMorphism {
    pub fn identity(fs: &FactorSystem) -> Self {
        let (n, m) = (fs.k().order(), fs.h().order());
        FsMorphism {
            nu: GroupMap::identity(n),
            g: GroupMap::trivial(n, m),
            lambda: GroupMap::identity(m),
        }
    }
}

/// Checks a factor-system morphism. With `ν`, `λ` homomorphisms and for all
/// `x, y ∈ K1`:
///
/// * `g(1) = 1`
/// * center: `λ(f1(x,y)) g(xy) = g(x) g(y) f2(ν(x),ν(y))`;
///   Lie: `λ(f1(x,y)) g(xy) = g(x) σ2_{ν(x)}(g(y)) f2(ν(x),ν(y))`
/// * center: `λ(h1(x,y)) g(x*y) = Γ2_{ν(x)}(g(y)) Γ2_{ν(y)}(g(x)⁻¹) h2(ν(x),ν(y))`;
///   Lie: `λ(h1(x,y)) g(x*y) = g(x) g(y) σ2_{ν(x)*ν(y)}(g(x)⁻¹ g(y)⁻¹) h2(ν(x),ν(y))`
/// * the actions intertwine: `λ(Γ1_x(a)) = Γ2_{ν(x)}(λ(a))`, resp. the same with σ.
pub fn verify_fs_morphism(m: &FsMorphism, fs1: &FactorSystem, fs2: &FactorSystem) -> Result<Report> {
    if fs1.mode() != fs2.mode() {
        return Err(Error::Precondition("factor systems of different modes".into()));
    }
    let (k1, k2) = (fs1.k(), fs2.k());
    let (h1, h2) = (fs1.h(), fs2.h());
    if m.g.domain() != k1.order() || m.g.codomain() != h2.order() {
        return Err(Error::Malformed("g has the wrong shape".into()));
    }
    let mut report = mla_hom_report(&m.nu, k1, k2)?;
    report.merge(group_hom_report(&m.lambda, h1, h2)?);
    let (a2, f1, f2, s1, s2) = (
        fs2.setting.action(),
        fs1.mul_part(),
        fs2.mul_part(),
        fs1.star_part(),
        fs2.star_part(),
    );
    let a1 = fs1.setting.action();
    let p = |xs: &[usize]| xs.iter().fold(0, |acc, &e| h2.mul(acc, e));
    let (g, nu, lam) = (&m.g, &m.nu, &m.lambda);
    if g.apply(0) != 0 {
        report.push(Law::MorphismNormalized, vec![0]);
    }
    for x in k1.elements() {
        for y in k1.elements() {
            let (nx, ny) = (nu.apply(x), nu.apply(y));
            let (gx, gy) = (g.apply(x), g.apply(y));
            let lhs = h2.mul(lam.apply(f1.get(x, y)), g.apply(k1.mul(x, y)));
            let rhs = match fs1.mode() {
                Mode::Center => p(&[gx, gy, f2.get(nx, ny)]),
                Mode::Lie => p(&[gx, a2.apply(nx, gy), f2.get(nx, ny)]),
            };
            if lhs != rhs {
                report.push(Law::MorphismGroupLaw, vec![x, y]);
            }
            let lhs = h2.mul(lam.apply(s1.get(x, y)), g.apply(k1.star(x, y)));
            let rhs = match fs1.mode() {
                Mode::Center => p(&[a2.apply(nx, gy), a2.apply(ny, h2.inv(gx)), s2.get(nx, ny)]),
                Mode::Lie => p(&[
                    gx,
                    gy,
                    a2.apply(k2.star(nx, ny), h2.inv(h2.mul(gx, gy))),
                    s2.get(nx, ny),
                ]),
            };
            if lhs != rhs {
                report.push(Law::MorphismStarLaw, vec![x, y]);
            }
        }
        for a in h1.elements() {
            if lam.apply(a1.apply(x, a)) != a2.apply(nu.apply(x), lam.apply(a)) {
                report.push(Law::MorphismAction, vec![x, a]);
            }
        }
    }
    Ok(report)
}

/// `m2 ∘ m1`: `(ν2 ν1, x ↦ g2(ν1(x)) λ2(g1(x)), λ2 λ1)`, checked against
/// the outer systems.
pub fn compose_fs_morphisms(
    m1: &FsMorphism,
    m2: &FsMorphism,
    fs1: &FactorSystem,
    fs3: &FactorSystem,
) -> Result<FsMorphism> {
    let h3 = fs3.h();
    if m1.nu.codomain() != m2.nu.domain() || m1.lambda.codomain() != m2.lambda.domain() {
        return Err(Error::Precondition("morphisms are not composable".into()));
    }
    let nu = m2.nu.after(&m1.nu)?;
    let lambda = m2.lambda.after(&m1.lambda)?;
    let g = (0..m1.nu.domain())
        .map(|x| h3.mul(m2.g.apply(m1.nu.apply(x)), m2.lambda.apply(m1.g.apply(x))))
        .collect();
    let composite = FsMorphism {
        nu,
        g: GroupMap::new(h3.order(), g)?,
        lambda,
    };
    let report = verify_fs_morphism(&composite, fs1, fs3)?;
    if !report.is_valid() {
        return Err(Error::Structural(format!(
            "composite is not a factor-system morphism:\n{report}"
        )));
    }
    Ok(composite)
}
