use super::{validate, CocyclePair, FactorSystem, Mode, Setting};
use crate::algebra::{verify_group, verify_mla_with_cap, FiniteGroup, GroupMap, MultLieAlgebra};
use crate::diagnostics::Report;
use crate::error::{Error, Result};
use crate::extensions::{extension_report, Extension, Section};

/// Builds the operation tables on `H × K` without any checks.
///
/// The pair `(a, x)` has index `x·|H| + a`, so `ι(a) = a` and the canonical
/// section is `t(x) = x·|H|`.
pub fn realize_tables(setting: &Setting, pair: &CocyclePair) -> (Vec<usize>, Vec<usize>) {
    let (k, h) = (&setting.k, &setting.h);
    let act = setting.action();
    let (n, m) = (k.order(), h.order());
    let size = n * m;
    let p = |xs: &[usize]| xs.iter().fold(0, |acc, &e| h.mul(acc, e));
    let mut mul = Vec::with_capacity(size * size);
    let mut star = Vec::with_capacity(size * size);
    for u in 0..size {
        let (x, a) = (u / m, u % m);
        for v in 0..size {
            let (y, b) = (v / m, v % m);
            let xy = k.star(x, y);
            let (pa, sa) = match setting.mode() {
                Mode::Center => (
                    p(&[a, b, pair.mul.get(x, y)]),
                    p(&[act.apply(x, b), act.apply(y, h.inv(a)), pair.star.get(x, y)]),
                ),
                Mode::Lie => (
                    p(&[a, act.apply(x, b), pair.mul.get(x, y)]),
                    p(&[
                        a,
                        b,
                        act.apply(xy, h.inv(h.mul(a, b))),
                        pair.star.get(x, y),
                    ]),
                ),
            };
            mul.push(k.mul(x, y) * m + pa);
            star.push(xy * m + sa);
        }
    }
    (mul, star)
}

fn kernel_maps(setting: &Setting) -> (GroupMap, GroupMap) {
    let (n, m) = (setting.k_order(), setting.h_order());
    let iota = GroupMap::from_table_unchecked(n * m, (0..m).collect());
    let beta = GroupMap::from_table_unchecked(n, (0..n * m).map(|u| u / m).collect());
    (iota, beta)
}

/// Decides whether the realization of `pair` is an extension of the right
/// kind, without consulting the displayed equations. Reports the group laws,
/// the multiplicative Lie algebra axioms, the extension invariants and, under
/// [`crate::Law::Exactness`], a failure of the center / Lie-center tag.
///
/// `cap` bounds the number of recorded axiom violations; 1 gives a fast
/// yes/no answer.
pub fn realization_report(setting: &Setting, pair: &CocyclePair, cap: usize) -> Result<Report> {
    setting.check_pair(pair)?;
    let (mul, star) = realize_tables(setting, pair);
    let size = setting.k_order() * setting.h_order();
    let rows: Vec<Vec<usize>> = mul.chunks(size).map(<[usize]>::to_vec).collect();
    let report = verify_group(&rows)?;
    if !report.is_valid() {
        return Ok(report);
    }
    let group = FiniteGroup::from_flat_unchecked(size, mul);
    let report = verify_mla_with_cap(&group, &star, cap);
    if !report.is_valid() {
        return Ok(report);
    }
    let total = MultLieAlgebra::from_flat_unchecked(group, star);
    let kernel = MultLieAlgebra::trivial_star(setting.h.clone());
    let (iota, beta) = kernel_maps(setting);
    let mut report = extension_report(&kernel, &total, &setting.k, &iota, &beta)?;
    if report.is_valid() {
        let ext = Extension::assemble(kernel, total, setting.k.clone(), iota, beta);
        let tagged = match setting.mode() {
            Mode::Center => ext.is_center(),
            Mode::Lie => ext.is_lie_center(),
        };
        if !tagged {
            report.push(crate::diagnostics::Law::Exactness, vec![]);
        }
    }
    Ok(report)
}

/// Realizes a validated factor system as an extension with its canonical
/// section, then checks that extraction gives the system back.
pub fn realize(fs: &FactorSystem) -> Result<(Extension, Section)> {
    let report = validate(&fs.setting, &fs.pair)?;
    if !report.is_valid() {
        return Err(Error::invalid("factor system", report));
    }
    realize_unvalidated(fs)
}

/// Realization without running the displayed equations first. The resulting
/// structure is still verified.
pub fn realize_unvalidated(fs: &FactorSystem) -> Result<(Extension, Section)> {
    let setting = &fs.setting;
    let (mul, star) = realize_tables(setting, &fs.pair);
    let size = setting.k_order() * setting.h_order();
    let rows: Vec<Vec<usize>> = mul.chunks(size).map(<[usize]>::to_vec).collect();
    let gr = verify_group(&rows)?;
    if !gr.is_valid() {
        return Err(Error::Structural(format!(
            "realized product is not a group:\n{gr}"
        )));
    }
    let group = FiniteGroup::from_flat_unchecked(size, mul);
    let total = MultLieAlgebra::from_flat(group, star)
        .map_err(|e| Error::Structural(format!("realization is not a multiplicative Lie algebra: {e}")))?;
    let kernel = MultLieAlgebra::trivial_star(setting.h.clone());
    let (iota, beta) = kernel_maps(setting);
    let ext = Extension::new(kernel, total, setting.k.clone(), iota, beta)
        .map_err(|e| Error::Structural(format!("realization is not an extension: {e}")))?;
    let t = ext.canonical_section();
    let back = match setting.mode() {
        Mode::Center if ext.is_center() => crate::extensions::extract_center_data(&ext, &t)?,
        Mode::Lie if ext.is_lie_center() => crate::extensions::extract_lie_center_data(&ext, &t)?,
        _ => {
            return Err(Error::Structural(format!(
                "realization is not a {} extension",
                setting.mode().name()
            )))
        }
    };
    if back != *fs {
        return Err(Error::Structural(
            "extraction from the realization does not return the factor system".into(),
        ));
    }
    Ok((ext, t))
}
