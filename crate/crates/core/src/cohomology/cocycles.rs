use rayon::prelude::*;

use super::search::CellSearch;
use super::SearchOptions;
use crate::algebra::{FiniteGroup, MultLieAlgebra};
use crate::error::{Error, Result};
use crate::factor_systems::{
    center_holds, center_laws, f_cocycle_holds, lie_holds, lie_laws, twist_report, Action,
    CocyclePair, EvalCtx, Mode, PairFunction, Setting, Twist,
};

fn pow_saturating(base: usize, exp: usize) -> u128 {
    (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX)
}

/// Candidate count for the normalized product part: `|H|^((|K|-1)²)`.
pub fn group_cocycle_estimate(k_order: usize, h_order: usize) -> u128 {
    let free = k_order.saturating_sub(1);
    pow_saturating(h_order, free * free)
}

/// Up-front estimate for a full pair search,
/// `|H|^((n-1)²) · (1 + |H|^((n-1)(n-2)))` with `n = |K|`: every product
/// part, plus the star parts tried per product part in the worst case.
pub fn mla_cocycle_estimate(k_order: usize, h_order: usize) -> u128 {
    let free = k_order.saturating_sub(1);
    let star = pow_saturating(h_order, free * free.saturating_sub(1));
    group_cocycle_estimate(k_order, h_order).saturating_mul(star.saturating_add(1))
}

fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        return Err(Error::Budget { required, budget });
    }
    Ok(())
}

/// Off-axis cells `(x, y)` with `x, y ≠ 1`, row-major.
fn free_cells(n: usize, skip_diagonal: bool) -> Vec<usize> {
    (1..n)
        .flat_map(|x| (1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| !(skip_diagonal && x == y))
        .map(|(x, y)| x * n + y)
        .collect()
}

/// All normalized product parts satisfying the cocycle identity of the
/// setting's mode, in lexicographic order.
fn product_parts(setting: &Setting) -> Vec<PairFunction> {
    let (n, m) = (setting.k_order(), setting.h_order());
    let ctx = EvalCtx::new(setting);
    let search = CellSearch::new(free_cells(n, false), n * n, m, n * n * n, |id, read| {
        let (x, y, z) = (id / (n * n), id / n % n, id % n);
        f_cocycle_holds(&ctx, x, y, z, &|a, b| {
            read(a * n + b);
            0
        });
    });
    let mut table = vec![0; n * n];
    search
        .solve(&mut table, &|id, t: &[usize]| {
            let (x, y, z) = (id / (n * n), id / n % n, id % n);
            f_cocycle_holds(&ctx, x, y, z, &|a, b| t[a * n + b])
        })
        .into_iter()
        .map(|t| PairFunction::from_flat(n, m, t))
        .collect()
}

/// Normalized 2-cocycles `K × K → H`, untwisted when `action` is `None` and
/// twisted by `x ↦ action_x ∈ Aut(H)` otherwise:
/// `f(x,y) f(xy,z) = action_x(f(y,z)) f(x,yz)`.
///
/// Enumerates the `(|K|-1)²` free cells with each triple checked as soon as
/// its last cell is set.
pub fn group_2cocycles(
    k: &FiniteGroup,
    h: &FiniteGroup,
    action: Option<&Action>,
    opts: SearchOptions,
) -> Result<Vec<PairFunction>> {
    let kk = MultLieAlgebra::trivial_star(k.clone());
    let twist = match action {
        None => Twist::trivial(Mode::Center, k.order(), h.order()),
        Some(a) => Twist::Sigma(a.clone()),
    };
    let setting = Setting::new(kk, h.clone(), twist)?;
    if action.is_some() && !twist_report(&setting)?.is_valid() {
        return Err(Error::Precondition(
            "action is not a homomorphism K → Aut(H)".into(),
        ));
    }
    check_budget(group_cocycle_estimate(k.order(), h.order()), opts.budget)?;
    Ok(product_parts(&setting))
}

/// All pairs `(f, h)` passing the displayed equations of the setting's mode,
/// sorted lexicographically by `(f, h)`.
///
/// Product parts come from the cocycle search; for each one the
/// `(|K|-1)(|K|-2)` free star cells are searched with every compatibility
/// instance checked once the last star cell it reads is fixed.
pub fn mla_2cocycles(setting: &Setting, opts: SearchOptions) -> Result<Vec<CocyclePair>> {
    let tw = twist_report(setting)?;
    if !tw.is_valid() {
        return Err(Error::Precondition(format!(
            "twist is not admissible for {} mode:\n{tw}",
            setting.mode().name()
        )));
    }
    let (n, m) = (setting.k_order(), setting.h_order());
    check_budget(mla_cocycle_estimate(n, m), opts.budget)?;
    let products = product_parts(setting);
    let ctx = EvalCtx::new(setting);
    let mode = setting.mode();
    let laws = match mode {
        Mode::Center => center_laws(),
        Mode::Lie => lie_laws(),
    };
    let n3 = n * n * n;
    let decode = |id: usize| (laws[id / n3], [id % n3 / (n * n), id / n % n, id % n]);
    let holds = |id: usize, f: &dyn Fn(usize, usize) -> usize, h: &dyn Fn(usize, usize) -> usize| {
        let (law, xyz) = decode(id);
        match mode {
            Mode::Center => center_holds(&ctx, law, xyz, &f, &h),
            Mode::Lie => (0..m).all(|a| {
                (0..m).all(|b| {
                    (0..m).all(|c| lie_holds(&ctx, law, xyz, [a, b, c], opts.l6, &f, &h))
                })
            }),
        }
    };
    let search = CellSearch::new(free_cells(n, true), n * n, m, 4 * n3, |id, read| {
        holds(id, &|_, _| 0, &|a, b| {
            read(a * n + b);
            0
        });
    });
    let found: Vec<Vec<CocyclePair>> = products
        .par_iter()
        .map(|f| {
            let mut table = vec![0; n * n];
            search
                .solve(&mut table, &|id, t: &[usize]| {
                    holds(id, &|a, b| f.get(a, b), &|a, b| t[a * n + b])
                })
                .into_iter()
                .map(|t| CocyclePair {
                    mul: f.clone(),
                    star: PairFunction::from_flat(n, m, t),
                })
                .collect()
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}
