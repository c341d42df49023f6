//! Instance-level evaluation of the factor-system equations.
//!
//! Each evaluator reads the product part and the star part through closures.
//! The cohomology search passes recording closures to discover which cells
//! an instance touches, so the same code drives validation and enumeration.

use super::{Action, Mode, Setting};
use crate::algebra::{FiniteGroup, MultLieAlgebra};
use crate::diagnostics::Law;

/// How to read the Jacobi-derived Lie-center equation.
///
/// Its printed form writes the star `w1 * w2` in two places where expanding
/// the Jacobi identity produces the product `w1 w2` (with
/// `w1 = (x*y)*ʸz`, `w2 = (y*z)*ᶻx`). `Derived` uses the product and is the
/// default; `AsPrinted` keeps the star for diagnostic comparison.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum L6Reading {
    #[default]
    Derived,
    AsPrinted,
}

pub(crate) struct EvalCtx<'a> {
    k: &'a MultLieAlgebra,
    h: &'a FiniteGroup,
    act: &'a Action,
    mode: Mode,
}

impl<'a> EvalCtx<'a> {
    pub(crate) fn new(setting: &'a Setting) -> Self {
        EvalCtx {
            k: &setting.k,
            h: &setting.h,
            act: setting.action(),
            mode: setting.mode(),
        }
    }

    #[inline]
    fn p(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &e| self.h.mul(acc, e))
    }

    #[inline]
    fn i(&self, a: usize) -> usize {
        self.h.inv(a)
    }

    /// The twist attached to `x`, applied to `a`.
    #[inline]
    fn t(&self, x: usize, a: usize) -> usize {
        self.act.apply(x, a)
    }

    #[inline]
    fn km(&self, x: usize, y: usize) -> usize {
        self.k.mul(x, y)
    }

    #[inline]
    fn ki(&self, x: usize) -> usize {
        self.k.inv(x)
    }

    #[inline]
    fn kc(&self, y: usize, w: usize) -> usize {
        self.k.conj(y, w)
    }

    #[inline]
    fn ks(&self, x: usize, y: usize) -> usize {
        self.k.star(x, y)
    }
}

pub(crate) fn center_laws() -> [Law; 4] {
    [Law::C3, Law::C4, Law::C5, Law::C6]
}

pub(crate) fn lie_laws() -> [Law; 4] {
    [Law::L3, Law::L4, Law::L5, Law::L6]
}

/// The (possibly twisted) 2-cocycle identity at `(x, y, z)`:
/// `f(x,y) f(xy,z) = f(y,z) f(x,yz)` for center systems and
/// `f(x,y) f(xy,z) = σ_x(f(y,z)) f(x,yz)` for Lie-center systems.
pub(crate) fn f_cocycle_holds<F>(c: &EvalCtx, x: usize, y: usize, z: usize, f: &F) -> bool
where
    F: Fn(usize, usize) -> usize,
{
    let lhs = c.h.mul(f(x, y), f(c.km(x, y), z));
    let fyz = match c.mode {
        Mode::Center => f(y, z),
        Mode::Lie => c.t(x, f(y, z)),
    };
    lhs == c.h.mul(fyz, f(x, c.km(y, z)))
}

/// One center compatibility equation at `(x, y, z)`, evaluated as displayed.
pub(crate) fn center_holds<F, H>(c: &EvalCtx, law: Law, [x, y, z]: [usize; 3], f: &F, h: &H) -> bool
where
    F: Fn(usize, usize) -> usize,
    H: Fn(usize, usize) -> usize,
{
    // f(w⁻¹, w)⁻¹, recurring in every conjugation
    let finv = |w: usize| c.i(f(c.ki(w), w));
    match law {
        Law::C3 => {
            let xz = c.ks(x, z);
            let lhs = c.p(&[
                h(x, y),
                h(x, z),
                f(y, xz),
                finv(y),
                f(c.km(y, xz), c.ki(y)),
                f(c.ks(x, y), c.kc(y, xz)),
            ]);
            let rhs = c.p(&[c.t(x, f(y, z)), h(x, c.km(y, z))]);
            lhs == rhs
        }
        Law::C4 => {
            let yz = c.ks(y, z);
            let lhs = c.p(&[
                h(x, z),
                h(y, z),
                f(x, yz),
                finv(x),
                f(c.km(x, yz), c.ki(x)),
                f(c.kc(x, yz), c.ks(x, z)),
            ]);
            let rhs = c.p(&[c.t(z, c.i(f(x, y))), h(c.km(x, y), z)]);
            lhs == rhs
        }
        Law::C5 => {
            let zi = c.ki(z);
            let a = c.p(&[f(z, y), finv(z), f(c.km(z, y), zi)]);
            let b = c.i(c.p(&[f(z, x), finv(z), f(c.km(z, x), zi)]));
            let lhs = c.p(&[c.t(x, a), c.t(y, b), h(c.kc(z, x), c.kc(z, y))]);
            let xy = c.ks(x, y);
            let rhs = c.p(&[h(x, y), f(z, xy), finv(z), f(c.km(z, xy), zi)]);
            lhs == rhs
        }
        Law::C6 => {
            // conjugation correction for ʷv: f(w,v) f(w⁻¹,w)⁻¹ f(wv,w⁻¹)
            let corr = |w: usize, v: usize| c.p(&[f(w, v), finv(w), f(c.km(w, v), c.ki(w))]);
            let (xy, yz, zx) = (c.ks(x, y), c.ks(y, z), c.ks(z, x));
            let (yz_, zx_, xy_) = (c.kc(y, z), c.kc(z, x), c.kc(x, y));
            let w1 = c.ks(xy, yz_);
            let w2 = c.ks(yz, zx_);
            let w3 = c.ks(zx, xy_);
            let total = c.p(&[
                c.t(xy, corr(y, z)),
                c.t(yz, corr(z, x)),
                c.t(zx, corr(x, y)),
                c.t(z, c.i(h(x, y))),
                c.t(x, c.i(h(y, z))),
                c.t(y, c.i(h(z, x))),
                h(xy, yz_),
                h(yz, zx_),
                h(zx, xy_),
                f(w1, w2),
                f(c.km(w1, w2), w3),
            ]);
            total == 0
        }
        _ => unreachable!("not a center compatibility law: {law}"),
    }
}

/// One Lie-center compatibility equation at `(x, y, z)` with free `H`
/// variables `(a, b, c3)`, evaluated as displayed.
pub(crate) fn lie_holds<F, H>(
    c: &EvalCtx,
    law: Law,
    [x, y, z]: [usize; 3],
    [a, b, l]: [usize; 3],
    reading: L6Reading,
    f: &F,
    h: &H,
) -> bool
where
    F: Fn(usize, usize) -> usize,
    H: Fn(usize, usize) -> usize,
{
    let s = |w: usize, v: usize| c.t(w, v);
    let finv = |w: usize| c.i(f(c.ki(w), w));
    match law {
        Law::L3 => {
            let (xy, xz) = (c.ks(x, y), c.ks(x, z));
            let yxz = c.km(y, xz);
            let inner_a = c.p(&[a, l, s(xz, c.i(c.p(&[a, l]))), h(x, z)]);
            let inner = c.p(&[
                c.i(a),
                s(y, inner_a),
                f(y, xz),
                s(yxz, c.p(&[finv(y), s(c.ki(y), c.i(b))])),
                f(yxz, c.ki(y)),
            ]);
            let lhs = c.p(&[s(xy, inner), f(xy, c.kc(y, xz)), h(x, y)]);
            let yz = c.km(y, z);
            let rhs = c.p(&[
                s(y, l),
                f(y, z),
                s(
                    c.ks(x, yz),
                    c.p(&[c.i(a), c.i(b), s(y, c.i(l)), c.i(f(y, z))]),
                ),
                h(x, yz),
            ]);
            lhs == rhs
        }
        Law::L4 => {
            let xy = c.km(x, y);
            let (yz, xz) = (c.ks(y, z), c.ks(x, z));
            let lhs = c.p(&[
                l,
                f(x, y),
                s(
                    c.ks(xy, z),
                    c.p(&[c.i(a), c.i(l), s(x, c.i(b)), c.i(f(x, y))]),
                ),
                h(xy, z),
            ]);
            let xyz = c.km(x, yz);
            let cxyz = c.kc(x, yz);
            let rhs = c.p(&[
                s(x, c.p(&[l, s(yz, c.i(c.p(&[b, l]))), h(y, z)])),
                f(x, yz),
                s(xyz, finv(x)),
                f(xyz, c.ki(x)),
                s(cxyz, c.p(&[l, s(xz, c.i(c.p(&[a, l]))), h(x, z)])),
                f(cxyz, xz),
            ]);
            lhs == rhs
        }
        Law::L5 => {
            let xy = c.ks(x, y);
            let zi = c.ki(z);
            let zxy = c.km(z, xy);
            let lhs = c.p(&[
                s(z, c.p(&[s(xy, c.i(c.p(&[a, b]))), h(x, y)])),
                f(z, xy),
                s(zxy, c.p(&[finv(z), s(zi, c.i(l))])),
                f(zxy, zi),
            ]);
            let (zx, zy) = (c.km(z, x), c.km(z, y));
            let (cx, cy) = (c.kc(z, x), c.kc(z, y));
            let fz = f(zi, z);
            let inner = c.p(&[
                c.i(c.p(&[l, l])),
                s(z, c.i(c.p(&[a, b]))),
                c.i(f(z, x)),
                c.i(f(z, y)),
                s(zx, fz),
                s(zy, fz),
                c.i(f(zy, zi)),
                c.i(f(zx, zi)),
                s(cy, l),
                s(cx, l),
            ]);
            let rhs = c.p(&[
                l,
                f(z, x),
                f(z, y),
                s(zx, finv(z)),
                s(zy, finv(z)),
                s(cx, c.i(l)),
                s(cy, c.i(l)),
                f(zy, zi),
                f(zx, zi),
                s(c.ks(cx, cy), inner),
                h(cx, cy),
            ]);
            lhs == rhs
        }
        Law::L6 => {
            // J for the cyclic slot (x, y, z) with H variables (a, b, l)
            let slot = |x: usize, y: usize, z: usize, a: usize, b: usize, l: usize| {
                let xy = c.ks(x, y);
                let cyz = c.kc(y, z);
                let yz = c.km(y, z);
                let head = c.p(&[
                    a,
                    b,
                    b,
                    s(xy, c.i(c.p(&[a, b]))),
                    h(x, y),
                    s(y, l),
                    f(y, z),
                    s(yz, finv(y)),
                    f(yz, c.ki(y)),
                    s(cyz, c.i(b)),
                ]);
                let w = c.ks(xy, cyz);
                (c.p(&[head, s(w, c.i(head)), h(xy, cyz)]), w)
            };
            let (j1, w1) = slot(x, y, z, a, b, l);
            let (j2, w2) = slot(y, z, x, b, l, a);
            let (j3, w3) = slot(z, x, y, l, a, b);
            let w12 = match reading {
                L6Reading::Derived => c.km(w1, w2),
                L6Reading::AsPrinted => c.ks(w1, w2),
            };
            c.p(&[j1, s(w1, j2), f(w1, w2), s(w12, j3), f(w12, w3)]) == 0
        }
        _ => unreachable!("not a Lie-center compatibility law: {law}"),
    }
}
