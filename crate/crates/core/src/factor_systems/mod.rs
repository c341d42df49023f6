//! Center and Lie-center factor systems.
//!
//! A factor system records, relative to a section `t`, how the product and
//! the star of an extension `1 → H → G → K → 1` deviate from those of `K`:
//!
//! * center: `(a,x)(b,y) = (ab f(x,y), xy)` and
//!   `(a,x)*(b,y) = (Γ_x(b) Γ_y(a⁻¹) h(x,y), x*y)`;
//! * Lie center: `(a,x)(b,y) = (a σ_x(b) f(x,y), xy)` and
//!   `(a,x)*(b,y) = (ab σ_{x*y}(a⁻¹b⁻¹) h(x,y), x*y)`.
//!
//! The displayed compatibility equations are evaluated literally by
//! [`validate`]; [`realize`] builds the extension, which is the authoritative
//! test of validity.

mod equations;
mod morphism;
mod realize;

pub use equations::L6Reading;
pub(crate) use equations::{
    center_holds, center_laws, f_cocycle_holds, lie_holds, lie_laws, EvalCtx,
};
pub use morphism::{compose_fs_morphisms, verify_fs_morphism, FsMorphism};
pub use realize::{realization_report, realize, realize_tables, realize_unvalidated};

use crate::algebra::{
    aut_group, end_mla, group_hom_report, mla_hom_report, FiniteGroup, GroupMap,
    MultLieAlgebra,
};
use crate::diagnostics::{Law, Report, DEFAULT_CAP};
use crate::error::{Error, Result};

/// A function `K × K → H`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairFunction {
    k_order: usize,
    h_order: usize,
    table: Vec<usize>,
}

impl PairFunction {
    pub fn new(h_order: usize, rows: &[Vec<usize>]) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::Malformed("pair function with empty domain".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != k {
                return Err(Error::Malformed(format!(
                    "pair function row {i} has {} entries, expected {k}",
                    r.len()
                )));
            }
            if let Some(&v) = r.iter().find(|&&v| v >= h_order) {
                return Err(Error::Malformed(format!(
                    "pair function row {i} has value {v}, H has order {h_order}"
                )));
            }
        }
        Ok(PairFunction {
            k_order: k,
            h_order,
            table: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn trivial(k_order: usize, h_order: usize) -> Self {
        PairFunction {
            k_order,
            h_order,
            table: vec![0; k_order * k_order],
        }
    }

    pub(crate) fn from_flat(k_order: usize, h_order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), k_order * k_order);
        PairFunction {
            k_order,
            h_order,
            table,
        }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.k_order + y]
    }

    pub fn set(&mut self, x: usize, y: usize, v: usize) {
        assert!(v < self.h_order, "value {v} outside H");
        self.table[x * self.k_order + y] = v;
    }

    pub fn k_order(&self) -> usize {
        self.k_order
    }

    pub fn h_order(&self) -> usize {
        self.h_order
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.k_order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    /// Pointwise product in `H`.
    pub fn product(&self, other: &PairFunction, h: &FiniteGroup) -> PairFunction {
        PairFunction {
            table: self
                .table
                .iter()
                .zip(&other.table)
                .map(|(&a, &b)| h.mul(a, b))
                .collect(),
            ..self.clone()
        }
    }

    /// Pointwise inverse in `H`.
    pub fn inverse(&self, h: &FiniteGroup) -> PairFunction {
        PairFunction {
            table: self.table.iter().map(|&a| h.inv(a)).collect(),
            ..self.clone()
        }
    }
}

/// A map `x ↦ (H → H)`; row `x` is the table of the map attached to `x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Action {
    h_order: usize,
    table: Vec<usize>,
}

impl Action {
    pub fn new(h_order: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Malformed("action with empty domain".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != h_order {
                return Err(Error::Malformed(format!(
                    "action row {i} has {} entries, H has order {h_order}",
                    r.len()
                )));
            }
            if let Some(&v) = r.iter().find(|&&v| v >= h_order) {
                return Err(Error::Malformed(format!(
                    "action row {i} has value {v}, H has order {h_order}"
                )));
            }
        }
        Ok(Action {
            h_order,
            table: rows.iter().flatten().copied().collect(),
        })
    }

    /// Every element acts as the zero endomorphism.
    pub fn zero(k_order: usize, h_order: usize) -> Self {
        Action {
            h_order,
            table: vec![0; k_order * h_order],
        }
    }

    /// Every element acts as the identity.
    pub fn identity(k_order: usize, h_order: usize) -> Self {
        Action {
            h_order,
            table: (0..k_order).flat_map(|_| 0..h_order).collect(),
        }
    }

    /// Builds an action from one map per element.
    pub fn from_maps(maps: &[GroupMap]) -> Self {
        let h_order = maps[0].domain();
        Action {
            h_order,
            table: maps.iter().flat_map(|m| m.table().iter().copied()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize, a: usize) -> usize {
        self.table[x * self.h_order + a]
    }

    pub fn map_of(&self, x: usize) -> &[usize] {
        &self.table[x * self.h_order..(x + 1) * self.h_order]
    }

    pub fn k_order(&self) -> usize {
        self.table.len() / self.h_order
    }

    pub fn h_order(&self) -> usize {
        self.h_order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.h_order).map(<[usize]>::to_vec).collect()
    }
}

/// Which of the two extension theories a factor system belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Center,
    Lie,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Center => "center",
            Mode::Lie => "lie",
        }
    }
}

/// Action data: a star action `x ↦ Γ_x ∈ End(H)` for center systems, or a
/// conjugation action `x ↦ σ_x ∈ Aut(H)` for Lie-center systems.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Twist {
    Gamma(Action),
    Sigma(Action),
}

impl Twist {
    pub fn mode(&self) -> Mode {
        match self {
            Twist::Gamma(_) => Mode::Center,
            Twist::Sigma(_) => Mode::Lie,
        }
    }

    pub fn action(&self) -> &Action {
        match self {
            Twist::Gamma(a) | Twist::Sigma(a) => a,
        }
    }

    /// The twist carried by a split extension with no action: `Γ ≡ 0` or `σ ≡ id`.
    pub fn trivial(mode: Mode, k_order: usize, h_order: usize) -> Self {
        match mode {
            Mode::Center => Twist::Gamma(Action::zero(k_order, h_order)),
            Mode::Lie => Twist::Sigma(Action::identity(k_order, h_order)),
        }
    }
}

/// The fixed data a factor system lives over: `K`, an abelian `H`, and a twist.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Setting {
    pub k: MultLieAlgebra,
    pub h: FiniteGroup,
    pub twist: Twist,
}

impl Setting {
    /// Checks shapes and that `H` is abelian. Twist laws are checked separately
    /// by [`twist_report`] so that they show up in validator reports.
    pub fn new(k: MultLieAlgebra, h: FiniteGroup, twist: Twist) -> Result<Self> {
        if !h.is_abelian() {
            return Err(Error::Precondition("H must be abelian".into()));
        }
        let a = twist.action();
        if a.h_order() != h.order() || a.k_order() != k.order() {
            return Err(Error::Malformed(format!(
                "twist is indexed {}×{}, expected |K| = {} by |H| = {}",
                a.k_order(),
                a.h_order(),
                k.order(),
                h.order()
            )));
        }
        Ok(Setting { k, h, twist })
    }

    pub fn mode(&self) -> Mode {
        self.twist.mode()
    }

    pub fn action(&self) -> &Action {
        self.twist.action()
    }

    pub fn k_order(&self) -> usize {
        self.k.order()
    }

    pub fn h_order(&self) -> usize {
        self.h.order()
    }

    pub(crate) fn check_pair(&self, pair: &CocyclePair) -> Result<()> {
        for (name, p) in [("product part", &pair.mul), ("star part", &pair.star)] {
            if p.k_order() != self.k_order() || p.h_order() != self.h_order() {
                return Err(Error::Malformed(format!(
                    "{name} is a {}×{} table over |H| = {}, expected {}×{} over {}",
                    p.k_order(),
                    p.k_order(),
                    p.h_order(),
                    self.k_order(),
                    self.k_order(),
                    self.h_order()
                )));
            }
        }
        Ok(())
    }
}

/// Checks that the twist is an MLA hom `K → End(H)` (center) or a group hom
/// `K → Aut(H)` (Lie center). Violations are reported under [`Law::TwistHom`]
/// with the offending pair of `K` elements, or a single element whose map is
/// not an endomorphism (resp. automorphism).
pub fn twist_report(setting: &Setting) -> Result<Report> {
    let (k, h) = (&setting.k, &setting.h);
    let action = setting.action();
    let mut report = Report::default();
    match &setting.twist {
        Twist::Gamma(_) => {
            let end = end_mla(h)?;
            let mut idx = Vec::with_capacity(k.order());
            for x in k.elements() {
                match end.index_of(action.map_of(x)) {
                    Some(i) => idx.push(i),
                    None => {
                        report.push(Law::TwistHom, vec![x]);
                        return Ok(report);
                    }
                }
            }
            let map = GroupMap::new(end.len(), idx)?;
            for v in mla_hom_report(&map, k, end.mla())?.violations() {
                report.push(Law::TwistHom, v.witness.clone());
            }
        }
        Twist::Sigma(_) => {
            let aut = aut_group(h);
            let mut idx = Vec::with_capacity(k.order());
            for x in k.elements() {
                match aut.index_of(action.map_of(x)) {
                    Some(i) => idx.push(i),
                    None => {
                        report.push(Law::TwistHom, vec![x]);
                        return Ok(report);
                    }
                }
            }
            let map = GroupMap::new(aut.group().order(), idx)?;
            for v in group_hom_report(&map, k.group(), aut.group())?.violations() {
                report.push(Law::TwistHom, v.witness.clone());
            }
        }
    }
    Ok(report)
}

/// A pair `(f, h)`: the product part and the star part of a factor system.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CocyclePair {
    pub mul: PairFunction,
    pub star: PairFunction,
}

impl CocyclePair {
    pub fn trivial(k_order: usize, h_order: usize) -> Self {
        CocyclePair {
            mul: PairFunction::trivial(k_order, h_order),
            star: PairFunction::trivial(k_order, h_order),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.mul.is_trivial() && self.star.is_trivial()
    }

    /// Pointwise product of both parts.
    pub fn product(&self, other: &CocyclePair, h: &FiniteGroup) -> CocyclePair {
        CocyclePair {
            mul: self.mul.product(&other.mul, h),
            star: self.star.product(&other.star, h),
        }
    }

    pub fn inverse(&self, h: &FiniteGroup) -> CocyclePair {
        CocyclePair {
            mul: self.mul.inverse(h),
            star: self.star.inverse(h),
        }
    }
}

/// A factor system: a setting plus a cocycle pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorSystem {
    pub setting: Setting,
    pub pair: CocyclePair,
}

impl FactorSystem {
    pub fn new(setting: Setting, pair: CocyclePair) -> Result<Self> {
        setting.check_pair(&pair)?;
        Ok(FactorSystem { setting, pair })
    }

    pub fn mode(&self) -> Mode {
        self.setting.mode()
    }

    pub fn k(&self) -> &MultLieAlgebra {
        &self.setting.k
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.setting.h
    }

    pub fn mul_part(&self) -> &PairFunction {
        &self.pair.mul
    }

    pub fn star_part(&self) -> &PairFunction {
        &self.pair.star
    }

    pub fn twist(&self) -> &Twist {
        &self.setting.twist
    }
}

/// Validator options.
#[derive(Clone, Copy, Debug)]
pub struct ValidateOptions {
    /// Maximum number of violations to record.
    pub cap: usize,
    /// Reading of the Jacobi-derived Lie equation.
    pub l6: L6Reading,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions {
            cap: DEFAULT_CAP,
            l6: L6Reading::Derived,
        }
    }
}

/// Evaluates every displayed equation for the mode of `setting` over the full
/// grid and reports each failing instance. Twist violations are included.
pub fn validate(setting: &Setting, pair: &CocyclePair) -> Result<Report> {
    validate_with(setting, pair, ValidateOptions::default())
}

pub fn validate_with(
    setting: &Setting,
    pair: &CocyclePair,
    opts: ValidateOptions,
) -> Result<Report> {
    setting.check_pair(pair)?;
    let mut report = Report::with_cap(opts.cap);
    report.merge(twist_report(setting)?);
    let ctx = EvalCtx::new(setting);
    let n = setting.k_order();
    let mode = setting.mode();
    let (n0, n1, n2) = match mode {
        Mode::Center => (Law::C0, Law::C1, Law::C2),
        Mode::Lie => (Law::L0, Law::L1, Law::L2),
    };
    for x in 0..n {
        if (pair.mul.get(0, x) != 0 || pair.mul.get(x, 0) != 0) && !report.push(n0, vec![x]) {
            return Ok(report);
        }
    }
    for x in 0..n {
        let s = &pair.star;
        if (s.get(x, x) != 0 || s.get(x, 0) != 0 || s.get(0, x) != 0) && !report.push(n2, vec![x])
        {
            return Ok(report);
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !f_cocycle_holds(&ctx, x, y, z, &|a, b| pair.mul.get(a, b))
                    && !report.push(n1, vec![x, y, z])
                {
                    return Ok(report);
                }
            }
        }
    }
    let f = |a: usize, b: usize| pair.mul.get(a, b);
    let h = |a: usize, b: usize| pair.star.get(a, b);
    match mode {
        Mode::Center => {
            for law in center_laws() {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            if !center_holds(&ctx, law, [x, y, z], &f, &h)
                                && !report.push(law, vec![x, y, z])
                            {
                                return Ok(report);
                            }
                        }
                    }
                }
            }
        }
        Mode::Lie => {
            let m = setting.h_order();
            for law in lie_laws() {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            for a in 0..m {
                                for b in 0..m {
                                    for c in 0..m {
                                        if !lie_holds(&ctx, law, [x, y, z], [a, b, c], opts.l6, &f, &h)
                                            && !report.push(law, vec![x, y, z, a, b, c])
                                        {
                                            return Ok(report);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Validates a center factor system (equations C0–C6).
pub fn validate_center_fs(fs: &FactorSystem) -> Result<Report> {
    if fs.mode() != Mode::Center {
        return Err(Error::Precondition("expected a center factor system".into()));
    }
    validate(&fs.setting, &fs.pair)
}

/// Validates a Lie-center factor system (equations L0–L6).
pub fn validate_lie_center_fs(fs: &FactorSystem) -> Result<Report> {
    if fs.mode() != Mode::Lie {
        return Err(Error::Precondition("expected a Lie-center factor system".into()));
    }
    validate(&fs.setting, &fs.pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn z2() -> FiniteGroup {
        FiniteGroup::cyclic(2)
    }

    #[test]
    fn trivial_system_is_valid_for_any_gamma_hom() {
        let k = MultLieAlgebra::trivial_star(FiniteGroup::cyclic(4));
        let end = end_mla(&z2()).unwrap();
        for hom in crate::algebra::enumerate_mla_homs(&k, end.mla()) {
            let maps: Vec<GroupMap> = hom.table().iter().map(|&i| end.map(i).clone()).collect();
            let s = Setting::new(k.clone(), z2(), Twist::Gamma(Action::from_maps(&maps))).unwrap();
            assert!(validate(&s, &CocyclePair::trivial(4, 2)).unwrap().is_valid());
        }
    }

    #[test]
    fn trivial_lie_system_with_inversion_is_valid() {
        let k = MultLieAlgebra::trivial_star(z2());
        let sigma = Action::new(3, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let s = Setting::new(k, FiniteGroup::cyclic(3), Twist::Sigma(sigma)).unwrap();
        assert!(validate(&s, &CocyclePair::trivial(2, 3)).unwrap().is_valid());
    }

    #[test]
    fn non_hom_twist_is_reported() {
        let k = MultLieAlgebra::trivial_star(FiniteGroup::cyclic(3));
        // x ↦ inversion for every x ≠ 1 is not a hom Z3 → Aut(Z3)
        let sigma = Action::new(3, &[vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]]).unwrap();
        let s = Setting::new(k, FiniteGroup::cyclic(3), Twist::Sigma(sigma)).unwrap();
        let r = twist_report(&s).unwrap();
        assert!(r.has(Law::TwistHom));
    }

    #[test]
    fn normalization_violations_are_named() {
        let k = MultLieAlgebra::trivial_star(z2());
        let s = Setting::new(k, z2(), Twist::trivial(Mode::Center, 2, 2)).unwrap();
        let pair = CocyclePair {
            mul: PairFunction::new(2, &[vec![0, 1], vec![0, 0]]).unwrap(),
            star: PairFunction::new(2, &[vec![0, 0], vec![0, 1]]).unwrap(),
        };
        let r = validate(&s, &pair).unwrap();
        assert_eq!(r.first(Law::C0).unwrap().witness, vec![1]);
        assert_eq!(r.first(Law::C2).unwrap().witness, vec![1]);
    }

    #[test]
    fn shape_mismatch_is_malformed() {
        let k = MultLieAlgebra::trivial_star(z2());
        let s = Setting::new(k, z2(), Twist::trivial(Mode::Center, 2, 2)).unwrap();
        assert!(matches!(
            validate(&s, &CocyclePair::trivial(3, 2)),
            Err(Error::Malformed(_))
        ));
    }
}
