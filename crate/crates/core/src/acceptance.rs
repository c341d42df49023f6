//! The acceptance suite: nine end-to-end checks over the dihedral example and
//! the desk-scale grid, shared by the `acceptance` test target and
//! `mla selftest`.
//!
//! The desk-scale grid is every multiplicative Lie algebra on the trivial
//! group, `Z2`, `Z3`, `Z4` and `Z2 × Z2` as `K`, with `H ∈ {Z2, Z3}`, both
//! modes and every admissible twist.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::algebra::{star_completion, verify_group, FiniteGroup, MultLieAlgebra};
use crate::cohomology::{
    classify_extensions, enumerate_twists, eta_map, group_2cocycles, mla_2cocycles,
    verify_exact_sequence, CohomologyGroup, SearchOptions,
};
use crate::extensions::{
    baer_sum, equivalent_extensions, extract_center_data, extract_general_data,
    extract_lie_center_data, Extension, Section,
};
use crate::factor_systems::{
    realization_report, realize, realize_tables, realize_unvalidated, validate_with, CocyclePair,
    FactorSystem, Mode, PairFunction, Setting, ValidateOptions,
};
use crate::samples::{self, d4_extension, d4_section, desk_scale_kernels, desk_scale_quotients};

pub const TITLES: [&str; 9] = [
    "D4 golden reproduction",
    "round-trip identity",
    "section independence",
    "classification bijection",
    "Baer-sum homomorphism",
    "exact-sequence cardinalities",
    "surjectivity of eta",
    "classical cohomology oracle",
    "validator/realization agreement",
];

/// How many individual failures a detail message lists.
const SHOWN: usize = 4;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} [{}] {} ({:.2}s): {}",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// One point of the desk-scale grid.
#[derive(Clone, Debug)]
pub struct DeskConfig {
    pub label: String,
    pub setting: Setting,
}

/// Every desk-scale `(K, H, twist)`, center mode first.
pub fn desk_configs() -> Vec<DeskConfig> {
    let mut out = Vec::new();
    for mode in [Mode::Center, Mode::Lie] {
        for (kname, k) in desk_scale_quotients() {
            for (hname, h) in desk_scale_kernels() {
                let twists = enumerate_twists(&k, &h, mode).expect("H is abelian and small");
                for (i, twist) in twists.into_iter().enumerate() {
                    out.push(DeskConfig {
                        label: format!("K={kname} H={hname} {} twist#{i}", mode.name()),
                        setting: Setting::new(k.clone(), h.clone(), twist).expect("shapes agree"),
                    });
                }
            }
        }
    }
    out
}

/// Cocycles and cohomology of every desk-scale configuration, computed once.
struct Desk {
    configs: Vec<DeskConfig>,
    cocycles: Vec<Result<Vec<CocyclePair>, String>>,
    groups: Vec<Result<CohomologyGroup, String>>,
}

fn desk() -> &'static Desk {
    static DESK: OnceLock<Desk> = OnceLock::new();
    DESK.get_or_init(|| {
        let configs = desk_configs();
        let cocycles: Vec<Result<Vec<CocyclePair>, String>> = configs
            .par_iter()
            .map(|c| mla_2cocycles(&c.setting, SearchOptions::default()).map_err(|e| e.to_string()))
            .collect();
        let groups = configs
            .par_iter()
            .zip(&cocycles)
            .map(|(c, z)| match z {
                Ok(z) => CohomologyGroup::from_cocycles(&c.setting, z.clone()).map_err(|e| e.to_string()),
                Err(e) => Err(e.clone()),
            })
            .collect();
        Desk {
            configs,
            cocycles,
            groups,
        }
    })
}

/// Collects failures and renders a bounded summary.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.checked += 1;
        self.failures.push(what);
    }

    fn finish(self, unit: &str, extra: String) -> (bool, String) {
        let mut detail = format!("{} {unit} checked, {} failing", self.checked, self.failures.len());
        if !extra.is_empty() {
            detail.push_str("; ");
            detail.push_str(&extra);
        }
        for f in self.failures.iter().take(SHOWN) {
            detail.push_str("\n    ");
            detail.push_str(f);
        }
        if self.failures.len() > SHOWN {
            detail.push_str(&format!("\n    ... and {} more", self.failures.len() - SHOWN));
        }
        (self.failures.is_empty(), detail)
    }
}

pub fn run(number: usize) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = match number {
        1 => d4_golden(),
        2 => round_trip(),
        3 => section_independence(),
        4 => classification(),
        5 => baer(),
        6 => exact_sequence(),
        7 => eta_surjective(),
        8 => classical_oracle(),
        9 => validator_agreement(),
        _ => (false, format!("no criterion {number}")),
    };
    Outcome {
        number,
        title: TITLES.get(number.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=9).map(run).collect()
}

// ---------------------------------------------------------------- 1

const COSET_NAMES: [&str; 4] = ["H", "bH", "aH", "abH"];

fn d4_golden() -> (bool, String) {
    let start = Instant::now();
    let d4 = FiniteGroup::dihedral(4);
    let (a, b) = (samples::A, samples::B);
    let completions = match star_completion(&d4, &[(a, a, 0), (b, b, 0), (a, b, b)]) {
        Ok(c) => c,
        Err(e) => return (false, format!("star completion failed: {e}")),
    };
    let mut problems = Vec::new();
    if completions.len() != 1 {
        problems.push(format!("{} star completions instead of 1", completions.len()));
    }
    if completions.iter().any(|m| !m.verify().is_valid()) {
        problems.push("completed star fails the axioms".into());
    }
    let fs = match d4_extension().and_then(|e| {
        let t = d4_section(&e)?;
        extract_center_data(&e, &t)
    }) {
        Ok(fs) => fs,
        Err(e) => return (false, format!("extraction failed: {e}")),
    };
    // b² is the nontrivial element of H; (x, y) with x = aH, y = bH etc.
    let f_cells: BTreeSet<(usize, usize)> = [(2, 1), (1, 3), (2, 3)].into();
    let h_cells: BTreeSet<(usize, usize)> = [(1, 2), (3, 2), (1, 3)].into();
    for x in 0..4 {
        for y in 0..4 {
            let want = usize::from(f_cells.contains(&(x, y)));
            let got = fs.mul_part().get(x, y);
            if got != want {
                problems.push(format!(
                    "f({},{}) extracted {}, expected {}",
                    COSET_NAMES[x],
                    COSET_NAMES[y],
                    ["e", "b^2"][got.min(1)],
                    ["e", "b^2"][want]
                ));
            }
            let want = usize::from(h_cells.contains(&(x, y)));
            let got = fs.star_part().get(x, y);
            if got != want {
                problems.push(format!(
                    "h({},{}) extracted {}, expected {}",
                    COSET_NAMES[x],
                    COSET_NAMES[y],
                    ["e", "b^2"][got.min(1)],
                    ["e", "b^2"][want]
                ));
            }
        }
    }
    let gamma = vec![vec![0, 0], vec![0, 0], vec![0, 1], vec![0, 1]];
    if fs.twist().action().rows() != gamma {
        problems.push(format!("Gamma extracted as {:?}", fs.twist().action().rows()));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        problems.push(format!("took {:.2}s", elapsed.as_secs_f64()));
    }
    if problems.is_empty() {
        (true, "star, f, h and Gamma match the worked example".into())
    } else {
        (false, problems.join("; "))
    }
}

// ---------------------------------------------------------------- 2

fn extract_mode(ext: &Extension, t: &Section, mode: Mode) -> crate::Result<FactorSystem> {
    match mode {
        Mode::Center => extract_center_data(ext, t),
        Mode::Lie => extract_lie_center_data(ext, t),
    }
}

fn round_trip() -> (bool, String) {
    let start = Instant::now();
    let d = desk();
    let mut tally = Tally::default();
    for (cfg, z) in d.configs.iter().zip(&d.cocycles) {
        let z = match z {
            Ok(z) => z,
            Err(e) => {
                tally.fail(format!("{}: enumeration failed: {e}", cfg.label));
                continue;
            }
        };
        let results: Vec<Option<String>> = z
            .par_iter()
            .map(|c| {
                let fs = FactorSystem::new(cfg.setting.clone(), c.clone()).ok()?;
                let back = realize(&fs).and_then(|(e, _)| {
                    let t = e.canonical_section();
                    extract_mode(&e, &t, cfg.setting.mode())
                });
                match back {
                    Ok(b) if b == fs => None,
                    Ok(_) => Some(format!("{}: extraction differs for {c:?}", cfg.label)),
                    Err(e) => Some(format!("{}: {}", cfg.label, first_line(&e.to_string()))),
                }
            })
            .collect();
        for r in results {
            match r {
                None => tally.check(true, String::new),
                Some(msg) => tally.fail(msg),
            }
        }
    }
    let elapsed = start.elapsed();
    let within = elapsed < Duration::from_secs(300);
    if !within {
        tally.fail(format!("took {:.1}s, limit 300s", elapsed.as_secs_f64()));
    }
    tally.finish(
        "factor systems",
        format!("{} configurations", d.configs.len()),
    )
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

// ---------------------------------------------------------------- 3

fn section_independence() -> (bool, String) {
    let d = desk();
    let mut tally = Tally::default();
    let mut extensions = 0usize;
    for (cfg, z) in d.configs.iter().zip(&d.cocycles) {
        let Ok(z) = z else { continue };
        let results: Vec<Result<usize, String>> = z
            .par_iter()
            .filter_map(|c| {
                let fs = FactorSystem::new(cfg.setting.clone(), c.clone()).ok()?;
                let (ext, _) = realize_unvalidated(&fs).ok()?;
                Some(check_sections(&ext, cfg.setting.mode()).map_err(|e| format!("{}: {e}", cfg.label)))
            })
            .collect();
        for r in results {
            match r {
                Ok(n) => {
                    extensions += 1;
                    for _ in 0..n {
                        tally.check(true, String::new);
                    }
                }
                Err(e) => tally.fail(e),
            }
        }
    }
    tally.finish("sections", format!("{extensions} extensions"))
}

/// Number of sections, or a description of the first disagreement.
fn check_sections(ext: &Extension, mode: Mode) -> Result<usize, String> {
    let sections = ext.sections();
    let mut first = None;
    for t in &sections {
        let data = extract_general_data(ext, t).map_err(|e| e.to_string())?;
        let action = match mode {
            Mode::Center => data.gamma,
            Mode::Lie => data.sigma,
        };
        match &first {
            None => first = Some(action),
            Some(a) if *a == action => {}
            Some(a) => {
                return Err(format!(
                    "section {:?} gives {:?}, first section gives {:?}",
                    t.map().table(),
                    action.rows(),
                    a.rows()
                ))
            }
        }
    }
    Ok(sections.len())
}

// ---------------------------------------------------------------- 4

fn has_element_of_order(g: &FiniteGroup, k: usize) -> bool {
    g.elements().any(|x| g.element_order(x) == k)
}

fn classification() -> (bool, String) {
    let d = desk();
    let mut tally = Tally::default();
    let mut anchors = Vec::new();
    for (cfg, g) in d.configs.iter().zip(&d.groups) {
        let g = match g {
            Ok(g) => g,
            Err(e) => {
                tally.fail(format!("{}: no cohomology group: {}", cfg.label, first_line(e)));
                continue;
            }
        };
        match classify_extensions(g) {
            Ok(c) => {
                tally.check(c.is_bijective(), || {
                    format!(
                        "{}: |H2| {} but {} extension classes (distinct {}, complete {})",
                        cfg.label,
                        g.h2_order(),
                        c.search_classes,
                        c.distinct,
                        c.complete
                    )
                });
                let s = &cfg.setting;
                let trivial_k = s.k.has_trivial_star();
                if s.k_order() == 2 && trivial_k && s.h_order() == 2 && s.twist.action().rows() == [[0, 0], [0, 0]]
                    && s.mode() == Mode::Center
                {
                    let groups: Vec<&FiniteGroup> =
                        c.entries.iter().map(|e| e.extension.total().group()).collect();
                    let ok = groups.len() == 2
                        && groups.iter().filter(|g| has_element_of_order(g, 4)).count() == 1;
                    tally.check(ok, || "Z2 by Z2 does not give exactly Z4 and Z2xZ2".into());
                    anchors.push("Z2 by Z2: Z4 and Z2xZ2");
                }
                if s.k_order() == 2 && s.h_order() == 3 && s.mode() == Mode::Lie && s.twist.action().apply(1, 1) == 2 {
                    let ok = c.entries.len() == 1 && {
                        let t = c.entries[0].extension.total().group();
                        t.order() == 6 && !t.is_abelian()
                    };
                    tally.check(ok, || "Z3 by Z2 with inversion is not a single S3 class".into());
                    anchors.push("Z3 by Z2 with inversion: S3");
                }
            }
            Err(e) => tally.fail(format!("{}: {}", cfg.label, first_line(&e.to_string()))),
        }
    }
    tally.finish("configurations", format!("anchors: {}", anchors.join(", ")))
}

// ---------------------------------------------------------------- 5

fn baer() -> (bool, String) {
    let d = desk();
    let mut tally = Tally::default();
    for (cfg, g) in d.configs.iter().zip(&d.groups) {
        if cfg.setting.mode() != Mode::Center {
            continue;
        }
        let g = match g {
            Ok(g) => g,
            Err(e) => {
                tally.fail(format!("{}: no cohomology group: {}", cfg.label, first_line(e)));
                continue;
            }
        };
        let reps: Vec<(Extension, Section)> = match g
            .representatives()
            .iter()
            .map(|c| realize(&FactorSystem::new(cfg.setting.clone(), c.clone())?))
            .collect::<crate::Result<_>>()
        {
            Ok(r) => r,
            Err(e) => {
                tally.fail(format!("{}: {}", cfg.label, first_line(&e.to_string())));
                continue;
            }
        };
        let h = &cfg.setting.h;
        let pairs: Vec<(usize, usize)> = (0..reps.len())
            .flat_map(|i| (0..reps.len()).map(move |j| (i, j)))
            .collect();
        let results: Vec<Result<(), String>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let (e1, t1) = &reps[i];
                let (e2, t2) = &reps[j];
                let (sum, s) = baer_sum(e1, t1, e2, t2).map_err(|e| e.to_string())?;
                let fs = extract_center_data(&sum, &s).map_err(|e| e.to_string())?;
                let (c1, c2) = (&g.representatives()[i], &g.representatives()[j]);
                if fs.pair != c1.product(c2, h) {
                    return Err(format!("cocycles of class {i} + class {j} are not the pointwise product"));
                }
                if fs.twist() != &cfg.setting.twist {
                    return Err(format!("Gamma changes in class {i} + class {j}"));
                }
                if g.class_of(&fs.pair) != Some(g.class_product(i, j)) {
                    return Err(format!("class of {i} + {j} is not the class product"));
                }
                if j == 0 && equivalent_extensions(&sum, e1).map_err(|e| e.to_string())?.is_none() {
                    return Err(format!("class {i} plus the split extension is not equivalent to it"));
                }
                Ok(())
            })
            .collect();
        for r in results {
            match r {
                Ok(()) => tally.check(true, String::new),
                Err(e) => tally.fail(format!("{}: {e}", cfg.label)),
            }
        }
    }
    tally.finish("Baer sums", String::new())
}

// ---------------------------------------------------------------- 6

fn exact_sequence() -> (bool, String) {
    let d = desk();
    let mut tally = Tally::default();
    let mut anchor = None;
    for (cfg, g) in d.configs.iter().zip(&d.groups) {
        let g = match g {
            Ok(g) => g,
            Err(e) => {
                tally.fail(format!("{}: no cohomology group: {}", cfg.label, first_line(e)));
                continue;
            }
        };
        let r = verify_exact_sequence(g);
        tally.check(r.map_identity() && r.quotient_identity(), || {
            format!(
                "{}: |MAP| {} |Hom| {} |ker chi| {} |Z2| {} |B2| {} |H2| {}",
                cfg.label, r.map_order, r.hom_order, r.kernel_order, r.z2_order, r.b2_order, r.h2_order
            )
        });
        let s = &cfg.setting;
        if s.mode() == Mode::Center && s.k_order() == 2 && s.h_order() == 2 && s.twist.action().rows() == [[0, 0], [0, 0]] {
            let tuple = (r.map_order, r.hom_order, r.z2_order, r.b2_order, r.h2_order);
            tally.check(tuple == (2, 2, 2, 1, 2), || format!("Z2 by Z2 tuple is {tuple:?}"));
            anchor = Some(tuple);
        }
    }
    tally.finish(
        "configurations",
        match anchor {
            Some(t) => format!("Z2 by Z2 gives {t:?}"),
            None => "Z2 by Z2 anchor missing".into(),
        },
    )
}

// ---------------------------------------------------------------- 7

fn eta_surjective() -> (bool, String) {
    let mut tally = Tally::default();
    for mode in [Mode::Center, Mode::Lie] {
        for (kname, k) in desk_scale_quotients() {
            for (hname, h) in desk_scale_kernels() {
                match eta_map(&k, &h, mode) {
                    Ok(entries) => {
                        for e in entries {
                            tally.check(e.outcome.is_ok(), || {
                                format!(
                                    "K={kname} H={hname} {}: twist {:?} has no preimage: {}",
                                    mode.name(),
                                    e.twist.action().rows(),
                                    first_line(e.outcome.as_ref().err().map(String::as_str).unwrap_or(""))
                                )
                            });
                        }
                    }
                    Err(e) => tally.fail(format!("K={kname} H={hname}: {e}")),
                }
            }
        }
    }
    tally.finish("twists", String::new())
}

// ---------------------------------------------------------------- 8

/// Rank of a matrix over `F_p`.
fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = (1..p).find(|&i| i * rows[rank][col] % p == 1).expect("p is prime");
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] % p != 0 {
                let factor = rows[r][col];
                for c in 0..cols {
                    rows[r][c] = (rows[r][c] + p * p - factor * rows[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `|H²(K; Z_p)|` with trivial action from the standard inhomogeneous
/// complex, by linear algebra over `F_p`: all cochains, no normalization.
pub fn classical_h2_order(k: &FiniteGroup, p: usize) -> u128 {
    let n = k.order();
    let p64 = p as u64;
    // d1: C¹ → C², (dφ)(x,y) = φ(x) + φ(y) − φ(xy); one row per (x,y)
    let d1: Vec<Vec<u64>> = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            let mut row = vec![0u64; n];
            row[x] += 1;
            row[y] += 1;
            row[k.mul(x, y)] += p64 - 1;
            row.iter().map(|v| v % p64).collect()
        })
        .collect();
    // d2: C² → C³, (df)(x,y,z) = f(y,z) − f(xy,z) + f(x,yz) − f(x,y)
    let d2: Vec<Vec<u64>> = (0..n * n * n)
        .map(|i| {
            let (x, y, z) = (i / (n * n), i / n % n, i % n);
            let mut row = vec![0u64; n * n];
            row[y * n + z] += 1;
            row[k.mul(x, y) * n + z] += p64 - 1;
            row[x * n + k.mul(y, z)] += 1;
            row[x * n + y] += p64 - 1;
            row.iter().map(|v| v % p64).collect()
        })
        .collect();
    let dim_z2 = n * n - rank_mod_p(d2, p64);
    let dim_b2 = rank_mod_p(transpose(&d1), p64);
    (p as u128).pow((dim_z2 - dim_b2) as u32)
}

fn transpose(m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|c| m.iter().map(|r| r[c]).collect()).collect()
}

fn classical_oracle() -> (bool, String) {
    let mut tally = Tally::default();
    let mut rows = Vec::new();
    let ks = [
        ("Z2", FiniteGroup::cyclic(2)),
        ("Z3", FiniteGroup::cyclic(3)),
        ("Z4", FiniteGroup::cyclic(4)),
        ("V4", samples::klein_four()),
    ];
    for (kname, k) in &ks {
        for (hname, h) in desk_scale_kernels() {
            let kk = MultLieAlgebra::trivial_star(k.clone());
            let twist = crate::factor_systems::Twist::trivial(Mode::Center, k.order(), h.order());
            let setting = Setting::new(kk, h.clone(), twist).expect("shapes agree");
            let ml = CohomologyGroup::compute(&setting, SearchOptions::default());
            let classical = classical_h2_order(k, h.order());
            match ml {
                Ok(g) => {
                    rows.push(format!("{kname}/{hname} {}:{classical}", g.h2_order()));
                    tally.check(g.h2_order() as u128 == classical, || {
                        format!(
                            "K={kname} H={hname}: multiplicative |H2| {} vs classical {classical}",
                            g.h2_order()
                        )
                    });
                }
                Err(e) => tally.fail(format!("K={kname} H={hname}: {e}")),
            }
        }
    }
    tally.finish("pairs", format!("ML:classical {}", rows.join(", ")))
}

// ---------------------------------------------------------------- 9

/// Realized product of `f` (with `h ≡ 1`) is a group.
fn realized_group_ok(setting: &Setting, f: &PairFunction) -> bool {
    let (n, m) = (setting.k_order(), setting.h_order());
    let pair = CocyclePair {
        mul: f.clone(),
        star: PairFunction::trivial(n, m),
    };
    let (mul, _) = realize_tables(setting, &pair);
    let size = n * m;
    let rows: Vec<Vec<usize>> = mul.chunks(size).map(<[usize]>::to_vec).collect();
    verify_group(&rows).is_ok_and(|r| r.is_valid())
}

fn nth_normalized_table(mut code: u128, n: usize, m: usize, free: &[usize]) -> Vec<usize> {
    let mut t = vec![0; n * n];
    for &c in free.iter().rev() {
        t[c] = (code % m as u128) as usize;
        code /= m as u128;
    }
    t
}

fn validator_agreement() -> (bool, String) {
    let d = desk();
    let mut tally = Tally::default();
    let mut validator_only = 0usize;
    let mut realization_only = 0usize;
    let quick = ValidateOptions {
        cap: 1,
        ..ValidateOptions::default()
    };
    for cfg in &d.configs {
        let s = &cfg.setting;
        let (n, m) = (s.k_order(), s.h_order());
        let f_free: Vec<usize> = (1..n).flat_map(|x| (1..n).map(move |y| x * n + y)).collect();
        let h_free: Vec<usize> = f_free.iter().copied().filter(|&c| c / n != c % n).collect();
        // product part: the cocycle identity against associativity of the realization
        let action = match s.mode() {
            Mode::Center => None,
            Mode::Lie => Some(s.action()),
        };
        let cocycles: BTreeSet<PairFunction> = match group_2cocycles(s.k.group(), &s.h, action, SearchOptions::default()) {
            Ok(f) => f.into_iter().collect(),
            Err(e) => {
                tally.fail(format!("{}: {e}", cfg.label));
                continue;
            }
        };
        let f_count = (m as u128).pow(f_free.len() as u32);
        let products: Vec<(PairFunction, bool, bool)> = (0..f_count)
            .into_par_iter()
            .map(|code| {
                let f = PairFunction::from_flat(n, m, nth_normalized_table(code, n, m, &f_free));
                let real = realized_group_ok(s, &f);
                let valid = cocycles.contains(&f);
                (f, valid, real)
            })
            .collect();
        for (f, valid, real) in &products {
            tally.check(valid == real, || {
                format!(
                    "{}: product part {:?} {}",
                    cfg.label,
                    f.rows(),
                    if *valid { "passes the cocycle identity but does not realize a group" } else { "realizes a group but fails the cocycle identity" }
                )
            });
        }
        // star part, over every product part that realizes a group
        let h_count = (m as u128).pow(h_free.len() as u32);
        let good: Vec<&PairFunction> = products.iter().filter(|p| p.1 && p.2).map(|p| &p.0).collect();
        let h_free = &h_free;
        let verdicts: Vec<(CocyclePair, bool, bool, String)> = good
            .par_iter()
            .flat_map_iter(|f| {
                (0..h_count).filter_map(move |code| {
                    let pair = CocyclePair {
                        mul: (*f).clone(),
                        star: PairFunction::from_flat(n, m, nth_normalized_table(code, n, m, &h_free)),
                    };
                    let vr = validate_with(s, &pair, quick).ok()?;
                    let rr = realization_report(s, &pair, 1).ok()?;
                    let (valid, real) = (vr.is_valid(), rr.is_valid());
                    if valid == real {
                        return Some((pair, valid, real, String::new()));
                    }
                    let why = if valid {
                        format!("realization breaks {}", rr)
                    } else {
                        format!("validator rejects with {}", vr)
                    };
                    Some((pair, valid, real, why.replace('\n', " ")))
                })
            })
            .collect();
        for (pair, valid, real, why) in verdicts {
            if valid && !real {
                validator_only += 1;
            }
            if real && !valid {
                realization_only += 1;
            }
            tally.check(valid == real, || {
                format!(
                    "{}: f {:?} h {:?}: {why}",
                    cfg.label,
                    pair.mul.rows(),
                    pair.star.rows()
                )
            });
        }
    }
    tally.finish(
        "pairs",
        format!("{validator_only} accepted only by the validators, {realization_only} only by realization"),
    )
}
