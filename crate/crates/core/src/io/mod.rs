//! The `mla-kit v1` text format.
//!
//! Every document starts with the header and a `kind` line, followed by key
//! lines and named sections of whitespace-separated index rows. Element 0 is
//! always the identity. Serialization is canonical: fixed key and section
//! order, single spaces, LF line endings, no trailing whitespace.
//!
//! Syntax problems are [`ParseError`]s carrying a line and column; entries
//! out of range and failed axioms surface as the usual semantic errors.

mod raw;

use std::fmt::Write as _;

pub use raw::{parse_raw, RawDocument, RawSection, HEADER};

use thiserror::Error;

use crate::algebra::{FiniteGroup, GroupMap, MultLieAlgebra};
use crate::cohomology::CohomologyReport;
use crate::error::{Error, Result};
use crate::extensions::{Extension, GeneralData};
use crate::factor_systems::{Action, CocyclePair, FactorSystem, Mode, PairFunction, Setting, Twist};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// The data read off an arbitrary extension, with `K` and `H` attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSystem {
    pub k: MultLieAlgebra,
    pub h: FiniteGroup,
    pub data: GeneralData,
}

#[derive(Clone, Debug)]
pub enum Document {
    Group(FiniteGroup),
    Mla(MultLieAlgebra),
    Map(GroupMap),
    PairFn(PairFunction),
    /// `fs-center` or `fs-lie`, by the mode of the twist.
    FactorSystem(FactorSystem),
    /// `fs-general`
    GeneralSystem(GeneralSystem),
    Extension(Extension),
    CohomologyReport(CohomologyReport),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::Mla(_) => "mla",
            Document::Map(_) => "map",
            Document::PairFn(_) => "pairfn",
            Document::FactorSystem(fs) => match fs.mode() {
                Mode::Center => "fs-center",
                Mode::Lie => "fs-lie",
            },
            Document::GeneralSystem(_) => "fs-general",
            Document::Extension(_) => "extension",
            Document::CohomologyReport(_) => "cohomology-report",
        }
    }
}

struct Writer(String);

impl Writer {
    fn new(kind: &str) -> Self {
        Writer(format!("{HEADER}\nkind {kind}\n"))
    }

    fn key(&mut self, name: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.0, "{name} {value}");
    }

    fn section<R: AsRef<[usize]>>(&mut self, name: &str, rows: &[R]) {
        self.0.push_str(name);
        self.0.push('\n');
        for r in rows {
            let line: Vec<String> = r.as_ref().iter().map(usize::to_string).collect();
            self.0.push_str(&line.join(" "));
            self.0.push('\n');
        }
    }

    fn group(&mut self, prefix: &str, g: &FiniteGroup) {
        self.section(&format!("{prefix}mul"), &g.rows());
    }

    fn mla(&mut self, prefix: &str, m: &MultLieAlgebra) {
        self.group(prefix, m.group());
        self.section(&format!("{prefix}star"), &m.star_rows());
    }

    fn twist(&mut self, t: &Twist) {
        let name = match t {
            Twist::Gamma(_) => "gamma",
            Twist::Sigma(_) => "sigma",
        };
        self.section(name, &t.action().rows());
    }

    fn setting_sizes(&mut self, s: &Setting) {
        self.key("k-order", s.k_order());
        self.key("h-order", s.h_order());
    }
}

pub fn serialize_group(g: &FiniteGroup) -> String {
    let mut w = Writer::new("group");
    w.key("order", g.order());
    w.group("", g);
    w.0
}

pub fn serialize_mla(m: &MultLieAlgebra) -> String {
    let mut w = Writer::new("mla");
    w.key("order", m.order());
    w.mla("", m);
    w.0
}

pub fn serialize_map(g: &GroupMap) -> String {
    let mut w = Writer::new("map");
    w.key("domain", g.domain());
    w.key("codomain", g.codomain());
    w.section("map", &[g.table()]);
    w.0
}

pub fn serialize_pairfn(p: &PairFunction) -> String {
    let mut w = Writer::new("pairfn");
    w.key("k-order", p.k_order());
    w.key("h-order", p.h_order());
    w.section("values", &p.rows());
    w.0
}

pub fn serialize_factor_system(fs: &FactorSystem) -> String {
    let kind = match fs.mode() {
        Mode::Center => "fs-center",
        Mode::Lie => "fs-lie",
    };
    let mut w = Writer::new(kind);
    w.setting_sizes(&fs.setting);
    w.mla("k-", fs.k());
    w.group("h-", fs.h());
    w.section("f", &fs.mul_part().rows());
    w.section("h", &fs.star_part().rows());
    w.twist(fs.twist());
    w.0
}

pub fn serialize_general(g: &GeneralSystem) -> String {
    let mut w = Writer::new("fs-general");
    w.key("k-order", g.k.order());
    w.key("h-order", g.h.order());
    w.mla("k-", &g.k);
    w.group("h-", &g.h);
    w.section("f", &g.data.mul.rows());
    w.section("h", &g.data.star.rows());
    w.section("gamma", &g.data.gamma.rows());
    w.section("sigma", &g.data.sigma.rows());
    w.0
}

pub fn serialize_extension(e: &Extension) -> String {
    let mut w = Writer::new("extension");
    w.key("h-order", e.kernel().order());
    w.key("g-order", e.total().order());
    w.key("k-order", e.quotient().order());
    w.group("h-", e.kernel_group());
    w.mla("g-", e.total());
    w.mla("k-", e.quotient());
    w.section("iota", &[e.iota().table()]);
    w.section("beta", &[e.beta().table()]);
    w.0
}

pub fn serialize_cohomology_report(r: &CohomologyReport) -> String {
    let mut w = Writer::new("cohomology-report");
    w.key("mode", r.setting.mode().name());
    w.setting_sizes(&r.setting);
    w.key("|Z2|", r.z2_order);
    w.key("|B2|", r.b2_order);
    w.key("|H2|", r.h2_order);
    w.mla("k-", &r.setting.k);
    w.group("h-", &r.setting.h);
    w.twist(&r.setting.twist);
    w.section("classes", &r.class_table);
    let fs: Vec<Vec<usize>> = r.representatives.iter().flat_map(|c| c.mul.rows()).collect();
    let hs: Vec<Vec<usize>> = r.representatives.iter().flat_map(|c| c.star.rows()).collect();
    w.section("reps-f", &fs);
    w.section("reps-h", &hs);
    w.0
}

pub fn serialize(doc: &Document) -> String {
    match doc {
        Document::Group(g) => serialize_group(g),
        Document::Mla(m) => serialize_mla(m),
        Document::Map(g) => serialize_map(g),
        Document::PairFn(p) => serialize_pairfn(p),
        Document::FactorSystem(fs) => serialize_factor_system(fs),
        Document::GeneralSystem(g) => serialize_general(g),
        Document::Extension(e) => serialize_extension(e),
        Document::CohomologyReport(r) => serialize_cohomology_report(r),
    }
}

fn read_group(raw: &RawDocument, prefix: &str, n: usize) -> Result<FiniteGroup> {
    FiniteGroup::from_rows(&raw.table(&format!("{prefix}mul"), n, n)?)
}

fn read_mla(raw: &RawDocument, prefix: &str, n: usize) -> Result<MultLieAlgebra> {
    let g = read_group(raw, prefix, n)?;
    MultLieAlgebra::new(g, &raw.table(&format!("{prefix}star"), n, n)?)
}

fn read_row(raw: &RawDocument, name: &str, len: usize) -> Result<Vec<usize>> {
    Ok(raw.table(name, 1, len)?.remove(0))
}

fn read_twist(raw: &RawDocument, n: usize, m: usize) -> Result<Twist> {
    match (raw.has_section("gamma"), raw.has_section("sigma")) {
        (true, false) => Ok(Twist::Gamma(Action::new(m, &raw.table("gamma", n, m)?)?)),
        (false, true) => Ok(Twist::Sigma(Action::new(m, &raw.table("sigma", n, m)?)?)),
        _ => Err(ParseError {
            line: raw.last_line + 1,
            column: 1,
            message: "expected exactly one of the sections 'gamma' and 'sigma'".into(),
        }
        .into()),
    }
}

fn expect_twist(raw: &RawDocument, twist: &Twist, mode: Mode) -> Result<()> {
    if twist.mode() != mode {
        return Err(ParseError {
            line: 2,
            column: 6,
            message: format!("a {} document needs a {} twist section", raw.kind, mode.name()),
        }
        .into());
    }
    Ok(())
}

const FS_SECTIONS: &[&str] = &["k-mul", "k-star", "h-mul", "f", "h", "gamma", "sigma"];

pub fn parse_raw_document(raw: &RawDocument) -> Result<Document> {
    Ok(match raw.kind.as_str() {
        "group" => {
            raw.only_sections(&["mul"])?;
            Document::Group(read_group(raw, "", raw.number("order")?)?)
        }
        "mla" => {
            raw.only_sections(&["mul", "star"])?;
            Document::Mla(read_mla(raw, "", raw.number("order")?)?)
        }
        "map" => {
            raw.only_sections(&["map"])?;
            let (n, m) = (raw.number("domain")?, raw.number("codomain")?);
            Document::Map(GroupMap::new(m, read_row(raw, "map", n)?)?)
        }
        "pairfn" => {
            raw.only_sections(&["values"])?;
            let (n, m) = (raw.number("k-order")?, raw.number("h-order")?);
            Document::PairFn(PairFunction::new(m, &raw.table("values", n, n)?)?)
        }
        "fs-center" | "fs-lie" => {
            raw.only_sections(FS_SECTIONS)?;
            let (n, m) = (raw.number("k-order")?, raw.number("h-order")?);
            let k = read_mla(raw, "k-", n)?;
            let h = read_group(raw, "h-", m)?;
            let mul = PairFunction::new(m, &raw.table("f", n, n)?)?;
            let star = PairFunction::new(m, &raw.table("h", n, n)?)?;
            let twist = read_twist(raw, n, m)?;
            let mode = if raw.kind == "fs-center" { Mode::Center } else { Mode::Lie };
            expect_twist(raw, &twist, mode)?;
            let setting = Setting::new(k, h, twist)?;
            Document::FactorSystem(FactorSystem::new(setting, CocyclePair { mul, star })?)
        }
        "fs-general" => {
            raw.only_sections(FS_SECTIONS)?;
            let (n, m) = (raw.number("k-order")?, raw.number("h-order")?);
            let k = read_mla(raw, "k-", n)?;
            let h = read_group(raw, "h-", m)?;
            let data = GeneralData {
                mul: PairFunction::new(m, &raw.table("f", n, n)?)?,
                star: PairFunction::new(m, &raw.table("h", n, n)?)?,
                sigma: Action::new(m, &raw.table("sigma", n, m)?)?,
                gamma: Action::new(m, &raw.table("gamma", n, m)?)?,
            };
            Document::GeneralSystem(GeneralSystem { k, h, data })
        }
        "extension" => {
            raw.only_sections(&["h-mul", "g-mul", "g-star", "k-mul", "k-star", "iota", "beta"])?;
            let (m, size, n) = (raw.number("h-order")?, raw.number("g-order")?, raw.number("k-order")?);
            let kernel = MultLieAlgebra::trivial_star(read_group(raw, "h-", m)?);
            let total = read_mla(raw, "g-", size)?;
            let quotient = read_mla(raw, "k-", n)?;
            let iota = GroupMap::new(size, read_row(raw, "iota", m)?)?;
            let beta = GroupMap::new(n, read_row(raw, "beta", size)?)?;
            Document::Extension(Extension::new(kernel, total, quotient, iota, beta)?)
        }
        "cohomology-report" => {
            raw.only_sections(&[
                "k-mul", "k-star", "h-mul", "gamma", "sigma", "classes", "reps-f", "reps-h",
            ])?;
            let (n, m) = (raw.number("k-order")?, raw.number("h-order")?);
            let k = read_mla(raw, "k-", n)?;
            let h = read_group(raw, "h-", m)?;
            let twist = read_twist(raw, n, m)?;
            let mode = match raw.word("mode")? {
                "center" => Mode::Center,
                "lie" => Mode::Lie,
                other => {
                    return Err(ParseError {
                        line: raw.key("mode")?.line,
                        column: 6,
                        message: format!("unknown mode '{other}'"),
                    }
                    .into())
                }
            };
            expect_twist(raw, &twist, mode)?;
            let r = raw.number("|H2|")?;
            let class_table = raw.table("classes", r, r)?;
            let fs = raw.table("reps-f", r * n, n)?;
            let hs = raw.table("reps-h", r * n, n)?;
            let mut representatives = Vec::with_capacity(r);
            for i in 0..r {
                representatives.push(CocyclePair {
                    mul: PairFunction::new(m, &fs[i * n..(i + 1) * n])?,
                    star: PairFunction::new(m, &hs[i * n..(i + 1) * n])?,
                });
            }
            if class_table.iter().flatten().any(|&c| c >= r) {
                return Err(Error::Malformed("class table entry out of range".into()));
            }
            Document::CohomologyReport(CohomologyReport {
                setting: Setting::new(k, h, twist)?,
                z2_order: raw.number("|Z2|")?,
                b2_order: raw.number("|B2|")?,
                h2_order: r,
                class_table,
                representatives,
            })
        }
        other => {
            return Err(ParseError {
                line: 2,
                column: 6,
                message: format!("unknown kind '{other}'"),
            }
            .into())
        }
    })
}

pub fn parse(text: &str) -> Result<Document> {
    parse_raw_document(&parse_raw(text)?)
}

macro_rules! typed_parser {
    ($name:ident, $variant:ident, $ty:ty, $kind:literal) => {
        #[doc = concat!("Parses a `", $kind, "` document.")]
        pub fn $name(text: &str) -> Result<$ty> {
            match parse(text)? {
                Document::$variant(x) => Ok(x),
                other => Err(Error::Precondition(format!(
                    "expected a {} document, found {}",
                    $kind,
                    other.kind()
                ))),
            }
        }
    };
}

typed_parser!(parse_group, Group, FiniteGroup, "group");
typed_parser!(parse_mla, Mla, MultLieAlgebra, "mla");
typed_parser!(parse_map, Map, GroupMap, "map");
typed_parser!(parse_pairfn, PairFn, PairFunction, "pairfn");
typed_parser!(parse_factor_system, FactorSystem, FactorSystem, "factor system");
typed_parser!(parse_extension, Extension, Extension, "extension");
typed_parser!(parse_cohomology_report, CohomologyReport, CohomologyReport, "cohomology-report");

/// Reads a multiplicative Lie algebra from a `group` or `mla` document; a
/// bare group gets the trivial star.
pub fn parse_algebra(text: &str) -> Result<MultLieAlgebra> {
    match parse(text)? {
        Document::Group(g) => Ok(MultLieAlgebra::trivial_star(g)),
        Document::Mla(m) => Ok(m),
        other => Err(Error::Precondition(format!(
            "expected a group or mla document, found {}",
            other.kind()
        ))),
    }
}

#[cfg(test)]
mod tests;
