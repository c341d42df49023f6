//! `mla`: command-line front end for mla-core.
//!
//! Documents go to stdout (or `--out`), human-readable summaries to stderr.
//! Exit codes: 0 success, 1 mathematically invalid input, 2 usage or format
//! error, 3 search budget exceeded.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use mla_core::acceptance;
use mla_core::catalog::{Catalog, CatalogEntry};
use mla_core::cohomology::{
    classify_extensions, cocycles_equivalent, enumerate_twists, CohomologyGroup, SearchOptions,
    DEFAULT_BUDGET,
};
use mla_core::extensions::{
    baer_sum, equivalent_extensions, extract_center_data, extract_general_data,
    extract_lie_center_data, Extension, Section,
};
use mla_core::factor_systems::{realize, validate, FactorSystem, Mode, Setting, Twist};
use mla_core::io::{self, Document, GeneralSystem};
use mla_core::samples::{desk_scale_kernels, desk_scale_quotients};
use mla_core::{Error, MultLieAlgebra};

#[derive(Parser)]
#[command(name = "mla", version, about = "Finite multiplicative Lie algebras and their extensions")]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest candidate estimate a search may start.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Write the result document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Center,
    Lie,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum AtlasMode {
    Center,
    Lie,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Check any document: groups, algebras, factor systems, extensions.
    Verify { file: PathBuf },
    /// Factor system of an extension with respect to a section.
    Extract {
        #[arg(long)]
        ext: PathBuf,
        /// A `map` document K → G; defaults to the least-index section.
        #[arg(long)]
        section: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Extension realizing a factor system.
    Realize { file: PathBuf },
    /// Cohomology report for K, H and a twist.
    Cohomology {
        #[command(flatten)]
        setting: SettingArgs,
    },
    /// Cohomology report plus one realized extension per class.
    Classify {
        #[command(flatten)]
        setting: SettingArgs,
        /// Directory for `class-N.ext` and `class-N-section.doc`.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Baer sum of two center extensions (extension or fs-center documents).
    Baer {
        first: PathBuf,
        second: PathBuf,
        /// Print the factor system of the sum instead of the extension.
        #[arg(long)]
        factor_system: bool,
    },
    /// Equivalence of two extensions or two factor systems; prints the witness map.
    Equiv { first: PathBuf, second: PathBuf },
    /// Cohomology of every desk-scale configuration, stored in the catalog.
    Atlas {
        #[arg(long, value_enum, default_value = "both")]
        mode: AtlasMode,
        /// Catalog directory (default: $MLA_CATALOG_DIR or ./catalog).
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Recompute entries already present.
        #[arg(long)]
        force: bool,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(clap::Args)]
struct SettingArgs {
    /// The quotient: a `group` or `mla` document.
    #[arg(long)]
    k: PathBuf,
    /// The kernel group: a `group` or `mla` document.
    #[arg(long)]
    h: PathBuf,
    /// `trivial`, an index into the enumerated twists, or a factor-system document.
    #[arg(long, default_value = "trivial")]
    twist: String,
    #[arg(long, value_enum)]
    mode: ModeArg,
}

/// Why a command stopped early.
enum Failure {
    /// Mathematically invalid input; the message carries the violations.
    Invalid(String),
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            Error::Parse(_) | Error::Malformed(_) | Error::Io { .. } => Failure::Usage(e.to_string()),
            Error::Invalid { .. } | Error::Precondition(_) | Error::Structural(_) => {
                Failure::Invalid(e.to_string())
            }
        }
    }
}

type Outcome = Result<Option<String>, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} workers: {e}");
            return ExitCode::from(2);
        }
    }
    let opts = SearchOptions {
        budget: cli.budget,
        ..SearchOptions::default()
    };
    let result = run(cli.command, opts).and_then(|doc| match (doc, &cli.out) {
        (Some(text), Some(path)) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        (Some(text), None) => {
            print!("{text}");
            Ok(())
        }
        (None, _) => Ok(()),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command, opts: SearchOptions) -> Outcome {
    match command {
        Command::Verify { file } => verify(&file),
        Command::Extract { ext, section, mode } => extract(&ext, section.as_deref(), mode),
        Command::Realize { file } => {
            let fs = read_factor_system(&file)?;
            let (ext, _) = realize(&fs)?;
            eprintln!("realized a {} extension of order {}", ext.kind().name(), ext.total().order());
            Ok(Some(io::serialize_extension(&ext)))
        }
        Command::Cohomology { setting } => {
            let group = CohomologyGroup::compute(&setting.load()?, opts)?;
            eprintln!(
                "|Z2| = {}, |B2| = {}, |H2| = {}",
                group.z2_order(),
                group.b2_order(),
                group.h2_order()
            );
            Ok(Some(io::serialize_cohomology_report(&group.report())))
        }
        Command::Classify { setting, out_dir } => classify(&setting.load()?, out_dir.as_deref(), opts),
        Command::Baer {
            first,
            second,
            factor_system,
        } => {
            let (e1, t1) = read_extension_with_section(&first)?;
            let (e2, t2) = read_extension_with_section(&second)?;
            let (sum, t) = baer_sum(&e1, &t1, &e2, &t2)?;
            eprintln!("Baer sum has order {}", sum.total().order());
            Ok(Some(if factor_system {
                io::serialize_factor_system(&extract_center_data(&sum, &t)?)
            } else {
                io::serialize_extension(&sum)
            }))
        }
        Command::Equiv { first, second } => equiv(&first, &second),
        Command::Atlas { mode, catalog, force } => atlas(mode, catalog, force, opts),
        Command::Selftest { only } => selftest(&only),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_doc(path: &Path) -> Result<Document, Failure> {
    io::parse(&read(path)?).map_err(|e| with_path(path, e))
}

/// Prefixes syntax errors with the file they came from.
fn with_path(path: &Path, e: Error) -> Failure {
    match Failure::from(e) {
        Failure::Usage(msg) => Failure::Usage(format!("{}: {msg}", path.display())),
        other => other,
    }
}

fn wrong_kind(path: &Path, want: &str, doc: &Document) -> Failure {
    Failure::Usage(format!(
        "{}: expected {want}, found a {} document",
        path.display(),
        doc.kind()
    ))
}

fn read_factor_system(path: &Path) -> Result<FactorSystem, Failure> {
    match read_doc(path)? {
        Document::FactorSystem(fs) => Ok(fs),
        other => Err(wrong_kind(path, "fs-center or fs-lie", &other)),
    }
}

fn read_algebra(path: &Path) -> Result<MultLieAlgebra, Failure> {
    io::parse_algebra(&read(path)?).map_err(|e| with_path(path, e))
}

/// An extension with its least-index section, or the realization of a factor system.
fn read_extension_with_section(path: &Path) -> Result<(Extension, Section), Failure> {
    match read_doc(path)? {
        Document::Extension(e) => {
            let t = e.canonical_section();
            Ok((e, t))
        }
        Document::FactorSystem(fs) => Ok(realize(&fs)?),
        other => Err(wrong_kind(path, "an extension or factor system", &other)),
    }
}

fn verify(path: &Path) -> Outcome {
    // Structural failures surface from parsing as invalid-input errors.
    let verdict = match read_doc(path)? {
        Document::Group(_) => "valid group".to_string(),
        Document::Mla(_) => "valid multiplicative Lie algebra".to_string(),
        Document::Map(_) => "well-formed map".to_string(),
        Document::PairFn(_) => "well-formed pair function".to_string(),
        Document::FactorSystem(fs) => {
            let report = validate(&fs.setting, &fs.pair)?;
            if !report.is_valid() {
                return Err(Failure::Invalid(format!(
                    "invalid {} factor system:\n{report}",
                    fs.mode().name()
                )));
            }
            format!("valid {} factor system", fs.mode().name())
        }
        Document::GeneralSystem(_) => "well-formed general factor data".to_string(),
        Document::Extension(e) => format!("valid {} extension", e.kind().name()),
        Document::CohomologyReport(_) => "well-formed cohomology report".to_string(),
    };
    Ok(Some(format!("{verdict}\n")))
}

fn extract(ext_path: &Path, section: Option<&Path>, mode: ModeArg) -> Outcome {
    let ext = match read_doc(ext_path)? {
        Document::Extension(e) => e,
        other => return Err(wrong_kind(ext_path, "an extension", &other)),
    };
    let t = match section {
        Some(p) => match read_doc(p)? {
            Document::Map(m) => Section::new(&ext, m)?,
            other => return Err(wrong_kind(p, "a map", &other)),
        },
        None => ext.canonical_section(),
    };
    Ok(Some(match mode {
        ModeArg::Center => io::serialize_factor_system(&extract_center_data(&ext, &t)?),
        ModeArg::Lie => io::serialize_factor_system(&extract_lie_center_data(&ext, &t)?),
        ModeArg::General => io::serialize_general(&GeneralSystem {
            k: ext.quotient().clone(),
            h: ext.kernel_group().clone(),
            data: extract_general_data(&ext, &t)?,
        }),
    }))
}

impl SettingArgs {
    fn load(&self) -> Result<Setting, Failure> {
        let mode = match self.mode {
            ModeArg::Center => Mode::Center,
            ModeArg::Lie => Mode::Lie,
            ModeArg::General => {
                return Err(Failure::Usage("cohomology needs --mode center or --mode lie".into()))
            }
        };
        let k = read_algebra(&self.k)?;
        let h_alg = read_algebra(&self.h)?;
        if !h_alg.has_trivial_star() {
            return Err(Failure::Usage(format!(
                "{}: the kernel must have the trivial star",
                self.h.display()
            )));
        }
        let h = h_alg.group().clone();
        let twist = match self.twist.as_str() {
            "trivial" => Twist::trivial(mode, k.order(), h.order()),
            s if s.parse::<usize>().is_ok() => {
                let i: usize = s.parse().expect("checked");
                let mut all = enumerate_twists(&k, &h, mode)?;
                if i >= all.len() {
                    return Err(Failure::Usage(format!(
                        "twist index {i} out of range: there are {} twists",
                        all.len()
                    )));
                }
                all.swap_remove(i)
            }
            s => {
                let path = Path::new(s);
                let fs = read_factor_system(path)?;
                if fs.mode() != mode || fs.k() != &k || fs.h() != &h {
                    return Err(Failure::Usage(format!(
                        "{s}: factor system does not match --k, --h and --mode"
                    )));
                }
                fs.twist().clone()
            }
        };
        Ok(Setting::new(k, h, twist)?)
    }
}

fn classify(setting: &Setting, out_dir: Option<&Path>, opts: SearchOptions) -> Outcome {
    let group = CohomologyGroup::compute(setting, opts)?;
    let classes = classify_extensions(&group)?;
    for entry in &classes.entries {
        eprintln!(
            "class {}: {} extension of order {}{}",
            entry.class,
            entry.extension.kind().name(),
            entry.extension.total().order(),
            if entry.representative.is_trivial() { " (split)" } else { "" }
        );
    }
    if !classes.is_bijective() {
        return Err(Failure::Invalid(
            "classes and equivalence classes of extensions do not correspond".into(),
        ));
    }
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
        for entry in &classes.entries {
            let write = |name: String, text: String| {
                let p = dir.join(name);
                fs::write(&p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
            };
            write(format!("class-{}.ext", entry.class), io::serialize_extension(&entry.extension))?;
            write(
                format!("class-{}-section.doc", entry.class),
                io::serialize_map(entry.section.map()),
            )?;
        }
    }
    Ok(Some(io::serialize_cohomology_report(&group.report())))
}

fn equiv(first: &Path, second: &Path) -> Outcome {
    let witness = match (read_doc(first)?, read_doc(second)?) {
        (Document::Extension(a), Document::Extension(b)) => equivalent_extensions(&a, &b)?,
        (Document::FactorSystem(a), Document::FactorSystem(b)) => cocycles_equivalent(&a, &b)?,
        (a, _) => {
            return Err(Failure::Usage(format!(
                "equiv takes two extensions or two factor systems, found a {} document first",
                a.kind()
            )))
        }
    };
    match witness {
        Some(g) => {
            eprintln!("equivalent");
            Ok(Some(io::serialize_map(&g)))
        }
        None => Err(Failure::Invalid("not equivalent".into())),
    }
}

fn atlas(mode: AtlasMode, dir: Option<PathBuf>, force: bool, opts: SearchOptions) -> Outcome {
    let catalog = dir.map(Catalog::open).unwrap_or_else(Catalog::from_env);
    let modes: &[Mode] = match mode {
        AtlasMode::Center => &[Mode::Center],
        AtlasMode::Lie => &[Mode::Lie],
        AtlasMode::Both => &[Mode::Center, Mode::Lie],
    };
    let mut jobs = Vec::new();
    for &mode in modes {
        for (kname, k) in desk_scale_quotients() {
            for (hname, h) in desk_scale_kernels() {
                for (i, twist) in enumerate_twists(&k, &h, mode)?.into_iter().enumerate() {
                    let params: BTreeMap<String, String> = [
                        ("k", kname.clone()),
                        ("h", hname.clone()),
                        ("mode", mode.name().to_string()),
                        ("twist", i.to_string()),
                    ]
                    .into_iter()
                    .map(|(a, b)| (a.to_string(), b))
                    .collect();
                    jobs.push((params, Setting::new(k.clone(), h.clone(), twist)?));
                }
            }
        }
    }
    let lines: Vec<Result<String, Failure>> = jobs
        .par_iter()
        .map(|(params, setting)| {
            let entry = match catalog.get(params)? {
                Some(e) if !force => e,
                _ => {
                    let report = CohomologyGroup::compute(setting, opts)?.report();
                    let e = CatalogEntry::new(params.clone(), io::serialize_cohomology_report(&report));
                    catalog.put(&e)?;
                    e
                }
            };
            let report = io::parse_cohomology_report(&entry.document)?;
            Ok(format!(
                "{} k={} h={} mode={} twist={} |H2|={}\n",
                entry.params_hash,
                params["k"],
                params["h"],
                params["mode"],
                params["twist"],
                report.h2_order
            ))
        })
        .collect();
    let mut out = String::new();
    for line in lines {
        out.push_str(&line?);
    }
    eprintln!("{} entries in {}", jobs.len(), catalog.dir().display());
    Ok(Some(out))
}

fn selftest(only: &[usize]) -> Outcome {
    let outcomes: Vec<_> = if only.is_empty() {
        acceptance::run_all()
    } else {
        if let Some(bad) = only.iter().find(|&&n| n == 0 || n > acceptance::TITLES.len()) {
            return Err(Failure::Usage(format!("no criterion {bad}")));
        }
        only.iter().map(|&n| acceptance::run(n)).collect()
    };
    let mut out = String::new();
    for o in &outcomes {
        out.push_str(&format!("{o}\n"));
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.number).collect();
    if failed.is_empty() {
        Ok(Some(out))
    } else {
        print!("{out}");
        Err(Failure::Invalid(format!("failing criteria: {failed:?}")))
    }
}
