//! Command-line front end.
//!
//! Exit codes: 0 success (verdicts of any kind included), 1 usage error,
//! 2 invalid input file, 3 internal invariant failure. Failures print one
//! line `error: kind=<kind> reason=<text>` on the error stream.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::catalog;
use crate::census::{census_with_profiles, census_with_workers, CensusReport};
use crate::error::Error;
use crate::format::{parse_matroid, serialize_matroid, FormatError};
use crate::matroid::Matroid;
use crate::screen::{bound, screen, ScreenVerdict};
use crate::search::{scan, write_jsonl, GenerationMode, SearchHeader};
use crate::verify::{self, Suite};

pub const CENSUS_SCHEMA: &str = "pav-census-v1";
pub const SCREEN_SCHEMA: &str = "pav-screen-v1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pavmat",
    version,
    about = "Hyperplane census and orientability screen for paving matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate and classify all hyperplanes.
    Census {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Include the simple/multiple profile of every (r-2)-subset.
        #[arg(long)]
        profiles: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Apply the independent-hyperplane bound as a non-orientability test.
    Screen {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print f(n, r) exactly.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Browse and export the reference matroids.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Generate sparse paving matroids and record their counts as JSONL.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "random")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        budget: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Run a property suite over the catalog.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show {
        name: String,
    },
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct Versioned<'a, T: Serialize> {
    schema: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

struct Failure {
    code: i32,
    kind: &'static str,
    reason: String,
}

impl Failure {
    fn usage(reason: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            kind: "usage",
            reason: reason.into(),
        }
    }

    fn input(kind: &'static str, reason: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            kind,
            reason: reason.into(),
        }
    }

    fn internal(reason: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            kind: "internal",
            reason: reason.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::internal(format!("io: {e}"))
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn load(path: &Path) -> Result<Matroid, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input("io", format!("{}: {e}", path.display())))?;
    parse_matroid(&text).map_err(|e| match e {
        FormatError::Syntax { line, message } => {
            Failure::input("syntax", format!("{}:{line}: {message}", path.display()))
        }
        FormatError::Semantic(err) => {
            Failure::input("semantic", format!("{}: {err}", path.display()))
        }
    })
}

fn write_json<W: Write, T: Serialize>(out: &mut W, schema: &str, body: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(&Versioned { schema, body })
        .map_err(|e| Failure::internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn print_census<W: Write>(out: &mut W, report: &CensusReport) -> io::Result<()> {
    writeln!(
        out,
        "matroid {} n={} r={}",
        report.matroid_name, report.n, report.r
    )?;
    writeln!(
        out,
        "hyperplanes {} independent {} simple {} multiple {}",
        report.hyperplanes.len(),
        report.counts.independent,
        report.counts.simple,
        report.counts.multiple
    )?;
    for h in &report.hyperplanes {
        writeln!(
            out,
            "  {} size={} {}",
            h.elements,
            h.size,
            h.classification.as_str()
        )?;
    }
    if let Some(profiles) = &report.per_subset_profiles {
        writeln!(out, "profiles (subset: simple multiple)")?;
        for p in profiles {
            writeln!(out, "  {}: {} {}", p.subset, p.simple, p.multiple)?;
        }
    }
    Ok(())
}

fn print_screen<W: Write>(out: &mut W, v: &ScreenVerdict) -> io::Result<()> {
    writeln!(out, "matroid {} n={} r={}", v.matroid_name, v.n, v.r)?;
    match v.reason_if_not {
        None => writeln!(out, "applicable yes")?,
        Some(reason) => writeln!(out, "applicable no ({})", reason.as_str())?,
    }
    match &v.bound {
        Some(b) => writeln!(out, "bound {} (~{})", b, b.approx(5))?,
        None => writeln!(out, "bound undefined")?,
    }
    writeln!(out, "independent {}", v.independent_count)?;
    writeln!(out, "verdict {}", v.verdict.as_str())
}

fn check_report(report: &CensusReport) -> Result<(), Failure> {
    let c = report.counts;
    if c.total() != report.hyperplanes.len() || c.independent > c.simple {
        return Err(Failure::internal(format!(
            "inconsistent census counts {c:?}"
        )));
    }
    Ok(())
}

fn catalog_entry(name: &str) -> Result<catalog::CatalogEntry, Failure> {
    catalog::get(name).map_err(|e| Failure::usage(e.to_string()))
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<(), Failure> {
    match cli.command {
        Command::Census {
            file,
            json,
            profiles,
            workers,
        } => {
            let m = load(&file)?;
            let report = if profiles {
                census_with_profiles(&m)
            } else {
                census_with_workers(&m, workers)
            }
            .map_err(|e| Failure::input("semantic", e.to_string()))?;
            check_report(&report)?;
            if json {
                write_json(out, CENSUS_SCHEMA, &report)?;
            } else {
                print_census(out, &report)?;
            }
        }
        Command::Screen { file, json } => {
            let m = load(&file)?;
            let verdict = screen(&m);
            if json {
                write_json(out, SCREEN_SCHEMA, &verdict)?;
            } else {
                print_screen(out, &verdict)?;
            }
        }
        Command::Bound { n, r } => {
            let b = bound(n, r).map_err(|e| Failure::usage(e.to_string()))?;
            writeln!(out, "{} (~{})", b, b.approx(5))?;
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in catalog::NAMES {
                    let entry = catalog_entry(name)?;
                    writeln!(
                        out,
                        "{:<12} n={:<2} r={} {}",
                        name,
                        entry.matroid.n(),
                        entry.matroid.r(),
                        entry.provenance
                    )?;
                }
            }
            CatalogAction::Show { name } => {
                let entry = catalog_entry(&name)?;
                let m = &entry.matroid;
                writeln!(out, "name {}", entry.name)?;
                writeln!(out, "provenance {}", entry.provenance)?;
                writeln!(
                    out,
                    "n={} r={} paving={} sparse_paving={} simple={}",
                    m.n(),
                    m.r(),
                    m.is_paving(),
                    m.is_sparse_paving(),
                    m.is_simple()
                )?;
                if let Some(c) = entry.expected_census {
                    writeln!(
                        out,
                        "expected independent={} simple={} multiple={}",
                        c.independent, c.simple, c.multiple
                    )?;
                }
                out.write_all(serialize_matroid(m).as_bytes())?;
            }
            CatalogAction::Export { name, out: path } => {
                let entry = catalog_entry(&name)?;
                let text = serialize_matroid(&entry.matroid);
                match path {
                    Some(p) => fs::write(&p, text)?,
                    None => out.write_all(text.as_bytes())?,
                }
            }
        },
        Command::Search {
            n,
            rank,
            mode,
            seed,
            budget,
            out: path,
            workers,
        } => {
            let mode: GenerationMode = mode
                .parse()
                .map_err(|e: Error| Failure::usage(e.to_string()))?;
            let records = scan(n, rank, mode, seed, budget, workers)
                .map_err(|e| Failure::usage(e.to_string()))?;
            let header = SearchHeader::new(n, rank, mode, seed, budget);
            let file = fs::File::create(&path)?;
            write_jsonl(io::BufWriter::new(file), &header, &records)?;
            let min = records.iter().map(|r| r.independent_count).min();
            let flagged = records.iter().filter(|r| r.not_orientable).count();
            writeln!(
                out,
                "records={} min_independent={} not_orientable={} out={}",
                records.len(),
                min.map_or("-".to_string(), |m| m.to_string()),
                flagged,
                path.display()
            )?;
        }
        Command::Verify { suite } => {
            let suite: Suite = suite
                .parse()
                .map_err(|e: Error| Failure::usage(e.to_string()))?;
            let report = verify::run(suite);
            writeln!(out, "suite={} {}", suite.as_str(), report)?;
            for f in &report.failures {
                writeln!(out, "  FAIL {f}")?;
            }
            if !report.ok() {
                return Err(Failure::internal(format!(
                    "suite {} had {} failures",
                    suite.as_str(),
                    report.failed()
                )));
            }
        }
    }
    Ok(())
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let first = e.to_string();
            let first = first
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            let _ = writeln!(err, "error: kind=usage reason={}", one_line(first));
            return EXIT_USAGE;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: kind={} reason={}", f.kind, one_line(&f.reason));
            f.code
        }
    }
}
