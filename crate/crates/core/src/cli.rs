//! The `tropent` command line. Every command prints JSON (or CSV) on stdout.
//!
//! Exit codes: 0 success, 1 bad input (or a failed self-test), 2 search
//! budget exhausted with a partial result printed.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::entropy::{entropy_bracket, witness_lower, write_csv, EntryStatus, Target, WitnessFamily};
use crate::error::Error;
use crate::linearization::{GridFunction, TropicalLinearSystem, ZeroDimPrevariety};
use crate::prevariety::{dim_prevariety_with, SearchOptions};
use crate::rational::{self, Rational};
use crate::sweep::{boundary_deficiency, maxplus_fit, sweep_curve, verify_outcome, zero_dim_radical_probe};
use crate::tropical::{radical_member_curve, radical_member_zero_dim, TropicalPolynomial};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tropent", version, about = "Exact dimensions and entropy bounds for tropical linear prevarieties")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Budget {
    /// Maximum number of search cells per dimension computation.
    #[arg(long, env = "TROPENT_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Wall-clock cap per dimension computation, in milliseconds.
    #[arg(long = "time-limit-ms", env = "TROPENT_TIME_LIMIT_MS", value_parser = clap::value_parser!(u64).range(1..))]
    time_limit_ms: Option<u64>,
    /// Search threads (default: all cores).
    #[arg(long, env = "TROPENT_WORKERS", value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
}

impl Budget {
    fn options(&self) -> SearchOptions {
        let base = SearchOptions::default();
        SearchOptions {
            max_cells: self.budget,
            time_limit: self.time_limit_ms.map(Duration::from_millis),
            workers: self.workers.map_or(base.workers, |w| w as usize),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension of the linearization of a polynomial, or of a system file.
    Dim {
        #[arg(long, conflicts_with = "system", requires = "side")]
        poly: Option<PathBuf>,
        #[arg(long = "N")]
        side: Option<usize>,
        /// Use the radical family of the (plane curve) polynomial instead.
        #[arg(long, requires = "poly")]
        radical: bool,
        #[arg(long, required_unless_present = "poly")]
        system: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Entropy bracket: dims for N = 1..N_max and witness lower bounds.
    Entropy {
        #[arg(long, required_unless_present = "gens")]
        poly: Option<PathBuf>,
        /// A JSON array of polynomials.
        #[arg(long, conflicts_with = "poly")]
        gens: Option<PathBuf>,
        #[arg(long, requires = "poly")]
        radical: bool,
        #[arg(long = "N-max", value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Witness family to verify (repeatable).
        #[arg(long = "witness", value_parser = parse_family)]
        witnesses: Vec<WitnessFamily>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Line sweep of a grid point against a plane curve polynomial.
    Sweep {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        point: PathBuf,
        #[arg(long = "N")]
        side: Option<usize>,
    },
    /// Radical membership for a plane curve or a finite point set.
    Radical {
        #[arg(long)]
        g: PathBuf,
        #[arg(long, required_unless_present = "points")]
        f: Option<PathBuf>,
        /// JSON array of points (rational coordinates).
        #[arg(long, conflicts_with = "f")]
        points: Option<PathBuf>,
    },
    /// Max-plus boundary fit of a grid point against linear forms.
    Fit {
        #[arg(long)]
        forms: PathBuf,
        #[arg(long)]
        point: PathBuf,
        #[arg(long = "N")]
        side: Option<usize>,
        /// Deficiency threshold for the membership test.
        #[arg(long)]
        threshold: Option<String>,
        /// Also search for a violated radical element.
        #[arg(long)]
        probe: bool,
    },
    /// Verify a witness family against a polynomial or its radical family.
    WitnessVerify {
        #[arg(long, value_parser = parse_family)]
        family: WitnessFamily,
        #[arg(long = "N", value_parser = clap::value_parser!(u64).range(1..))]
        side: u64,
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        radical: bool,
    },
    /// Built-in consistency checks on small instances.
    Selftest,
}

fn parse_family(s: &str) -> Result<WitnessFamily, String> {
    WitnessFamily::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = WitnessFamily::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family {s:?}; expected one of {}", names.join(", "))
    })
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self { code: EXIT_INPUT, message: e.to_string() }
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_point(path: &Path, side: Option<usize>) -> Result<GridFunction, Failure> {
    let w: GridFunction = load(path)?;
    if w.values.len() != w.window.size() {
        return Err(input(format!("{}: expected {} values, got {}", path.display(), w.window.size(), w.values.len())));
    }
    if let Some(n) = side {
        if n != w.window.side {
            return Err(input(format!("--N {n} does not match the point's N = {}", w.window.side)));
        }
    }
    Ok(w)
}

fn emit_json(out: &mut dyn Write, v: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).map_err(|e| input(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| input(e.to_string()))
}

fn decimal(r: &Rational) -> Value {
    json!(rational::to_f64(r))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Dim { poly, side, radical, system, budget } => {
            let system: TropicalLinearSystem = match (poly, system) {
                (Some(p), _) => {
                    let f: TropicalPolynomial = load(&p)?;
                    let side = side.filter(|&n| n >= 1).ok_or_else(|| input("--N must be at least 1"))?;
                    let target = if radical { Target::CurveRadical(f) } else { Target::Polynomial(f) };
                    target.system(side)?
                }
                (None, Some(s)) => load(&s)?,
                (None, None) => return Err(input("either --poly or --system is required")),
            };
            let r = dim_prevariety_with(&system, &budget.options());
            emit_json(out, &r)?;
            Ok(if r.complete { EXIT_OK } else { EXIT_BUDGET })
        }
        Command::Entropy { poly, gens, radical, n_max, format, witnesses, budget } => {
            let target = match (poly, gens) {
                (Some(p), _) => {
                    let f: TropicalPolynomial = load(&p)?;
                    if radical {
                        Target::CurveRadical(f)
                    } else {
                        Target::Polynomial(f)
                    }
                }
                (None, Some(g)) => {
                    let gens: Vec<TropicalPolynomial> = load(&g)?;
                    let n = gens.first().ok_or_else(|| input("generator list is empty"))?.n();
                    if gens.iter().any(|f| f.n() != n) {
                        return Err(input("generators have different numbers of variables"));
                    }
                    Target::Generators(gens)
                }
                (None, None) => return Err(input("either --poly or --gens is required")),
            };
            if !witnesses.is_empty() && target.n() != 2 {
                return Err(input("witness families need a bivariate target"));
            }
            let b = entropy_bracket(&target, n_max as usize, &witnesses, &budget.options())?;
            match format {
                Format::Csv => write_csv(&b.upper_sequence, &mut *out)?,
                Format::Json => {
                    let mut v = serde_json::to_value(&b).map_err(|e| input(e.to_string()))?;
                    v["lower_decimal"] = decimal(&b.lower);
                    v["upper_decimal"] = decimal(&b.upper);
                    if let Some(rows) = v["upper_sequence"].as_array_mut() {
                        for (row, e) in rows.iter_mut().zip(&b.upper_sequence) {
                            row["ratio_decimal"] = decimal(&e.ratio);
                        }
                    }
                    emit_json(out, &v)?;
                }
            }
            let partial = b.upper_sequence.iter().any(|e| e.status == EntryStatus::Partial);
            Ok(if partial { EXIT_BUDGET } else { EXIT_OK })
        }
        Command::Sweep { poly, point, side } => {
            let f: TropicalPolynomial = load(&poly)?;
            let w = load_point(&point, side)?;
            let run = sweep_curve(&f, &w)?;
            let verified = verify_outcome(&f, &w, &run.outcome)?;
            emit_json(out, &json!({ "outcome": run.outcome, "state": run.state, "verified": verified }))?;
            Ok(EXIT_OK)
        }
        Command::Radical { g, f, points } => {
            let g: TropicalPolynomial = load(&g)?;
            match (f, points) {
                (Some(f), _) => {
                    let f: TropicalPolynomial = load(&f)?;
                    emit_json(out, &radical_member_curve(&g, &f)?)?;
                }
                (None, Some(p)) => {
                    let pts: Vec<Vec<String>> = load(&p)?;
                    let pts = pts
                        .iter()
                        .map(|p| p.iter().map(|s| rational::parse(s)).collect::<crate::error::Result<Vec<_>>>())
                        .collect::<crate::error::Result<Vec<_>>>()?;
                    emit_json(out, &json!({ "member": radical_member_zero_dim(&g, &pts)? }))?;
                }
                (None, None) => return Err(input("either --f or --points is required")),
            }
            Ok(EXIT_OK)
        }
        Command::Fit { forms, point, side, threshold, probe } => {
            let v: ZeroDimPrevariety = load(&forms)?;
            let v = ZeroDimPrevariety::from_forms(v.forms)?;
            let w = load_point(&point, side)?;
            let threshold = threshold.map(|t| rational::parse(&t)).transpose()?;
            let mut report = json!({ "fit": maxplus_fit(&v, &w)? });
            if let Some(t) = threshold {
                report["deficiency"] = serde_json::to_value(boundary_deficiency(&v, &w, &t)?).unwrap();
            }
            if probe {
                report["probe"] = serde_json::to_value(zero_dim_radical_probe(&v, &w)?).unwrap();
            }
            emit_json(out, &report)?;
            Ok(EXIT_OK)
        }
        Command::WitnessVerify { family, side, poly, radical } => {
            let f: TropicalPolynomial = load(&poly)?;
            let target = if radical { Target::CurveRadical(f) } else { Target::Polynomial(f) };
            let check = witness_lower(&target, family, side as usize)?;
            let mut v = serde_json::to_value(&check).map_err(|e| input(e.to_string()))?;
            v["verified"] = json!(check.bound.is_some() && check.affine_dim == check.claimed_dim);
            emit_json(out, &v)?;
            Ok(EXIT_OK)
        }
        Command::Selftest => {
            let results = crate::selftest::run_all();
            let mut failed = 0;
            for (name, ok) in &results {
                writeln!(out, "{} {name}", if *ok { "PASS" } else { "FAIL" }).map_err(|e| input(e.to_string()))?;
                failed += usize::from(!ok);
            }
            Ok(if failed == 0 { EXIT_OK } else { EXIT_INPUT })
        }
    }
}
