//! Command-line front end. Machine-readable tables go to stdout, diagnostics
//! to stderr.
//!
//! Exit codes: 0 success, 1 verification failure (or a runtime fault such as
//! an unwritable cache), 2 usage or validation error.

pub mod cache;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::decompose::{criterion_with, decompose, CriterionRecord, DecompositionReport};
use crate::error::{Error, Result};
use crate::exact::serial::{poly_to_json, ratfunc_to_json, rational_to_string};
use crate::exact::{legendre_coeffs, IntPolynomial};
use crate::moment::{build_summand, moment_from_coeffs};
use crate::numeric::{crosscheck, eval_combination};
use cache::Cache;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "zetalab",
    version,
    about = "Exact zeta-value decompositions of log-weighted Legendre integrals",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage or validation error."
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integer coefficients of the shifted Legendre polynomial P_n.
    Poly {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The moment M(s), and with --r the summand d^v/ds^v M(s)^r.
    Moment {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, default_value_t = 0)]
        v: u32,
    },
    /// Exact combination Σ q_j ζ(j) + q_0 for the integral.
    Decompose {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        fold: Fold,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// JSON-lines result cache
        #[arg(long, env = "ZETALAB_CACHE")]
        cache: Option<PathBuf>,
    },
    /// Certified decimal value of the integral.
    Value {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        fold: Fold,
        /// decimal places
        #[arg(long, default_value_t = 30)]
        prec: u32,
    },
    /// Rationality-criterion table for P_0 .. P_{n-max}.
    Scan {
        #[command(flatten)]
        fold: Fold,
        #[arg(long)]
        n_max: u64,
        /// significant digits
        #[arg(long, default_value_t = 30)]
        prec: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// JSON-lines result cache
        #[arg(long, env = "ZETALAB_CACHE")]
        cache: Option<PathBuf>,
        /// report progress on stderr every this many rows (0 = quiet)
        #[arg(long, default_value_t = 0)]
        progress: u64,
        /// accepted for symmetry with `verify`; scans draw no random numbers
        #[arg(long)]
        seedless: bool,
    },
    /// Cross-check exact, direct-sum and Monte Carlo values; exit 1 on disagreement.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[command(flatten)]
        fold: Fold,
        /// decimal places
        #[arg(long, default_value_t = 30)]
        prec: u32,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Which polynomial: `P_n`, or an explicit coefficient list.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    /// comma-separated integers, constant term first
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Option<Vec<BigInt>>,
}

#[derive(Args, Debug)]
pub struct Fold {
    /// number of integration variables
    #[arg(long)]
    r: u32,
    /// power of the logarithm
    #[arg(long)]
    v: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Json(_) | Error::InvariantViolation(_) => {
                Failure::Runtime(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn check_n(n: i64) -> std::result::Result<u64, Failure> {
    u64::try_from(n).map_err(|_| Failure::Usage("n must be ≥ 0".into()))
}

impl Source {
    /// `(label n, polynomial)`; the label is the degree for explicit coefficients.
    fn resolve(&self) -> std::result::Result<(u64, IntPolynomial), Failure> {
        match (&self.n, &self.coeffs) {
            (Some(n), _) => {
                let n = check_n(*n)?;
                Ok((n, legendre_coeffs(n)))
            }
            (None, Some(c)) => {
                let p = IntPolynomial::new(c.clone());
                let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
                Ok((deg as u64, p))
            }
            (None, None) => Err(Failure::Usage("one of --n or --coeffs is required".into())),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&config.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAIL,
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAIL
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn write_json(out: &mut dyn Write, v: &Value) -> std::result::Result<(), Failure> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).map_err(Error::from)?
    )?;
    Ok(())
}

fn open_cache(path: &Option<PathBuf>) -> Result<Option<Cache>> {
    path.as_deref().map(Cache::open).transpose()
}

fn execute(
    cmd: &Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    match cmd {
        Command::Poly { n, format } => {
            let p = legendre_coeffs(check_n(*n)?);
            match format {
                Format::Json => write_json(out, &poly_to_json(&p))?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    w.write_record(["degree", "coeff"])?;
                    for (i, c) in p.coeffs().iter().enumerate() {
                        w.write_record([i.to_string(), c.to_string()])?;
                    }
                    w.flush()?;
                }
            }
        }
        Command::Moment { source, r, v } => {
            let (n, p) = source.resolve()?;
            let mut js = json!({
                "n": n,
                "coeffs": poly_to_json(&p),
                "moment": ratfunc_to_json(&moment_from_coeffs(&p)?),
            });
            if let Some(r) = r {
                let spec = build_summand(&p, *r, *v)?;
                js["r"] = json!(r);
                js["v"] = json!(v);
                js["summand"] = ratfunc_to_json(&spec.summand);
                js["decay_degree"] = json!(spec.decay_degree);
            }
            write_json(out, &js)?;
        }
        Command::Decompose {
            source,
            fold,
            format,
            cache,
        } => {
            let (n, p) = source.resolve()?;
            let combo = match open_cache(cache)? {
                Some(c) => c.decompose(&p, fold.r, fold.v)?,
                None => decompose(&p, fold.r, fold.v)?,
            };
            let report = DecompositionReport::from_combination(n, p, fold.r, fold.v, combo);
            match format {
                Format::Json => write_json(out, &report.to_json())?,
                Format::Csv => write_report_csv(out, &report)?,
            }
        }
        Command::Value { source, fold, prec } => {
            let (n, p) = source.resolve()?;
            let combo = decompose(&p, fold.r, fold.v)?;
            let value = eval_combination(&combo, *prec)?;
            let mut js = json!({ "n": n, "r": fold.r, "v": fold.v, "precision": prec });
            js["zeta"] = combo.to_json()["zeta"].clone();
            js["constant"] = json!(rational_to_string(&combo.constant));
            js["value"] = value.to_json();
            write_json(out, &js)?;
        }
        Command::Scan {
            fold,
            n_max,
            prec,
            format,
            cache,
            progress,
            seedless: _,
        } => {
            let cache = open_cache(cache)?;
            let done = AtomicU64::new(0);
            let every = *progress;
            let rows = criterion_with(
                |n| {
                    let p = legendre_coeffs(n);
                    match &cache {
                        Some(c) => c.decompose(&p, fold.r, fold.v),
                        None => decompose(&p, fold.r, fold.v),
                    }
                },
                fold.r,
                fold.v,
                *n_max,
                *prec,
                |_| {
                    let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                    if every > 0 && (k.is_multiple_of(every) || k == n_max + 1) {
                        // live progress; the row hook runs on worker threads
                        eprintln!("scan: {k}/{} rows", n_max + 1);
                    }
                },
            )?;
            match format {
                Format::Csv => write_scan_csv(out, &rows, *prec as usize)?,
                Format::Json => {
                    let arr: Vec<Value> =
                        rows.iter().map(|r| scan_json(r, *prec as usize)).collect();
                    write_json(out, &Value::Array(arr))?;
                }
            }
        }
        Command::Verify {
            n,
            fold,
            prec,
            samples,
            seed,
        } => {
            let n = check_n(*n)?;
            let report = crosscheck(n, fold.r, fold.v, *prec, *samples, *seed)?;
            write_json(out, &report.to_json())?;
            if !report.passed() {
                let _ = writeln!(err, "verification failed");
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn write_report_csv(
    out: &mut dyn Write,
    rep: &DecompositionReport,
) -> std::result::Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["term", "coeff"])?;
    for (j, q) in &rep.combo.zeta_coeffs {
        w.write_record([format!("zeta({j})"), rational_to_string(q)])?;
    }
    w.write_record([
        "constant".to_string(),
        rational_to_string(&rep.combo.constant),
    ])?;
    w.write_record(["D".to_string(), rep.d.to_string()])?;
    w.flush()?;
    Ok(())
}

const SCAN_COLUMNS: [&str; 6] = [
    "n",
    "abs_c",
    "lcm_pow",
    "lcm_scaled",
    "exp_scaled",
    "ratio_to_prev",
];

fn scan_fields(r: &CriterionRecord, digits: usize) -> [String; 6] {
    [
        r.n.to_string(),
        r.abs_c.value.to_scientific(digits),
        r.lcm_pow.to_string(),
        r.lcm_scaled.to_scientific(digits),
        r.exp_scaled.to_scientific(digits),
        r.ratio_to_prev
            .as_ref()
            .map(|d| d.to_scientific(digits))
            .unwrap_or_default(),
    ]
}

fn write_scan_csv(
    out: &mut dyn Write,
    rows: &[CriterionRecord],
    digits: usize,
) -> std::result::Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SCAN_COLUMNS)?;
    for r in rows {
        w.write_record(scan_fields(r, digits))?;
    }
    w.flush()?;
    Ok(())
}

fn scan_json(r: &CriterionRecord, digits: usize) -> Value {
    let f = scan_fields(r, digits);
    json!({
        "n": r.n,
        "r": r.r,
        "v": r.v,
        "abs_c": f[1],
        "abs_c_error": r.abs_c.error_bound.to_scientific(3),
        "lcm_pow": f[2],
        "lcm_scaled": f[3],
        "exp_scaled": f[4],
        "ratio_to_prev": r.ratio_to_prev.as_ref().map(|_| f[5].clone()),
    })
}
