//! `adiageo`: evaluate metrics, connections and curvatures over parameter grids,
//! run verification suites, and dump the quartic perturbation series.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 domain error, 3 usage error.

mod eval;
mod grid;

use std::io::Write;
use std::process::ExitCode;

use adiageo::quantum::{quartic_ground_state, QuantumLevel, QuarticPoint};
use adiageo::series::dump::{dump, to_json, DumpTarget};
use adiageo::series::quartic_pipeline;
use adiageo::verify::{parse_suites, Check};
use adiageo::Error;
use clap::{Parser, Subcommand};
use rayon::prelude::*;

use eval::{Format, Model, Quantity, Settings, Side};
use grid::{GridSpec, UsageError};

const OK: u8 = 0;
const VERIFY_FAILED: u8 = 1;
const DOMAIN: u8 = 2;
const USAGE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "adiageo", version, about = "Parameter-space geometry of adiabatic oscillators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a quantity over a parameter grid.
    Eval(EvalArgs),
    /// Run verification suites.
    Verify {
        /// gauge, generators, gamma-beta, rank-det, quartic-series,
        /// quartic-quantum, adiabatic, oracle-metric or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print a perturbation-series dump as JSON.
    Series {
        /// W, G or metric.
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "json", value_parser = ["json"])]
        format: String,
    },
}

#[derive(Debug, clap::Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    model: Model,
    #[arg(long, value_enum)]
    quantity: Quantity,
    /// Fixed values, `name=value[,name=value...]`; repeatable.
    #[arg(long = "set")]
    set: Vec<String>,
    /// Swept axis, `name=min:max:count`; repeatable, first is slowest.
    #[arg(long = "sweep")]
    sweep: Vec<String>,
    /// Action variable for the classical side.
    #[arg(long, default_value_t = 1.0)]
    action: f64,
    #[arg(long, value_enum, default_value = "classical")]
    side: Side,
    /// Energy level for the quantum side.
    #[arg(long, default_value_t = 0)]
    level: u32,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Parameters kept for det and rank, e.g. `X,Y`.
    #[arg(long, value_delimiter = ',')]
    keep: Vec<String>,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("ADIAGEO_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => b = b.num_threads(n),
            _ => return Err(Failure::Usage(format!("ADIAGEO_THREADS must be a positive integer, got `{v}`"))),
        }
    }
    b.build().map_err(|e| Failure::Usage(format!("cannot start worker pool: {e}")))
}

fn describe(names: &[&str], x: &[f64]) -> String {
    names.iter().zip(x).map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(", ")
}

fn settings(a: &EvalArgs) -> Result<Settings, Failure> {
    let names = a.model.names();
    if a.model == Model::Quartic && a.side == Side::Quantum && a.level != 0 {
        return Err(Failure::Usage("the quartic quantum side only offers level 0".into()));
    }
    let level = QuantumLevel::new(a.level, a.hbar).map_err(|e| Failure::Domain(e.to_string()))?;
    if a.side == Side::Classical && !(a.action.is_finite() && a.action > 0.0) {
        return Err(Failure::Domain(format!("action {} must be positive", a.action)));
    }
    let keep = a
        .keep
        .iter()
        .map(|k| names.iter().position(|n| n == k).ok_or_else(|| Failure::Usage(format!("unknown parameter `{k}` in --keep"))))
        .collect::<Result<Vec<_>, _>>()?;
    if !keep.is_empty() && !matches!(a.quantity, Quantity::Det | Quantity::Rank) {
        return Err(Failure::Usage("--keep only applies to det and rank".into()));
    }
    Ok(Settings { model: a.model, quantity: a.quantity, side: a.side, action: a.action, level, keep })
}

fn run_eval(a: &EvalArgs) -> Result<(), Failure> {
    let names = a.model.names();
    let s = settings(a)?;
    let grid = GridSpec::parse(names, &a.set, &a.sweep)?;
    let points = grid.points();
    for x in &points {
        a.model.domain().check(x).map_err(|e| Failure::Domain(format!("at grid point {}: {e}", describe(names, x))))?;
    }
    if a.model == Model::Quartic && a.side == Side::Quantum {
        for x in &points {
            let p = QuarticPoint::from_slice(x).map_err(|e| Failure::Domain(e.to_string()))?;
            if let Ok(st) = quartic_ground_state(&p, a.hbar) {
                if let Some(w) = st.warning {
                    eprintln!("warning at {}: {w}", describe(names, x));
                }
            }
        }
    }
    let pool = thread_pool()?;
    let results: Vec<_> = pool.install(|| points.par_iter().map(|x| eval::evaluate(&s, x)).collect());
    let mut rows = Vec::new();
    for (x, r) in points.iter().zip(results) {
        match r {
            Ok(v) => rows.extend(v),
            Err(e @ (Error::Domain(_) | Error::ShapeMismatch(_))) => {
                return Err(Failure::Domain(format!("at grid point {}: {e}", describe(names, x))))
            }
            Err(e) => return Err(Failure::Domain(format!("evaluation failed at {}: {e}", describe(names, x)))),
        }
    }
    let mut out = String::new();
    match a.format {
        Format::Csv => {
            out.push_str(&eval::csv_header(names));
            out.push('\n');
            for r in &rows {
                out.push_str(&eval::csv_line(r));
                out.push('\n');
            }
        }
        Format::Json => out = eval::json_rows(names, &rows),
    }
    print_stdout(&out);
    Ok(())
}

fn print_stdout(s: &str) {
    let mut lock = std::io::stdout().lock();
    let _ = lock.write_all(s.as_bytes());
    let _ = lock.flush();
}

fn run_verify(suite: &str) -> Result<u8, Failure> {
    let suites = parse_suites(suite).map_err(Failure::Usage)?;
    let pool = thread_pool()?;
    let reports: Vec<Vec<Check>> = pool.install(|| suites.par_iter().map(|s| s.run()).collect());
    let mut failed = 0;
    let mut total = 0;
    for c in reports.iter().flatten() {
        eprintln!("{c}");
        total += 1;
        if !c.passed() {
            failed += 1;
        }
    }
    eprintln!("{} of {total} checks passed", total - failed);
    Ok(if failed == 0 { OK } else { VERIFY_FAILED })
}

fn run_series(target: &str) -> Result<(), Failure> {
    let t: DumpTarget = target.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let s = quartic_pipeline().map_err(|e| Failure::Domain(e.to_string()))?;
    let json = dump(s, t).and_then(|d| to_json(&d)).map_err(|e| Failure::Domain(e.to_string()))?;
    print_stdout(&json);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => run_eval(a).map(|_| OK),
        Command::Verify { suite } => run_verify(suite),
        Command::Series { target, .. } => run_series(target).map(|_| OK),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("domain error: {m}");
            ExitCode::from(DOMAIN)
        }
    }
}
