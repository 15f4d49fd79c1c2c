//! Command-line front end for the exact q-Dyson constant-term kernel.
//!
//! Three subcommands: `compute` evaluates one constant term by every
//! requested method and compares the results, `verify` runs a named
//! identity sweep within bounds, and `sweep` does the same driven by a JSON
//! config file. Exit codes are part of the contract: 0 when everything
//! agrees, 1 when any identity check fails, 2 for usage or config errors.
//!
//! Reports are deterministic: the same suite, bounds, and seed produce
//! byte-identical JSON regardless of the worker count, so reports can be
//! diffed between runs. Wall-clock timing appears only in the text format.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use qdyson::dyson::{d_brute, d_closed, d_recursive, dt_brute, dt_single_row};
use qdyson::verify::{plan, run_case, Bounds, CaseRecord, Suite};
use qdyson::{Error, Partition, QLaurent, WeakComposition};

#[derive(Parser)]
#[command(name = "qdyson", version, about = "Exact generalized q-Dyson constant terms")]
struct Cli {
    /// Output format for results and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one constant term by each requested method and compare.
    Compute(ComputeArgs),
    /// Run a named verification suite within bounds.
    Verify(VerifyArgs),
    /// Run the sweep described by a JSON config file.
    Sweep(SweepArgs),
}

#[derive(clap::Args)]
struct ComputeArgs {
    /// Constant-term family: D (per-variable insertions) or Dt (one
    /// symmetric insertion).
    #[arg(long, value_enum)]
    kind: Kind,

    /// Exponent vector, comma separated (entries may be negative).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    v: Vec<i64>,

    /// Partition, comma separated, weakly decreasing.
    #[arg(long, value_delimiter = ',', required = true)]
    lambda: Vec<i64>,

    /// Composition of nonnegative integers, comma separated; its length is
    /// the variable count.
    #[arg(long, value_delimiter = ',', required = true)]
    a: Vec<i64>,

    /// Methods to run and compare.
    #[arg(long, value_delimiter = ',', value_enum, required = true)]
    methods: Vec<Method>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "D")]
    D,
    #[value(name = "Dt")]
    Dt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Full kernel expansion and coefficient extraction.
    Brute,
    /// Closed product form along the diagonal (kind D).
    Closed,
    /// Peeling recursion with brute-force fallback (kind D).
    Recursive,
    /// Single-row closed form (kind Dt).
    Kadell,
}

impl Method {
    fn label(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Closed => "closed",
            Method::Recursive => "recursive",
            Method::Kadell => "kadell",
        }
    }

    fn applies_to(self, kind: Kind) -> bool {
        match self {
            Method::Brute => true,
            Method::Closed | Method::Recursive => kind == Kind::D,
            Method::Kadell => kind == Kind::Dt,
        }
    }
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Suite token; see `verify --help` output of valid names.
    #[arg(long)]
    suite: String,

    /// Cap on the variable count (suite default when omitted).
    #[arg(long)]
    n_max: Option<usize>,

    /// Cap on each entry of `a`.
    #[arg(long)]
    a_max: Option<i64>,

    /// Cap on the partition size `|lambda|`.
    #[arg(long)]
    lambda_size_max: Option<i64>,

    /// Seed for the random evaluation points of the splitting suite.
    #[arg(long)]
    seed: Option<u64>,

    /// Worker count; 0 picks one per CPU.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Path to a JSON config file with the sweep description.
    #[arg(long)]
    config: std::path::PathBuf,
}

/// On-disk sweep description. Bounds fall back to the suite's defaults;
/// unknown fields are rejected so config typos cannot silently widen or
/// shrink a sweep.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepConfig {
    suite: String,
    n_max: Option<usize>,
    a_max: Option<i64>,
    lambda_size_max: Option<i64>,
    seed: Option<u64>,
    parallelism: Option<usize>,
}

#[derive(Serialize)]
struct ComputeReport {
    tool: &'static str,
    version: &'static str,
    kind: &'static str,
    v: Vec<i64>,
    lambda: Vec<i64>,
    a: Vec<i64>,
    outputs: Vec<ReportOutput>,
    agree: bool,
}

#[derive(Serialize)]
struct Report {
    tool: &'static str,
    version: &'static str,
    suite: String,
    config: ReportConfig,
    summary: Summary,
    cases: Vec<ReportCase>,
}

#[derive(Serialize)]
struct ReportConfig {
    n_max: usize,
    a_max: i64,
    lambda_size_max: i64,
    seed: u64,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
    pass: bool,
}

#[derive(Serialize)]
struct ReportCase {
    id: String,
    outputs: Vec<ReportOutput>,
    pass: bool,
}

#[derive(Serialize)]
struct ReportOutput {
    label: String,
    value: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Distinguishes "the user asked for something ill-formed" (exit 2, via the
/// Err branch) from "the identity did not hold" (exit 1, via the Ok value).
fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Compute(args) => run_compute(args, cli.format),
        Command::Verify(args) => {
            let suite = parse_suite(&args.suite)?;
            let mut bounds = suite.default_bounds();
            if let Some(n) = args.n_max {
                bounds.n_max = n;
            }
            if let Some(a) = args.a_max {
                bounds.a_max = a;
            }
            if let Some(l) = args.lambda_size_max {
                bounds.lambda_size_max = l;
            }
            if let Some(s) = args.seed {
                bounds.seed = s;
            }
            run_sweep(suite, &bounds, args.jobs, cli.format)
        }
        Command::Sweep(args) => {
            let raw = std::fs::read_to_string(&args.config)
                .map_err(|e| format!("cannot read {}: {e}", args.config.display()))?;
            let config: SweepConfig = serde_json::from_str(&raw)
                .map_err(|e| format!("{}: {e}", args.config.display()))?;
            let suite = parse_suite(&config.suite)?;
            let mut bounds = suite.default_bounds();
            if let Some(n) = config.n_max {
                bounds.n_max = n;
            }
            if let Some(a) = config.a_max {
                bounds.a_max = a;
            }
            if let Some(l) = config.lambda_size_max {
                bounds.lambda_size_max = l;
            }
            if let Some(s) = config.seed {
                bounds.seed = s;
            }
            run_sweep(suite, &bounds, config.parallelism.unwrap_or(0), cli.format)
        }
    }
}

fn parse_suite(token: &str) -> Result<Suite, String> {
    Suite::from_token(token).ok_or_else(|| {
        let known: Vec<&str> = Suite::ALL.iter().map(|s| s.token()).collect();
        format!("unknown suite `{token}`; expected one of {}", known.join(", "))
    })
}

fn run_compute(args: &ComputeArgs, format: Format) -> Result<ExitCode, String> {
    let a = WeakComposition::new(args.a.clone()).map_err(|e| format!("--a: {e}"))?;
    let lambda = Partition::new(args.lambda.clone()).map_err(|e| format!("--lambda: {e}"))?;
    for method in &args.methods {
        if !method.applies_to(args.kind) {
            let kind = if args.kind == Kind::D { "D" } else { "Dt" };
            return Err(format!("method `{}` does not apply to kind {kind}", method.label()));
        }
    }

    let mut outputs: Vec<(&'static str, String)> = Vec::new();
    let mut values: Vec<QLaurent> = Vec::new();
    let mut failed = false;
    for method in &args.methods {
        match compute_one(*method, args.kind, &args.v, &lambda, &a) {
            Ok(value) => {
                outputs.push((method.label(), value.to_string()));
                values.push(value);
            }
            // a non-exact division means the closed form itself failed to
            // be a Laurent polynomial: an identity failure, not a usage one
            Err(Error::NonExactDivision) => {
                outputs.push((method.label(), "error: non-exact division".to_string()));
                failed = true;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    let agree = !failed && values.windows(2).all(|w| w[0] == w[1]);

    match format {
        Format::Text => {
            for (label, value) in &outputs {
                println!("{label}: {value}");
            }
            println!("agreement: {}", if agree { "yes" } else { "no" });
        }
        Format::Json => {
            let doc = ComputeReport {
                tool: "qdyson",
                version: env!("CARGO_PKG_VERSION"),
                kind: if args.kind == Kind::D { "D" } else { "Dt" },
                v: args.v.clone(),
                lambda: args.lambda.clone(),
                a: args.a.clone(),
                outputs: outputs
                    .iter()
                    .map(|(label, value)| ReportOutput {
                        label: label.to_string(),
                        value: value.clone(),
                    })
                    .collect(),
                agree,
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn compute_one(
    method: Method,
    kind: Kind,
    v: &[i64],
    lambda: &Partition,
    a: &WeakComposition,
) -> Result<QLaurent, Error> {
    match method {
        Method::Brute => match kind {
            Kind::D => d_brute(v, lambda, a),
            Kind::Dt => dt_brute(v, lambda, a),
        },
        Method::Closed => d_closed(lambda, a),
        Method::Recursive => d_recursive(v, lambda, a),
        Method::Kadell => {
            if lambda.num_parts() > 1 {
                return Err(Error::BadShape(
                    "the single-row method needs lambda with one part".to_string(),
                ));
            }
            dt_single_row(v, lambda.part(0), a)
        }
    }
}

fn run_sweep(
    suite: Suite,
    bounds: &Bounds,
    jobs: usize,
    format: Format,
) -> Result<ExitCode, String> {
    let start = Instant::now();
    let cases = plan(suite, bounds);
    // worker count 0 lets the pool size itself; result order always follows
    // the plan, so the report is identical for any worker count
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| format!("cannot start worker pool: {e}"))?;
    let records: Vec<CaseRecord> = pool.install(|| {
        cases
            .par_iter()
            .enumerate()
            .map(|(index, case)| run_case(case, bounds.seed, index as u64))
            .flatten()
            .collect()
    });
    let elapsed = start.elapsed();

    let passed = records.iter().filter(|r| r.pass).count();
    let report = Report {
        tool: "qdyson",
        version: env!("CARGO_PKG_VERSION"),
        suite: suite.token().to_string(),
        config: ReportConfig {
            n_max: bounds.n_max,
            a_max: bounds.a_max,
            lambda_size_max: bounds.lambda_size_max,
            seed: bounds.seed,
        },
        summary: Summary {
            total: records.len(),
            passed,
            failed: records.len() - passed,
            pass: passed == records.len(),
        },
        cases: records
            .into_iter()
            .map(|r| ReportCase {
                id: r.id,
                outputs: r
                    .outputs
                    .into_iter()
                    .map(|o| ReportOutput { label: o.label, value: o.value })
                    .collect(),
                pass: r.pass,
            })
            .collect(),
    };

    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
        Format::Text => print!("{}", render_text(&report, elapsed.as_secs_f64())),
    }
    Ok(if report.summary.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn render_text(report: &Report, elapsed_secs: f64) -> String {
    const MAX_FAILURES_SHOWN: usize = 50;
    let mut out = String::new();
    let suite = Suite::from_token(&report.suite).expect("token from a known suite");
    let _ = writeln!(out, "suite: {} ({})", report.suite, suite.description());
    let c = &report.config;
    let _ = writeln!(
        out,
        "bounds: n_max={} a_max={} lambda_size_max={} seed={}",
        c.n_max, c.a_max, c.lambda_size_max, c.seed
    );
    for case in report.cases.iter().filter(|c| !c.pass).take(MAX_FAILURES_SHOWN) {
        let _ = writeln!(out, "FAIL {}", case.id);
        for output in &case.outputs {
            let _ = writeln!(out, "    {}: {}", output.label, output.value);
        }
    }
    if report.summary.failed > MAX_FAILURES_SHOWN {
        let _ = writeln!(out, "... {} further failures", report.summary.failed - MAX_FAILURES_SHOWN);
    }
    let s = &report.summary;
    let _ = writeln!(out, "cases: {}  passed: {}  failed: {}", s.total, s.passed, s.failed);
    let _ = writeln!(out, "elapsed: {elapsed_secs:.2}s");
    let _ = writeln!(out, "result: {}", if s.pass { "PASS" } else { "FAIL" });
    out
}
