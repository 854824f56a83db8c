//! `macd`: expansions, operator applications and verification sweeps from
//! the command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
//! 3 precondition violation.

mod expr;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use macdonald::families::{hall_littlewood, macdonald_m, schur, HlKind};
use macdonald::macops::{a_k_apply, apply_dn, step_series_apply, StepKind};
use macdonald::rq::mode::{sample_point, with_point};
use macdonald::symfun::{convert, restrict};
use macdonald::verify::{run_suite, suite_jobs, Mode, SuiteConfig, SuiteName};
use macdonald::{Basis, Error, Partition, SymFun};

#[derive(Parser)]
#[command(name = "macd", version, about = "Exact Macdonald and Hall-Littlewood symmetric functions over Q(q,t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a family member in a basis.
    Expand(ExpandArgs),
    /// Apply an operator to an expression.
    Apply(ApplyArgs),
    /// Run a verification suite and print one JSON report per line.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Numeric,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long, value_enum, default_value = "symbolic")]
    mode: ModeArg,
    /// Seed of the sample point; required in numeric mode.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Macdonald,
    HlP,
    HlQ,
    Schur,
    Monomial,
    Power,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Parts separated by commas, e.g. `2,1`.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    partition: String,
    /// Target basis: m, p, s, P, Q or M.
    #[arg(long, default_value = "m")]
    to: String,
    #[arg(long)]
    degree_bound: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "DN", alias = "dn")]
    Dn,
}

#[derive(Args)]
struct ApplyArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Number of variables for DN.
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    to_expr: String,
    #[arg(long)]
    degree_bound: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    /// kernel, hl-cauchy, green, deigen, theorem, corollary, proposition,
    /// finite-symbol, decomposition, macdonald, steps, specialization,
    /// cross-oracle, adjoint, defmun, schur-support or all.
    suite: String,
    /// Weights for theorem, corollary, steps and adjoint.
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    max_k: Option<usize>,
    /// Weights for the other partition sweeps.
    #[arg(long)]
    max_weight: Option<usize>,
    /// Largest number of variables.
    #[arg(long = "N")]
    n: Option<usize>,
    /// Degree for green, hl-cauchy, finite-symbol and kernel.
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    u_samples: Option<Vec<i64>>,
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    common: Common,
}

/// Failures mapped to exit codes.
enum Failure {
    Usage(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::BasisMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

fn sample_seed(c: &Common) -> Result<Option<u64>, Failure> {
    match (c.mode, c.seed) {
        (ModeArg::Symbolic, _) => Ok(None),
        (ModeArg::Numeric, Some(s)) => Ok(Some(s)),
        (ModeArg::Numeric, None) => Err(Failure::Usage("numeric mode needs --seed".into())),
    }
}

fn in_mode<R>(seed: Option<u64>, f: impl FnOnce() -> R) -> R {
    match seed {
        Some(s) => {
            let (q0, t0) = sample_point(s);
            with_point(q0, t0, f)
        }
        None => f(),
    }
}

fn render(f: &SymFun, format: Format) -> String {
    match format {
        Format::Plain => f.to_plain(),
        Format::Latex => f.to_latex(),
        Format::Json => f.to_json().to_string(),
    }
}

fn basis(name: &str) -> Result<Basis, Failure> {
    name.parse::<Basis>().map_err(Failure::from)
}

fn expand(a: &ExpandArgs) -> Result<String, Failure> {
    let l: Partition = a.partition.parse()?;
    let to = basis(&a.to)?;
    let bound = a.degree_bound.unwrap_or(l.weight());
    if bound < l.weight() {
        return Err(Failure::Precondition(format!("degree bound {bound} is below |{l}| = {}", l.weight())));
    }
    in_mode(sample_seed(&a.common)?, || {
        let f = match a.family {
            Family::Macdonald => (*macdonald_m(&l)).clone(),
            Family::HlP => hall_littlewood(&l, HlKind::P, bound),
            Family::HlQ => hall_littlewood(&l, HlKind::Q, bound),
            Family::Schur => schur(&l),
            Family::Monomial => SymFun::basis_element(Basis::M, &l, bound),
            Family::Power => SymFun::basis_element(Basis::P, &l, bound),
        };
        Ok(render(&convert(&f.with_bound(bound), to)?, a.common.format))
    })
}

fn apply(a: &ApplyArgs) -> Result<String, Failure> {
    let seed = sample_seed(&a.common)?;
    in_mode(seed, || {
        let f = expr::parse_expr(&a.to_expr)?;
        let top = f.max_degree().unwrap_or(0);
        let bound = a.degree_bound.unwrap_or(if a.op == Op::B { top + 1 } else { top });
        if a.op != Op::Dn && a.k == 0 {
            return Err(Failure::Precondition("--k must be at least 1".into()));
        }
        let out = match a.op {
            Op::A => a_k_apply(a.k, &f, bound)?,
            Op::B => step_series_apply(StepKind::B, a.k - 1, &f, bound)?,
            Op::C => step_series_apply(StepKind::C, a.k - 1, &f, bound)?,
            Op::Dn => {
                let n = a.n.ok_or_else(|| Failure::Precondition("DN needs --N".into()))?;
                let d = apply_dn(&restrict(&f, n)?, n)?;
                let coeffs: Vec<SymFun> = d.coeffs.iter().map(|c| c.to_symfun(bound)).collect();
                return Ok(match a.common.format {
                    Format::Json => {
                        json!(coeffs.iter().map(SymFun::to_json).collect::<Vec<_>>()).to_string()
                    }
                    fmt => coeffs
                        .iter()
                        .enumerate()
                        .map(|(k, c)| format!("u^{k}: {}", render(c, fmt)))
                        .collect::<Vec<_>>()
                        .join(", "),
                });
            }
        };
        Ok(render(&out, a.common.format))
    })
}

fn verify(a: &VerifyArgs) -> Result<bool, Failure> {
    let suite: SuiteName = a.suite.parse().map_err(Failure::Usage)?;
    let d = SuiteConfig::default();
    let mode = match sample_seed(&a.common)? {
        Some(seed) => Mode::Numeric { seed },
        None => Mode::Symbolic,
    };
    let cfg = SuiteConfig {
        max_degree: a.max_degree.unwrap_or(d.max_degree),
        max_k: a.max_k.unwrap_or(d.max_k),
        max_weight: a.max_weight.unwrap_or(d.max_weight),
        n: a.n.unwrap_or(d.n),
        degree: a.degree.unwrap_or(d.degree),
        u_samples: a.u_samples.clone().unwrap_or(d.u_samples),
        mode,
        timings: a.timings,
    };
    let jobs = suite_jobs(suite, &cfg);
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let summary = run_suite(&jobs, cfg.mode, |r| {
        let _ = writeln!(out, "{}", r.to_json(cfg.timings));
    });
    let _ = writeln!(out, "{}", summary.to_json(cfg.timings));
    let _ = out.flush();
    Ok(summary.all_passed())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match &cli.command {
        Command::Expand(a) => expand(a).map(|s| {
            println!("{s}");
            true
        }),
        Command::Apply(a) => apply(a).map(|s| {
            println!("{s}");
            true
        }),
        Command::Verify(a) => verify(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
