//! Parameter sweeps over the checks, run in parallel with a deterministic
//! order of reports.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::families::macdonald_m;
use crate::macops::StepKind;
use crate::partitions::Partition;
use crate::rq::mode::{sample_point, with_point};
use crate::symfun::{Basis, SymFun};

use super::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteName {
    Kernel,
    HlCauchy,
    Green,
    Deigen,
    Theorem,
    Corollary,
    Proposition,
    FiniteSymbol,
    Decomposition,
    Macdonald,
    Steps,
    Specialization,
    CrossOracle,
    Adjoint,
    Defmun,
    SchurSupport,
    All,
}

/// Every suite name, in the order `all` runs them (`all` itself last).
pub const SUITES: &[SuiteName] = &[
    SuiteName::Kernel,
    SuiteName::HlCauchy,
    SuiteName::Green,
    SuiteName::Deigen,
    SuiteName::Theorem,
    SuiteName::Corollary,
    SuiteName::Proposition,
    SuiteName::FiniteSymbol,
    SuiteName::Decomposition,
    SuiteName::Macdonald,
    SuiteName::Steps,
    SuiteName::Specialization,
    SuiteName::CrossOracle,
    SuiteName::Adjoint,
    SuiteName::Defmun,
    SuiteName::SchurSupport,
    SuiteName::All,
];

impl SuiteName {
    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Kernel => "kernel",
            SuiteName::HlCauchy => "hl-cauchy",
            SuiteName::Green => "green",
            SuiteName::Deigen => "deigen",
            SuiteName::Theorem => "theorem",
            SuiteName::Corollary => "corollary",
            SuiteName::Proposition => "proposition",
            SuiteName::FiniteSymbol => "finite-symbol",
            SuiteName::Decomposition => "decomposition",
            SuiteName::Macdonald => "macdonald",
            SuiteName::Steps => "steps",
            SuiteName::Specialization => "specialization",
            SuiteName::CrossOracle => "cross-oracle",
            SuiteName::Adjoint => "adjoint",
            SuiteName::Defmun => "defmun",
            SuiteName::SchurSupport => "schur-support",
            SuiteName::All => "all",
        }
    }

    /// The suites that `all` expands to. The step operators are left out:
    /// their `B` side does not isolate a single function at the prescribed
    /// points, so that suite is run on request only.
    pub fn members(self) -> Vec<SuiteName> {
        match self {
            SuiteName::All => SUITES
                .iter()
                .copied()
                .filter(|s| !matches!(s, SuiteName::All | SuiteName::Steps))
                .collect(),
            s => vec![s],
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SUITES
            .iter()
            .copied()
            .find(|n| n.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Symbolic,
    /// Coefficients are evaluated at the point drawn from the seed.
    Numeric { seed: u64 },
}

/// Sweep ranges.
///
/// * `max_degree`: weights for the operator checks (theorem, corollary,
///   steps, adjoint pairs);
/// * `max_weight`: weights for the other partition sweeps;
/// * `n`: largest number of variables;
/// * `degree`: degrees for green, hl-cauchy, finite-symbol and the kernel
///   truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub max_degree: usize,
    pub max_k: usize,
    pub max_weight: usize,
    pub n: usize,
    pub degree: usize,
    pub u_samples: Vec<i64>,
    pub mode: Mode,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_degree: 4,
            max_k: 3,
            max_weight: 4,
            n: 3,
            degree: 4,
            u_samples: vec![2, 3, 5],
            mode: Mode::Symbolic,
            timings: false,
        }
    }
}

/// One check waiting to run.
pub struct Job {
    pub suite: SuiteName,
    symbolic_only: bool,
    run: Box<dyn Fn() -> CheckReport + Send + Sync>,
}

impl Job {
    fn new(suite: SuiteName, run: impl Fn() -> CheckReport + Send + Sync + 'static) -> Job {
        Job { suite, symbolic_only: false, run: Box::new(run) }
    }

    fn symbolic(suite: SuiteName, run: impl Fn() -> CheckReport + Send + Sync + 'static) -> Job {
        Job { suite, symbolic_only: true, run: Box::new(run) }
    }

    /// Runs the check, at the sample point in numeric mode unless the
    /// check only makes sense with symbolic coefficients.
    pub fn run(&self, mode: Mode) -> CheckReport {
        match mode {
            Mode::Numeric { seed } if !self.symbolic_only => {
                let (q0, t0) = sample_point(seed);
                let mut rep = with_point(q0, t0, || (self.run)());
                rep.parameters.insert("mode".into(), format!("numeric(seed={seed})"));
                rep
            }
            _ => (self.run)(),
        }
    }
}

fn partitions_up_to(w: usize) -> Vec<Partition> {
    Partition::up_to(w)
}

fn jobs_for(suite: SuiteName, cfg: &SuiteConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    match suite {
        SuiteName::Kernel => {
            let d = cfg.degree;
            for v in [&[1][..], &[2], &[3]] {
                let l = Partition::from(v);
                jobs.push(Job::new(suite, move || {
                    check_kernel_lemma(&SymFun::basis_element(Basis::P, &l, l.weight()), d)
                }));
            }
            jobs.push(Job::new(suite, move || {
                let m = macdonald_m(&Partition::from([2, 1]));
                check_kernel_lemma(&m, d)
            }));
        }
        SuiteName::HlCauchy => {
            for d in 1..=cfg.degree {
                jobs.push(Job::new(suite, move || check_hl_cauchy(d)));
            }
        }
        SuiteName::Green => {
            for d in 1..=cfg.degree {
                jobs.push(Job::symbolic(suite, move || check_green(d)));
            }
        }
        SuiteName::Deigen => {
            for n in 1..=cfg.n {
                for l in partitions_up_to(cfg.max_weight).into_iter().filter(|l| l.len() <= n) {
                    jobs.push(Job::new(suite, move || check_deigen(n, &l)));
                }
            }
        }
        SuiteName::Theorem => {
            for k in 1..=cfg.max_k {
                for l in partitions_up_to(cfg.max_degree) {
                    jobs.push(Job::new(suite, move || check_theorem_basic(k, &l)));
                }
            }
        }
        SuiteName::Corollary => {
            for mu in partitions_up_to(cfg.max_degree) {
                let u = cfg.u_samples.clone();
                jobs.push(Job::new(suite, move || check_corollary(&mu, &u)));
            }
        }
        SuiteName::Adjoint => {
            for d in 0..cfg.max_degree {
                let k = cfg.max_k;
                jobs.push(Job::new(suite, move || check_adjoint_pairing(d as u64, d, k)));
            }
        }
        SuiteName::Proposition => {
            for n in 2..=cfg.n {
                for l in partitions_up_to(cfg.max_weight).into_iter().filter(|l| !l.is_empty() && l.len() < n) {
                    jobs.push(Job::symbolic(suite, move || check_proposition(n, &l)));
                }
            }
        }
        SuiteName::SchurSupport => {
            for n in 2..=cfg.n {
                for l in partitions_up_to(cfg.max_weight).into_iter().filter(|l| !l.is_empty() && l.len() < n) {
                    jobs.push(Job::symbolic(suite, move || check_schur_support(n, &l)));
                }
            }
        }
        SuiteName::Defmun => {
            for n in 1..=cfg.n {
                for mu in partitions_up_to(cfg.max_weight).into_iter().filter(|m| m.len() < n) {
                    for extra in 0..=1 {
                        let mu = mu.clone();
                        jobs.push(Job::symbolic(suite, move || check_defmun(&mu, extra, n)));
                    }
                }
            }
        }
        SuiteName::Decomposition => {
            for n in 1..=cfg.n {
                for l in partitions_up_to(cfg.max_weight).into_iter().filter(|l| l.len() <= n) {
                    for i in 1..=n {
                        let l = l.clone();
                        jobs.push(Job::symbolic(suite, move || check_decomposition(&l, n, i)));
                    }
                }
            }
        }
        SuiteName::FiniteSymbol => {
            for n in 1..=cfg.n {
                let (d, u) = (cfg.degree, cfg.u_samples.clone());
                jobs.push(Job::new(suite, move || check_finite_symbol(n, d, &u)));
            }
        }
        SuiteName::Macdonald => {
            for d in 0..=cfg.max_weight {
                jobs.push(Job::new(suite, move || check_macdonald_construction(d)));
            }
        }
        SuiteName::Steps => {
            for l in partitions_up_to(cfg.max_degree) {
                for kind in [StepKind::B, StepKind::C] {
                    for i in 1..=l.len() {
                        if l.remove_box(i).is_some() {
                            let l = l.clone();
                            jobs.push(Job::new(suite, move || check_step(kind, &l, i)));
                        }
                    }
                }
            }
        }
        SuiteName::Specialization => {
            for l in partitions_up_to(cfg.max_weight) {
                jobs.push(Job::symbolic(suite, move || check_specialization(&l)));
            }
        }
        SuiteName::CrossOracle => {
            for d in 0..=cfg.max_weight {
                jobs.push(Job::new(suite, move || check_cross_oracle(d)));
            }
        }
        SuiteName::All => {
            for s in suite.members() {
                jobs.extend(jobs_for(s, cfg));
            }
        }
    }
    jobs
}

/// The checks of a suite, in a fixed order.
pub fn suite_jobs(suite: SuiteName, cfg: &SuiteConfig) -> Vec<Job> {
    jobs_for(suite, cfg)
}

/// Counts for a finished run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub elapsed: Duration,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// Total elapsed time is part of the object only with `timings`, to keep
    /// repeated runs byte-identical.
    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({"summary": {"total": self.total, "passed": self.passed, "failed": self.failed}});
        if timings {
            v["summary"]["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        v
    }
}

/// Runs the jobs in parallel and hands the reports to `sink` in job order.
pub fn run_suite(jobs: &[Job], mode: Mode, mut sink: impl FnMut(&CheckReport)) -> Summary {
    let start = Instant::now();
    let reports: Vec<CheckReport> = jobs.par_iter().map(|j| j.run(mode)).collect();
    let mut passed = 0;
    for r in &reports {
        if r.passed() {
            passed += 1;
        }
        sink(r);
    }
    Summary { total: reports.len(), passed, failed: reports.len() - passed, elapsed: start.elapsed() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in SUITES {
            assert_eq!(s.name().parse::<SuiteName>().unwrap(), *s);
        }
        assert!("nope".parse::<SuiteName>().is_err());
        assert!(!SuiteName::All.members().contains(&SuiteName::Steps));
    }

    #[test]
    fn small_sweeps_pass() {
        let cfg = SuiteConfig { max_degree: 2, max_k: 2, max_weight: 2, n: 2, degree: 2, ..Default::default() };
        for suite in [SuiteName::Theorem, SuiteName::Proposition, SuiteName::Deigen, SuiteName::Decomposition] {
            let jobs = suite_jobs(suite, &cfg);
            assert!(!jobs.is_empty());
            let mut names = Vec::new();
            let s = run_suite(&jobs, Mode::Symbolic, |r| names.push(r.name.clone()));
            assert!(s.all_passed(), "{suite}");
            assert_eq!(names.len(), jobs.len());
        }
    }

    #[test]
    fn numeric_mode_records_the_point() {
        let cfg = SuiteConfig { max_degree: 1, max_k: 1, ..Default::default() };
        let jobs = suite_jobs(SuiteName::Theorem, &cfg);
        let mut reps = Vec::new();
        let s = run_suite(&jobs, Mode::Numeric { seed: 3 }, |r| reps.push(r.clone()));
        assert!(s.all_passed());
        assert!(reps.iter().all(|r| r.parameters["mode"] == "numeric(seed=3)"));
    }
}
