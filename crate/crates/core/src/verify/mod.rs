//! Exact certification of the identities behind the library: each check
//! computes both sides of an identity by separate routes and compares them
//! coefficient by coefficient.

mod alternants;
mod classical;
mod kernel;
mod operators;
mod suite;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::symfun::SymFun;

pub use alternants::{
    alternant_f, check_decomposition, check_defmun, check_finite_symbol, check_proposition, check_schur_support,
    isum,
};
pub use classical::{check_cross_oracle, check_green, check_macdonald_construction, check_specialization};
pub use kernel::{check_hl_cauchy, check_kernel_lemma, kernel_pi};
pub use operators::{
    check_adjoint_pairing, check_corollary, check_deigen, check_step, check_theorem_basic, random_homogeneous,
};
pub use suite::{run_suite, suite_jobs, Job, Mode, SuiteConfig, SuiteName, Summary, SUITES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of one check. A failing report always has a witness.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One JSON object with keys in a fixed order. `elapsed_ms` is included
    /// only when asked for, so that repeated runs give identical output.
    pub fn to_json(&self, timings: bool) -> Value {
        let mut m = Map::new();
        m.insert("name".into(), json!(self.name));
        let params: Map<String, Value> = self.parameters.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        m.insert("parameters".into(), Value::Object(params));
        m.insert("status".into(), json!(self.status.to_string()));
        m.insert("witness".into(), self.witness.as_ref().map_or(Value::Null, |w| json!(w)));
        if timings {
            m.insert("elapsed_ms".into(), json!(self.elapsed.as_millis() as u64));
        }
        Value::Object(m)
    }
}

/// Times `body` and turns its outcome into a report. `Ok(None)` passes,
/// `Ok(Some(w))` fails with witness `w`, and an error fails with the error
/// text as witness.
pub(crate) fn run_check(
    name: &str,
    parameters: Vec<(&str, String)>,
    body: impl FnOnce(&mut BTreeMap<String, String>) -> Result<Option<String>>,
) -> CheckReport {
    let start = Instant::now();
    let mut parameters: BTreeMap<String, String> = parameters.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
    let outcome = body(&mut parameters);
    let (status, witness) = match outcome {
        Ok(None) => (Status::Pass, None),
        Ok(Some(w)) => (Status::Fail, Some(w)),
        Err(e) => (Status::Fail, Some(format!("error: {e}"))),
    };
    CheckReport { name: name.to_string(), parameters, status, witness, elapsed: start.elapsed() }
}

/// The first basis element on which two expansions in the same basis
/// differ, ignoring degree bounds.
pub(crate) fn symfun_difference(a: &SymFun, b: &SymFun) -> Option<String> {
    if a.basis() != b.basis() {
        return Some(format!("bases differ: {} and {}", a.basis(), b.basis()));
    }
    let keys: std::collections::BTreeSet<_> = a.terms().chain(b.terms()).map(|(l, _)| l.clone()).collect();
    for l in keys {
        let (x, y) = (a.coeff(&l), b.coeff(&l));
        if x != y {
            return Some(format!("coefficient of {}{l}: {} vs {}", a.basis().symbol(), x.to_plain(), y.to_plain()));
        }
    }
    None
}
