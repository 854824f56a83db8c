use macdonald::verify::{run_suite, suite_jobs, Mode, SuiteConfig, SuiteName};

fn verdicts(suite: SuiteName, cfg: &SuiteConfig, mode: Mode) -> Vec<(String, bool)> {
    let jobs = suite_jobs(suite, cfg);
    let mut out = Vec::new();
    run_suite(&jobs, mode, |r| out.push((r.name.clone(), r.passed())));
    out
}

// Evaluating at a sample point can only hide a discrepancy by accident, so
// numeric and symbolic runs must agree check by check, failures included.
#[test]
fn numeric_and_symbolic_verdicts_agree() {
    let cfg = SuiteConfig { max_degree: 3, max_k: 2, max_weight: 3, n: 3, degree: 3, ..SuiteConfig::default() };
    for suite in [SuiteName::All, SuiteName::Steps] {
        let symbolic = verdicts(suite, &cfg, Mode::Symbolic);
        assert!(!symbolic.is_empty());
        for seed in [1, 2, 3] {
            assert_eq!(verdicts(suite, &cfg, Mode::Numeric { seed }), symbolic, "{suite}, seed {seed}");
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = SuiteConfig { max_degree: 2, max_weight: 2, degree: 2, ..SuiteConfig::default() };
    let render = || {
        let mut lines = Vec::new();
        let s = run_suite(&suite_jobs(SuiteName::All, &cfg), Mode::Symbolic, |r| lines.push(r.to_json(false).to_string()));
        lines.push(s.to_json(false).to_string());
        lines
    };
    assert_eq!(render(), render());
}
