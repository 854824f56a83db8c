//! The reproducing kernel and the Cauchy identities.

use num_rational::BigRational;

use crate::error::Result;
use crate::families::{hall_littlewood, schur, HlKind};
use crate::partitions::Partition;
use crate::rq::RatFun;
use crate::symfun::{BiSymFun, SymFun};

use super::{run_check, CheckReport};

fn exp_of_diagonal(degree_bound: usize, c: impl Fn(usize) -> RatFun) -> BiSymFun {
    let mut g = BiSymFun::zero(degree_bound);
    for n in 1..=degree_bound {
        let pn = Partition::from([n]);
        let w = &c(n) * &RatFun::from_rational(&BigRational::new(1.into(), (n as i64).into()));
        g.add_term(&pn, &pn, &w);
    }
    g.exp()
}

/// `exp(sum_n (1/n) (1 - t^n)/(1 - q^n) p_n(x) p_n(y))` up to bidegree
/// `degree_bound`.
pub fn kernel_pi(degree_bound: usize) -> BiSymFun {
    exp_of_diagonal(degree_bound, |n| {
        let n = n as i32;
        &RatFun::one_minus(0, n) / &RatFun::one_minus(n, 0)
    })
}

/// `f^*(Pi) / Pi = f(y)`, with `f^*` acting on `x` and `Pi` truncated at
/// `degree_bound + deg f`.
pub fn check_kernel_lemma(f: &SymFun, degree_bound: usize) -> CheckReport {
    run_check(
        "kernel_lemma",
        vec![("f", f.to_plain()), ("degree_bound", degree_bound.to_string())],
        |_| {
            let bound = degree_bound + f.max_degree().unwrap_or(0);
            let pi = kernel_pi(bound);
            let lhs = pi.adjoint_x(f)?.mul(&pi.inverse());
            let rhs = BiSymFun::in_y(f, bound)?;
            Ok(lhs.first_difference(&rhs).map(|(l, m, a, b)| format!("coefficient of p{l}(x) p{m}(y): {a} vs {b}")))
        },
    )
}

fn cauchy_sum(degree: usize, term: impl Fn(&Partition) -> Result<BiSymFun>) -> Result<BiSymFun> {
    let mut acc = BiSymFun::zero(degree);
    for l in Partition::all(degree) {
        acc = acc.add(&term(&l)?);
    }
    Ok(acc)
}

/// The degree-`d` part of `exp(sum (1 - t^n)/n p_n(x) p_n(y))` equals
/// `sum_{|l| = d} Q_l(x) P_l(y)`; at `t = 0` the same comparison with
/// `exp(sum p_n(x) p_n(y)/n)` and Schur functions.
pub fn check_hl_cauchy(degree: usize) -> CheckReport {
    run_check("hl_cauchy", vec![("degree", degree.to_string())], |_| {
        let kernel = exp_of_diagonal(degree, |n| RatFun::one_minus(0, n as i32)).bihomogeneous(degree);
        let sum = cauchy_sum(degree, |l| {
            BiSymFun::tensor(&hall_littlewood(l, HlKind::Q, degree), &hall_littlewood(l, HlKind::P, degree), degree)
        })?;
        if let Some((l, m, a, b)) = kernel.first_difference(&sum) {
            return Ok(Some(format!("coefficient of p{l}(x) p{m}(y): {a} vs {b}")));
        }
        let kernel = exp_of_diagonal(degree, |_| RatFun::one()).bihomogeneous(degree);
        let sum = cauchy_sum(degree, |l| {
            let s = schur(l);
            BiSymFun::tensor(&s, &s, degree)
        })?;
        Ok(kernel
            .first_difference(&sum)
            .map(|(l, m, a, b)| format!("at t = 0, coefficient of p{l}(x) p{m}(y): {a} vs {b}")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::Basis;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn kernel_low_degrees() {
        let pi = kernel_pi(2);
        assert!(pi.constant().is_one());
        assert_eq!(pi.coeff(&p(&[1]), &p(&[1])), r("(1-t)/(1-q)"));
        assert_eq!(pi.coeff(&p(&[1, 1]), &p(&[1, 1])), r("((1-t)/(1-q))^2/2"));
        assert_eq!(pi.coeff(&p(&[2]), &p(&[2])), r("(1-t^2)/(2*(1-q^2))"));
    }

    #[test]
    fn lemma_small_cases() {
        for (v, d) in [(&[1][..], 3), (&[2][..], 4)] {
            let f = SymFun::basis_element(Basis::P, &p(v), v.iter().sum());
            let rep = check_kernel_lemma(&f, d);
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn cauchy_small_degrees() {
        for d in 1..=3 {
            let rep = check_hl_cauchy(d);
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
