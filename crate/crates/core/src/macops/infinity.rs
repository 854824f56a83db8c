//! The operators `A^(k)` at infinity and their eigenvalues.

use crate::error::{Error, Result};
use crate::families::{hall_littlewood, HlKind};
use crate::partitions::{Constraints, Partition};
use crate::rq::RatFun;
use crate::symfun::{adjoint_apply, convert, p_multiply, Basis, SymFun};

use super::ufamily::{pochhammer_tinv, solve, UFamily, UPoly, URational};

/// `prod_{i=1}^{l(l)} (q^{-l_i} - u t^{1-i}) / (1 - u t^{1-i})`, the
/// eigenvalue of `A(u)` on `M_l`.
pub fn a_eigen(l: &Partition) -> URational {
    let mut out = URational::one();
    for i in 1..=l.len() {
        let shift = 1 - i as i32;
        out = out.mul(&URational {
            num: UPoly::linear(RatFun::monomial(1, -(l.part(i) as i32), 0), RatFun::monomial(-1, 0, shift)),
            den: UPoly::linear(RatFun::one(), RatFun::monomial(-1, 0, shift)),
        });
    }
    out
}

/// The eigenvalues `e_k(l)` of `A^(k)` on `M_l`, `k = 0..=l(l)`, read off
/// `a_eigen(l) = sum_k e_k / (u; t^{-1})_k` by sampling `u` at integers
/// from 2 upwards and solving the linear system.
pub fn a_k_eigen(l: &Partition) -> Result<UFamily<RatFun>> {
    let len = l.len() + 1;
    let target = a_eigen(l);
    let mut start = 2i64;
    // the system is nonsingular for all but finitely many choices
    for _ in 0..32 {
        let mut rows = Vec::with_capacity(len);
        let mut rhs = Vec::with_capacity(len);
        let mut u = start;
        while rows.len() < len && u < start + 64 {
            let u0 = RatFun::from_int(u);
            u += 1;
            let Ok(value) = target.eval(&u0) else { continue };
            let poch: Vec<RatFun> = (0..len).map(|k| pochhammer_tinv(&u0, k)).collect();
            if poch.iter().any(RatFun::is_zero) {
                continue;
            }
            rows.push(poch.iter().map(|p| p.inv().expect("nonzero")).collect::<Vec<_>>());
            rhs.push(value);
        }
        if rows.len() == len {
            if let Some(e) = solve(rows, rhs) {
                return Ok(UFamily::new(e));
            }
        }
        start = u;
    }
    Err(Error::SingularSampleSystem)
}

/// `A^(k) f = sum_{l(l) = k} q^{-|l|} Q_l P_l^*(f)`, returned in the basis
/// of `f` (in `p` when `f` is in a basis that needs `N`).
pub fn a_k_apply(k: usize, f: &SymFun, degree_bound: usize) -> Result<SymFun> {
    if k == 0 {
        return Err(Error::Precondition("A^(k) needs k >= 1".into()));
    }
    let mut out = SymFun::zero(Basis::P, degree_bound);
    let top = f.max_degree().unwrap_or(0);
    for w in k..=top {
        for l in Partition::enumerate(w, Constraints { exact_length: Some(k), ..Default::default() }) {
            let d = adjoint_apply(&SymFun::basis_element(Basis::HlP, &l, w), f)?;
            if d.is_zero() {
                continue;
            }
            let ql = convert(&hall_littlewood(&l, HlKind::Q, w), Basis::P)?;
            let term = p_multiply(&ql, &d, degree_bound)?;
            out = out.checked_add(&term.scale(&RatFun::monomial(1, -(w as i32), 0)))?;
        }
    }
    convert(&out, f.basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::macdonald_m;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn eigen_rational() {
        assert_eq!(a_eigen(&Partition::empty()).eval(&r("5")).unwrap(), RatFun::one());
        let e = a_eigen(&p(&[1]));
        assert_eq!(e.eval(&r("3")).unwrap(), r("(1/q-3)/(1-3)"));
        let e = a_eigen(&p(&[1, 1]));
        assert_eq!(e.eval(&r("2")).unwrap(), r("(1/q-2)*(1/q-2/t)/((1-2)*(1-2/t))"));
        assert!(e.eval(&r("1")).is_err());
    }

    #[test]
    fn partial_fractions() {
        assert_eq!(a_k_eigen(&Partition::empty()).unwrap().entries(), &[RatFun::one()]);
        assert_eq!(a_k_eigen(&p(&[1])).unwrap().entries(), &[RatFun::one(), r("1/q-1")]);
        let e = a_k_eigen(&p(&[2, 1])).unwrap();
        assert!(e.entries()[0].is_one());
        assert_eq!(e.entries()[1], r("(1/q^2-1)+(1/q-1)*t"));
    }

    #[test]
    fn first_operator() {
        let p1 = SymFun::basis_element(Basis::P, &p(&[1]), 1);
        assert_eq!(a_k_apply(1, &p1, 1).unwrap(), p1.scale(&r("1/q-1")));
        let one = SymFun::scalar(Basis::P, RatFun::one(), 0);
        assert!(a_k_apply(1, &one, 0).unwrap().is_zero());
        let m1 = SymFun::basis_element(Basis::MacM, &p(&[1]), 1);
        assert!(a_k_apply(2, &m1, 1).unwrap().is_zero());
    }

    #[test]
    fn eigenvector_in_degree_two() {
        for l in Partition::all(2) {
            let m = convert(&macdonald_m(&l), Basis::P).unwrap();
            let e = a_k_eigen(&l).unwrap();
            for k in 1..=2 {
                let want = e.entry(k).cloned().unwrap_or_default();
                assert_eq!(a_k_apply(k, &m, 2).unwrap(), m.scale(&want), "{l} {k}");
            }
        }
    }
}
