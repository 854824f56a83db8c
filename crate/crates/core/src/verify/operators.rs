//! Checks on the operators: eigen-equations in finitely many variables, the
//! formula for `A^(k)`, the step operators and their matrix elements.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::families::macdonald_m;
use crate::macops::{
    a_eigen, a_k_apply, a_k_eigen, apply_dn, dn_eigenvalue, pieri_down_coeff, pieri_up_coeff, step_evaluate,
    step_family, step_series_apply, StepKind,
};
use crate::partitions::Partition;
use crate::rq::RatFun;
use crate::symfun::{convert, dp1, inner_product, p_multiply, restrict, Basis, SymFun};

use super::{run_check, symfun_difference, CheckReport};

/// `D_N(u) M_l = prod_i (1 - u q^{l_i} t^{1-i}) M_l` in `N` variables, as
/// polynomials in `u`.
pub fn check_deigen(n: usize, l: &Partition) -> CheckReport {
    run_check("deigen", vec![("N", n.to_string()), ("lambda", l.to_string())], |_| {
        let f = restrict(&macdonald_m(l), n)?;
        let d = apply_dn(&f, n)?;
        let e = dn_eigenvalue(l, n);
        for (k, (got, c)) in d.coeffs.iter().zip(&e.coeffs).enumerate() {
            let want = f.scale(c);
            if *got != want {
                return Ok(Some(format!("coefficient of u^{k}: {got:?} vs {want:?}")));
            }
        }
        Ok(None)
    })
}

/// `A^(k) M_l = e_k(l) M_l` with `e_k` from the partial fractions of the
/// eigenvalue of `A(u)`; for `k = 1` also `e_1(l) = sum (q^{-l_i} - 1) t^{i-1}`.
pub fn check_theorem_basic(k: usize, l: &Partition) -> CheckReport {
    run_check("theorem", vec![("k", k.to_string()), ("lambda", l.to_string())], |params| {
        let m = macdonald_m(l);
        let e = a_k_eigen(l)?;
        let ek = e.entry(k).cloned().unwrap_or_default();
        params.insert("eigenvalue".into(), ek.to_plain());
        let lhs = a_k_apply(k, &m, l.weight())?;
        if let Some(w) = symfun_difference(&lhs, &m.scale(&ek)) {
            return Ok(Some(w));
        }
        if k == 1 {
            let mut want = RatFun::zero();
            for i in 1..=l.len() {
                want += &(&RatFun::monomial(1, -(l.part(i) as i32), i as i32 - 1) - &RatFun::monomial(1, 0, i as i32 - 1));
            }
            if ek != want {
                return Ok(Some(format!("e_1 = {ek}, closed form {want}")));
            }
        }
        Ok(None)
    })
}

fn eigen_at(l: &Partition, u0: &RatFun) -> Result<RatFun> {
    a_eigen(l).eval(u0)
}

/// At each sample `u0`, `[p_1, A(u0)]_q M_mu = -u0 (1-q)/(1-t) B(u0) M_mu`
/// and `[A(u0), d/dp_1]_q M_mu = -u0 C(u0) M_mu`. The left sides use the
/// eigenvalues of `A(u)` and the Pieri coefficients (themselves compared
/// with `p_1 M_mu` and `dM_mu/dp_1`); the right sides sum the series of
/// `B^(k+1)`, `C^(k+1)` over all `k` that act.
pub fn check_corollary(mu: &Partition, u_samples: &[i64]) -> CheckReport {
    let samples = u_samples.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    run_check("corollary", vec![("mu", mu.to_string()), ("u_samples", samples)], |_| {
        let w = mu.weight();
        let m = macdonald_m(mu);
        let mp = convert(&m, Basis::P)?;
        let p1 = SymFun::basis_element(Basis::P, &Partition::from([1]), 1);
        // the Pieri coefficients against direct expansions
        let up = convert(&p_multiply(&p1, &mp, w + 1)?, Basis::MacM)?;
        let mut pieri_up = SymFun::zero(Basis::MacM, w + 1);
        for l in mu.add_one_box() {
            pieri_up.add_term(&l, &pieri_up_coeff(&l, mu)?);
        }
        if let Some(d) = symfun_difference(&up, &pieri_up) {
            return Ok(Some(format!("p1 M{mu}: {d}")));
        }
        let down = convert(&dp1(&m)?, Basis::MacM)?;
        let mut pieri_down = SymFun::zero(Basis::MacM, w);
        for nu in mu.remove_one_box() {
            pieri_down.add_term(&nu, &pieri_down_coeff(&nu, mu)?);
        }
        if let Some(d) = symfun_difference(&down, &pieri_down) {
            return Ok(Some(format!("dM{mu}/dp1: {d}")));
        }
        let b = step_family(StepKind::B, &m, w + 1)?;
        let c = step_family(StepKind::C, &m, w)?;
        let q = RatFun::q();
        let b_factor = &(&RatFun::one_minus(1, 0) / &RatFun::one_minus(0, 1)) * &RatFun::from_int(-1);
        for &u in u_samples {
            let u0 = RatFun::from_int(u);
            let a_mu = eigen_at(mu, &u0)?;
            let mut lhs = SymFun::zero(Basis::MacM, w + 1);
            for (l, coeff) in pieri_up.terms() {
                let factor = &a_mu - &(&q * &eigen_at(l, &u0)?);
                lhs.add_term(l, &(coeff * &factor));
            }
            let rhs = convert(&b.evaluate(&u0)?, Basis::MacM)?.scale(&(&b_factor * &u0));
            if let Some(d) = symfun_difference(&lhs, &rhs) {
                return Ok(Some(format!("B side at u = {u}: {d}")));
            }
            let mut lhs = SymFun::zero(Basis::MacM, w);
            for (nu, coeff) in pieri_down.terms() {
                let factor = &eigen_at(nu, &u0)? - &(&q * &a_mu);
                lhs.add_term(nu, &(coeff * &factor));
            }
            let rhs = convert(&c.evaluate(&u0)?, Basis::MacM)?.scale(&-&u0);
            if let Some(d) = symfun_difference(&lhs, &rhs) {
                return Ok(Some(format!("C side at u = {u}: {d}")));
            }
        }
        Ok(None)
    })
}

/// A random homogeneous element of degree `d` in the power-sum basis with
/// small integer coefficients.
pub fn random_homogeneous(rng: &mut impl Rng, d: usize) -> SymFun {
    let mut f = SymFun::zero(Basis::P, d);
    for l in Partition::all(d) {
        f.add_term(&l, &RatFun::from_int(rng.gen_range(-3i64..=3)));
    }
    f
}

/// `<B^(k) f, g> = <f, C^(k) g>` for random `f` of degree `d` and `g` of
/// degree `d + 1`, for `k = 1..=max_k`.
pub fn check_adjoint_pairing(seed: u64, d: usize, max_k: usize) -> CheckReport {
    run_check(
        "adjoint_pairing",
        vec![("seed", seed.to_string()), ("degree", d.to_string()), ("max_k", max_k.to_string())],
        |_| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_homogeneous(&mut rng, d);
            let g = random_homogeneous(&mut rng, d + 1);
            for k in 1..=max_k {
                let bf = step_series_apply(StepKind::B, k - 1, &f, d + 1)?;
                let cg = step_series_apply(StepKind::C, k - 1, &g, d + 1)?;
                let lhs = inner_product(&bf, &g)?;
                let rhs = inner_product(&f, &cg)?;
                if lhs != rhs {
                    return Ok(Some(format!("k = {k}, f = {f}, g = {g}: {lhs} vs {rhs}")));
                }
            }
            Ok(None)
        },
    )
}

/// At `u0 = q^{-l_i} t^{i-1}` the full series `B(u0) M_mu` (kind B) or
/// `C(u0) M_l` (kind C), `mu` being `l` with row `i` shortened, must be the
/// directly evaluated matrix coefficient times the single function `M_l`
/// (resp. `M_mu`). The ratio to the closed-form product is recorded.
pub fn check_step(kind: StepKind, l: &Partition, i: usize) -> CheckReport {
    run_check(
        "step",
        vec![("kind", kind.to_string()), ("lambda", l.to_string()), ("i", i.to_string())],
        |params| {
            let sv = step_evaluate(kind, l, i)?;
            params.insert("point".into(), format!("q^{} t^{}", sv.point.0, sv.point.1));
            params.insert("coeff".into(), sv.coeff.to_plain());
            params.insert("ratio_to_closed_form".into(), sv.ratio.to_plain());
            let u0 = sv.point_value();
            let (source, target) = match kind {
                StepKind::B => (&sv.partner, l),
                StepKind::C => (l, &sv.partner),
            };
            let f = macdonald_m(source);
            let bound = target.weight();
            let value = convert(&step_family(kind, &f, bound)?.evaluate(&u0)?, Basis::MacM)?;
            let want = SymFun::basis_element(Basis::MacM, target, bound).scale(&sv.coeff);
            Ok(symfun_difference(&value, &want).map(|d| format!("{kind}(u0) M{source}: {d}")))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    #[test]
    fn spec_examples() {
        for (n, l) in [(2, p(&[1])), (2, p(&[2])), (3, p(&[1, 1]))] {
            let rep = check_deigen(n, &l);
            assert!(rep.passed(), "{rep:?}");
        }
        for (k, l) in [(1, p(&[1])), (2, p(&[1])), (2, p(&[1, 1]))] {
            let rep = check_theorem_basic(k, &l);
            assert!(rep.passed(), "{rep:?}");
        }
        assert_eq!(check_theorem_basic(1, &p(&[1])).parameters["eigenvalue"], "(1-q)/q");
        for mu in [Partition::empty(), p(&[1])] {
            let rep = check_corollary(&mu, &[2, 3]);
            assert!(rep.passed(), "{rep:?}");
        }
        let rep = check_adjoint_pairing(7, 2, 3);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn one_box_steps() {
        let rep = check_step(StepKind::B, &p(&[1]), 1);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.parameters["ratio_to_closed_form"], "q");
        let rep = check_step(StepKind::C, &p(&[2, 1]), 2);
        assert!(rep.passed(), "{rep:?}");
        // the other one-box neighbours of mu survive at this point
        let rep = check_step(StepKind::B, &p(&[2]), 1);
        assert!(!rep.passed());
        let w = rep.witness.unwrap();
        assert!(w.contains("M(1,1)"), "{w}");
    }
}
