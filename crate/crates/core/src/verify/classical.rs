//! Checks on the classical families: the Macdonald basis, Green
//! polynomials, specializations and the Hall-Littlewood product rules.

use crate::families::{green_table, hall_littlewood, macdonald_degree, morris_phi, psi_coeff, q_row_series, HlKind};
use crate::partitions::Partition;
use crate::rq::{IntPoly2, RatFun};
use crate::symfun::{convert, dp1, inner_product, p_multiply, transition_matrix, Basis, SymFun};

use super::{run_check, symfun_difference, CheckReport};

/// All `M_l` with `|l| = n`: unit leading coefficient, support on
/// partitions dominated by `l`, and pairwise orthogonality.
pub fn check_macdonald_construction(n: usize) -> CheckReport {
    run_check("macdonald_construction", vec![("degree", n.to_string())], |_| {
        let all = macdonald_degree(n);
        let parts = Partition::all(n);
        for l in &parts {
            let m = &all[l];
            if !m.coeff(l).is_one() {
                return Ok(Some(format!("coefficient of m{l} in M{l} is {}", m.coeff(l))));
            }
            if let Some((mu, _)) = m.terms().find(|(mu, _)| !l.dominates(mu)) {
                return Ok(Some(format!("M{l} has a term on m{mu}")));
            }
        }
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                let ip = inner_product(&all[a], &all[b])?;
                if !ip.is_zero() {
                    return Ok(Some(format!("<M{a}, M{b}> = {ip}")));
                }
            }
        }
        Ok(None)
    })
}

fn poly(c: &IntPoly2) -> RatFun {
    RatFun::from_poly(c.clone())
}

/// Green orthogonality, the expansion of `Q_mu` in power sums, integrality,
/// the monic degree `n_mu` and the character values at `t = 0`. The table
/// holds integer polynomials, so this check needs symbolic coefficients.
pub fn check_green(degree: usize) -> CheckReport {
    run_check("green", vec![("degree", degree.to_string())], |_| {
        let table = green_table(degree)?;
        let parts = &table.partitions;
        let z_t: Vec<RatFun> = parts.iter().map(|l| l.t_factors(None).expect("no N").z_t).collect();
        for (a, mu) in parts.iter().enumerate() {
            for (b, nu) in parts.iter().enumerate().skip(a) {
                let mut acc = RatFun::zero();
                for (k, zl) in z_t.iter().enumerate() {
                    acc += &(&(&poly(&table.entries[k][a]) * &poly(&table.entries[k][b])) / zl);
                }
                let want = if a == b { poly(&mu.t_factors(None)?.b) } else { RatFun::zero() };
                if acc != want {
                    return Ok(Some(format!("orthogonality at ({mu}, {nu}): {acc} vs {want}")));
                }
            }
            let mut q = SymFun::zero(Basis::P, degree);
            for (k, l) in parts.iter().enumerate() {
                q.add_term(l, &(&poly(&table.entries[k][a]) / &z_t[k]));
            }
            let want = convert(&hall_littlewood(mu, HlKind::Q, degree), Basis::P)?;
            if let Some(w) = symfun_difference(&q, &want) {
                return Ok(Some(format!("Q{mu} from the Green table: {w}")));
            }
        }
        // integrality is enforced by green_table; degree and leading term
        for (a, mu) in parts.iter().enumerate() {
            let n_mu = mu.stats().n_stat;
            for (k, l) in parts.iter().enumerate() {
                let x = &table.entries[k][a];
                if x.deg_q() != Some(0) || x.deg_t() != Some(n_mu) {
                    return Ok(Some(format!("X{l}{mu} = {x} does not have t-degree n = {n_mu}")));
                }
                let lead = x.terms().find(|&(_, b, _)| b == n_mu).map(|(_, _, c)| c.clone());
                if lead != Some(1.into()) {
                    return Ok(Some(format!("X{l}{mu} = {x} is not monic")));
                }
            }
        }
        // X(0) against the characters read off p -> s
        let chars = transition_matrix(Basis::P, Basis::S, degree)?;
        let zero = RatFun::zero();
        for (a, mu) in parts.iter().enumerate() {
            for (k, l) in parts.iter().enumerate() {
                let x0 = poly(&table.entries[k][a]).specialize(None, Some(&zero))?;
                let chi = chars.entry(mu, l);
                if x0 != chi {
                    return Ok(Some(format!("X{l}{mu}(0) = {x0}, character value {chi}")));
                }
            }
        }
        Ok(None)
    })
}

/// `M_l` at `q = 0` is `P_l`; `P_l` at `t = 0` is `s_l` and at `t = 1` is
/// `m_l`. Always run with symbolic coefficients.
pub fn check_specialization(l: &Partition) -> CheckReport {
    run_check("specialization", vec![("lambda", l.to_string())], |_| {
        let w = l.weight();
        let zero = RatFun::zero();
        let one = RatFun::one();
        let p = hall_littlewood(l, HlKind::P, w);
        let m0 = macdonald_degree(w)[l].specialize(Some(&zero), None)?;
        if let Some(d) = symfun_difference(&m0, &p) {
            return Ok(Some(format!("M{l} at q = 0 against P{l}: {d}")));
        }
        let s = convert(&SymFun::basis_element(Basis::S, l, w), Basis::M)?;
        if let Some(d) = symfun_difference(&p.specialize(None, Some(&zero))?, &s) {
            return Ok(Some(format!("P{l} at t = 0 against s{l}: {d}")));
        }
        let m = SymFun::basis_element(Basis::M, l, w);
        if let Some(d) = symfun_difference(&p.specialize(None, Some(&one))?, &m) {
            return Ok(Some(format!("P{l} at t = 1 against m{l}: {d}")));
        }
        Ok(None)
    })
}

/// In degree `d`: the closed-form product coefficients against the
/// expansion of `Q_n P_mu`, the derivative coefficients against
/// `dP_l/dp_1`, and `(1 - t) p_1 Q_mu = sum psi Q_l`.
pub fn check_cross_oracle(degree: usize) -> CheckReport {
    run_check("cross_oracle", vec![("degree", degree.to_string())], |_| {
        let qs = q_row_series(degree.max(1));
        for n in 1..=degree {
            for mu in Partition::all(degree - n) {
                let pmu = convert(&hall_littlewood(&mu, HlKind::P, degree), Basis::P)?;
                let prod = convert(&p_multiply(&qs[n - 1], &pmu, degree)?, Basis::HlP)?;
                for l in Partition::all(degree) {
                    let want = poly(&morris_phi(&l, &mu));
                    if prod.coeff(&l) != want {
                        return Ok(Some(format!("phi{l}{mu}: {want}, product gives {}", prod.coeff(&l))));
                    }
                }
            }
        }
        if degree == 0 {
            return Ok(None);
        }
        let p1 = SymFun::basis_element(Basis::P, &Partition::from([1]), 1);
        let one_minus_t = RatFun::one_minus(0, 1);
        for l in Partition::all(degree) {
            let d = convert(&dp1(&hall_littlewood(&l, HlKind::P, degree))?, Basis::HlP)?;
            for mu in Partition::all(degree - 1) {
                let want = poly(&psi_coeff(&l, &mu));
                if d.coeff(&mu) != want {
                    return Ok(Some(format!("psi{l}{mu}: {want}, derivative gives {}", d.coeff(&mu))));
                }
            }
        }
        for mu in Partition::all(degree - 1) {
            let qmu = convert(&hall_littlewood(&mu, HlKind::Q, degree), Basis::P)?;
            let lhs = convert(&p_multiply(&p1, &qmu, degree)?.scale(&one_minus_t), Basis::HlQ)?;
            for l in Partition::all(degree) {
                let want = poly(&psi_coeff(&l, &mu));
                if lhs.coeff(&l) != want {
                    return Ok(Some(format!("(1-t) p1 Q{mu} on Q{l}: {} vs {want}", lhs.coeff(&l))));
                }
            }
        }
        Ok(None)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_degrees() {
        for d in 0..=3 {
            for rep in [check_macdonald_construction(d), check_cross_oracle(d)] {
                assert!(rep.passed(), "{rep:?}");
            }
        }
        for d in 1..=3 {
            let rep = check_green(d);
            assert!(rep.passed(), "{rep:?}");
        }
        for l in Partition::up_to(3) {
            let rep = check_specialization(&l);
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
