//! Identities for polynomials in finitely many variables: the alternants
//! `F_{mu,n}`, the combinatorial identity they satisfy, the decomposition
//! of `Q_l` along one variable, and the finite-`N` symbol of `A_N(u)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::{hl_alternant, hl_alternant_int, morris_phi, q_row_series};
use crate::macops::{permutations, pochhammer_tinv};
use crate::partitions::{v_factor, Partition};
use crate::rq::{IntPoly2, RatFun};
use crate::symfun::{alternate, convert, divide_by_vandermonde, expand_x, p_multiply, Basis, NSymPoly, SymFun, XPoly};

use super::{run_check, CheckReport};

type ZPoly = XPoly<IntPoly2>;

fn one_minus_t_pow(k: usize) -> IntPoly2 {
    IntPoly2::from_terms([(0, 0, 1), (0, k, -1)])
}

fn b_factor(mu: &Partition) -> IntPoly2 {
    mu.t_factors(None).expect("no N").b
}

/// The alternated sum over `S_N` of
/// `x_1^{mu_1} .. x_{N-1}^{mu_{N-1}} x_N^{N-1+n} prod_{i<j<N} (x_i - t x_j)`.
pub fn alternant_f(mu: &Partition, n: usize, big_n: usize) -> Result<ZPoly> {
    if big_n == 0 || mu.len() >= big_n {
        return Err(Error::LengthExceedsN { partition: mu.clone(), n: big_n.saturating_sub(1) });
    }
    let mut e = vec![0u32; big_n];
    for (i, slot) in e.iter_mut().enumerate().take(big_n - 1) {
        *slot = mu.part(i + 1) as u32;
    }
    e[big_n - 1] = (big_n - 1 + n) as u32;
    let mut seed = XPoly::monomial(e, IntPoly2::one());
    for i in 0..big_n - 1 {
        for j in i + 1..big_n - 1 {
            let mut f = XPoly::variable(big_n, i);
            f = f.sub(&XPoly::variable(big_n, j).scale(&IntPoly2::t()));
            seed = seed.mul(&f);
        }
    }
    Ok(alternate(&seed).to_xpoly())
}

/// A polynomial in `N - 1` variables placed on all variables but `x_i`
/// (0-based `i`).
fn skip_variable<C: crate::ring::Ring>(p: &XPoly<C>, big_n: usize, i: usize) -> XPoly<C> {
    let mut out = XPoly::zero(big_n);
    for (e, c) in p.terms() {
        let mut f = e.clone();
        f.insert(i, 0);
        out.add_term(f, c.clone());
    }
    out
}

/// `Q_mu(x_1 .. ^x_i .. x_N)`, 0-based `i`.
fn q_minor(mu: &Partition, big_n: usize, i: usize) -> Result<ZPoly> {
    if big_n == 1 {
        let c = if mu.is_empty() { IntPoly2::one() } else { IntPoly2::zero() };
        return Ok(XPoly::constant(1, c));
    }
    let q = expand_x(&hl_alternant_int(mu, big_n - 1)?).scale(&b_factor(mu));
    Ok(skip_variable(&q, big_n, i))
}

fn vandermonde_minor(big_n: usize, i: usize) -> ZPoly {
    if big_n == 1 {
        return XPoly::one(1);
    }
    skip_variable(&XPoly::vandermonde(big_n - 1), big_n, i)
}

fn x_power(big_n: usize, i: usize, k: usize) -> ZPoly {
    let mut e = vec![0u32; big_n];
    e[i] = k as u32;
    XPoly::monomial(e, IntPoly2::one())
}

/// `sum_i (-1)^{i+1} x_i^{N-1+n} Delta^(i) Q_mu^(i)`.
pub fn isum(mu: &Partition, n: usize, big_n: usize) -> Result<ZPoly> {
    if mu.len() >= big_n {
        return Err(Error::LengthExceedsN { partition: mu.clone(), n: big_n.saturating_sub(1) });
    }
    let mut acc = XPoly::zero(big_n);
    for i in 0..big_n {
        let term = x_power(big_n, i, big_n - 1 + n).mul(&vandermonde_minor(big_n, i)).mul(&q_minor(mu, big_n, i)?);
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

fn first_term(p: &ZPoly) -> Option<String> {
    p.terms().next().map(|(e, c)| format!("nonzero coefficient {c} at exponent {e:?}"))
}

/// `(-1)^{N+1} F_{mu,n} b_mu / v_mu = isum(mu, n)` with `v_mu` taken in the
/// `N - 1` variables carrying `Q_mu^(i)`. Also records whether the factor
/// `(1-t)^N / prod_{j=1}^{N-l(mu)} (1-t^j)` gives the same identity.
pub fn check_defmun(mu: &Partition, n: usize, big_n: usize) -> CheckReport {
    run_check(
        "defmun",
        vec![("mu", mu.to_string()), ("n", n.to_string()), ("N", big_n.to_string())],
        |params| {
            let f = alternant_f(mu, n, big_n)?;
            let f = if big_n % 2 == 1 { f } else { f.neg() };
            let s = isum(mu, n, big_n)?;
            let mut v = v_factor(big_n - 1 - mu.len());
            for (_, k) in mu.multiplicities() {
                v = &v * &v_factor(k);
            }
            // b/v = (1-t)^{N-1} / prod_{j <= N-1-l} (1-t^j); the other form
            // has one more factor of each kind
            let mut num = IntPoly2::one();
            for _ in 0..big_n {
                num = &num * &one_minus_t_pow(1);
            }
            let mut den = IntPoly2::one();
            for j in 1..=big_n - mu.len() {
                den = &den * &one_minus_t_pow(j);
            }
            let alt = f.scale(&num) == s.scale(&den);
            params.insert("displayed_factor_matches".into(), alt.to_string());
            Ok(first_term(&f.scale(&b_factor(mu)).sub(&s.scale(&v))))
        },
    )
}

/// Partitions `mu != l` with `l(mu) = l(l)` and `phi_{l mu} != 0`, with the
/// coefficient and `n = |l| - |mu|`.
fn strip_predecessors(l: &Partition) -> Vec<(Partition, IntPoly2, usize)> {
    let mut out = Vec::new();
    for w in l.len()..l.weight() {
        for mu in Partition::all(w) {
            if mu.len() != l.len() {
                continue;
            }
            let phi = morris_phi(l, &mu);
            if !phi.is_zero() {
                out.push((mu, phi, l.weight() - w));
            }
        }
    }
    out
}

/// For `0 < l(l) < N`: `(1 - t^{l(l)}) F_{l,0} + sum_mu phi_{l mu} F_{mu,n} = 0`
/// and the same combination of the sums `isum` vanishes.
pub fn check_proposition(big_n: usize, l: &Partition) -> CheckReport {
    run_check("proposition", vec![("N", big_n.to_string()), ("lambda", l.to_string())], |params| {
        if l.is_empty() || l.len() >= big_n {
            return Err(Error::Precondition(format!("need 0 < l({l}) < N = {big_n}")));
        }
        let preds = strip_predecessors(l);
        params.insert("terms".into(), (preds.len() + 1).to_string());
        let lead = one_minus_t_pow(l.len());
        let mut f = alternant_f(l, 0, big_n)?.scale(&lead);
        let mut s = isum(l, 0, big_n)?.scale(&lead);
        for (mu, phi, n) in &preds {
            f = f.add(&alternant_f(mu, *n, big_n)?.scale(phi));
            s = s.add(&isum(mu, *n, big_n)?.scale(phi));
        }
        if let Some(w) = first_term(&f) {
            return Ok(Some(format!("alternant form: {w}")));
        }
        Ok(first_term(&s).map(|w| format!("sum over i form: {w}")))
    })
}

/// Every `F_{mu,n}` entering the identity for `l`, including `mu = l`,
/// expands in Schur functions `s_nu` with `nu < l` strictly.
pub fn check_schur_support(big_n: usize, l: &Partition) -> CheckReport {
    run_check("schur_support", vec![("N", big_n.to_string()), ("lambda", l.to_string())], |_| {
        let mut all = vec![(l.clone(), IntPoly2::one(), 0)];
        all.extend(strip_predecessors(l));
        for (mu, _, n) in all {
            let f = alternant_f(&mu, n, big_n)?;
            let a = crate::symfun::Alternant::from_xpoly(&f)?;
            for nu in a.schur_expansion().keys() {
                if nu == l || !l.dominates(nu) {
                    return Ok(Some(format!("F({mu}, {n}) has a term s{nu}")));
                }
            }
        }
        Ok(None)
    })
}

/// `Q_l(x_1..x_N) = sum_mu phi_{l mu} x_i^n Q_mu(x_1..^x_i..x_N)` for the
/// 1-based index `i`.
pub fn check_decomposition(l: &Partition, big_n: usize, i: usize) -> CheckReport {
    run_check(
        "decomposition",
        vec![("lambda", l.to_string()), ("N", big_n.to_string()), ("i", i.to_string())],
        |_| {
            if l.len() > big_n || i == 0 || i > big_n {
                return Err(Error::Precondition(format!("need l({l}) <= N = {big_n} and 1 <= i <= N")));
            }
            let lhs = expand_x(&hl_alternant_int(l, big_n)?).scale(&b_factor(l));
            let mut rhs = XPoly::zero(big_n);
            for w in 0..=l.weight() {
                for mu in Partition::all(w) {
                    if mu.len() >= big_n {
                        continue;
                    }
                    let phi = morris_phi(l, &mu);
                    if phi.is_zero() {
                        continue;
                    }
                    let term = x_power(big_n, i - 1, l.weight() - w).mul(&q_minor(&mu, big_n, i - 1)?);
                    rhs = rhs.add(&term.scale(&phi));
                }
            }
            Ok(first_term(&lhs.sub(&rhs)))
        },
    )
}

fn distinct_arrangements(v: &[u32]) -> Vec<Vec<u32>> {
    let set: BTreeSet<Vec<u32>> = permutations(v.len()).into_iter().map(|(p, _)| p.iter().map(|&k| v[k]).collect()).collect();
    set.into_iter().collect()
}

/// For `N` variables and bidegrees up to `degree_bound`, at each sample
/// `u0`: the determinant `det[x_i^{N-j} (G(x_i) - u0 t^{1-j})]` with
/// `G(x) = 1 + sum_n Q_n(y) x^n`, divided by the Vandermonde determinant and
/// by `(u0; t^{-1})_N`, equals `sum_{l(l) <= N} Q_l(x) P_l(y) / (u0; t^{-1})_{l(l)}`.
/// Both sides are compared coefficient by coefficient in `P_l(y)`.
pub fn check_finite_symbol(big_n: usize, degree_bound: usize, u_samples: &[i64]) -> CheckReport {
    let samples = u_samples.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    run_check(
        "finite_symbol",
        vec![("N", big_n.to_string()), ("degree_bound", degree_bound.to_string()), ("u_samples", samples)],
        |_| {
            if big_n == 0 {
                return Err(Error::Precondition("N must be positive".into()));
            }
            let qs = q_row_series(degree_bound.max(1));
            let perms = permutations(big_n);
            // products prod_j Q_{nu_j}(y) in the P basis
            let mut shapes: Vec<(Partition, SymFun)> = Vec::new();
            for w in 0..=degree_bound {
                for nu in Partition::all(w) {
                    if nu.len() > big_n {
                        continue;
                    }
                    let mut prod = SymFun::scalar(Basis::P, RatFun::one(), degree_bound);
                    for &k in nu.parts() {
                        prod = p_multiply(&prod, &qs[k - 1], degree_bound)?;
                    }
                    shapes.push((nu, convert(&prod, Basis::HlP)?));
                }
            }
            let targets: Vec<Partition> = Partition::up_to(degree_bound);
            for &u in u_samples {
                let u0 = RatFun::from_int(u);
                let full = pochhammer_tinv(&u0, big_n);
                if full.is_zero() {
                    return Err(Error::PoleAtSample(u.to_string()));
                }
                let mut lhs: Vec<NSymPoly> = vec![NSymPoly::zero(big_n); targets.len()];
                for (nu, ypart) in &shapes {
                    let mut padded: Vec<u32> = nu.parts().iter().map(|&k| k as u32).collect();
                    padded.resize(big_n, 0);
                    let mut det = XPoly::zero(big_n);
                    for n in distinct_arrangements(&padded) {
                        for (p, s) in &perms {
                            let e: Vec<u32> = (0..big_n).map(|i| (big_n - 1 - p[i]) as u32 + n[i]).collect();
                            let mut c = RatFun::from_int(*s);
                            for i in (0..big_n).filter(|&i| n[i] == 0) {
                                c = &c * &(&RatFun::one() - &(&u0 * &RatFun::monomial(1, 0, -(p[i] as i32))));
                            }
                            det.add_term(e, c);
                        }
                    }
                    let xpart = divide_by_vandermonde(&det)?.scale(&full.inv()?);
                    for (k, l) in targets.iter().enumerate() {
                        let c = ypart.coeff(l);
                        if !c.is_zero() {
                            lhs[k] = lhs[k].add(&xpart.scale(&c));
                        }
                    }
                }
                for (k, l) in targets.iter().enumerate() {
                    let want = if l.len() <= big_n {
                        let b = RatFun::from_poly(b_factor(l));
                        hl_alternant(l, big_n)?.scale(&(&b * &pochhammer_tinv(&u0, l.len()).inv()?))
                    } else {
                        NSymPoly::zero(big_n)
                    };
                    if lhs[k] != want {
                        return Ok(Some(format!("u = {u}, coefficient of P{l}(y): {:?} vs {want:?}", lhs[k])));
                    }
                }
            }
            Ok(None)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hall_littlewood, HlKind};

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    #[test]
    fn alternant_examples() {
        // F = x2 - x1 for mu empty, n = 0, N = 2
        let f = alternant_f(&Partition::empty(), 0, 2).unwrap();
        let want = XPoly::variable(2, 1).sub(&XPoly::variable(2, 0));
        assert_eq!(f, want);
        assert!(alternant_f(&p(&[1]), 0, 2).unwrap().is_zero());
        assert!(alternant_f(&p(&[1, 1]), 0, 2).is_err());
        for big_n in 1..=4 {
            for w in 0..=3 {
                for mu in Partition::all(w).into_iter().filter(|m| m.len() < big_n) {
                    for n in 0..=2 {
                        let f = alternant_f(&mu, n, big_n).unwrap();
                        assert!(divide_by_vandermonde(&f).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn small_identities() {
        for big_n in 2..=3 {
            for l in Partition::up_to(3).into_iter().filter(|l| !l.is_empty() && l.len() < big_n) {
                for rep in [check_proposition(big_n, &l), check_schur_support(big_n, &l)] {
                    assert!(rep.passed(), "{rep:?}");
                }
            }
        }
        for (l, n, i) in [(p(&[1]), 2, 1), (p(&[2]), 2, 2), (Partition::empty(), 2, 1), (p(&[2, 1]), 3, 2)] {
            let rep = check_decomposition(&l, n, i);
            assert!(rep.passed(), "{rep:?}");
        }
        let rep = check_defmun(&p(&[1]), 1, 3);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.parameters["displayed_factor_matches"], "false");
    }

    #[test]
    fn symbol_small() {
        for (n, d, u) in [(1, 2, 2), (2, 2, 3)] {
            let rep = check_finite_symbol(n, d, &[u]);
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn q_stable_lift_matches_alternant() {
        let l = p(&[2, 1]);
        let q = hall_littlewood(&l, HlKind::Q, 3);
        let r = crate::symfun::restrict(&q, 3).unwrap();
        let b = RatFun::from_poly(b_factor(&l));
        assert_eq!(r, hl_alternant(&l, 3).unwrap().scale(&b));
    }
}
