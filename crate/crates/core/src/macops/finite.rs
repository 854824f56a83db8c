//! The determinantal operators `D_N(u)` on symmetric polynomials in `N`
//! variables, and their renormalization `A_N(u)`.

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rq::RatFun;
use crate::symfun::{divide_by_vandermonde, expand_x, NSymPoly, XPoly};

use super::ufamily::{pochhammer_tinv, UFamily, UPoly};

/// All permutations of `0..n` with their signs.
pub(crate) fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let s = if inversions % 2 == 0 { 1 } else { -1 };
            (p, s)
        })
        .collect()
}

/// `D_N(u) f` as a polynomial in `u`: coefficient `k` is the symmetric
/// polynomial multiplying `u^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct UPolyOp {
    pub coeffs: Vec<NSymPoly>,
}

/// `D_N(u) f`, by the alternated sum over `S_N` of
/// `prod_i x_i^{N - s(i)} (1 - u t^{1 - s(i)} T_i)`, divided by the
/// Vandermonde determinant.
pub fn apply_dn(f: &NSymPoly, n: usize) -> Result<UPolyOp> {
    if f.n() != n {
        return Err(Error::Precondition(format!("operand has {} variables, operator acts on {n}", f.n())));
    }
    let xf = expand_x(f);
    let perms = permutations(n);
    let mut sums: Vec<XPoly> = vec![XPoly::zero(n); n + 1];
    for subset in 0u32..(1 << n) {
        let in_s = |i: usize| subset & (1 << i) != 0;
        let size = subset.count_ones() as usize;
        // the alternant prod_i x_i^{N-1-p(i)} prod_{i in S} t^{-p(i)}
        let mut g = XPoly::zero(n);
        for (p, s) in &perms {
            let e: Vec<u32> = p.iter().map(|&k| (n - 1 - k) as u32).collect();
            let tpow: i32 = (0..n).filter(|&i| in_s(i)).map(|i| -(p[i] as i32)).sum();
            g.add_term(e, RatFun::monomial(*s, 0, tpow));
        }
        let shifted = xf.map_terms(|e, c| {
            let qpow: u32 = (0..n).filter(|&i| in_s(i)).map(|i| e[i]).sum();
            c * &RatFun::monomial(1, qpow as i32, 0)
        });
        let term = g.mul(&shifted);
        sums[size] = if size % 2 == 0 { sums[size].add(&term) } else { sums[size].sub(&term) };
    }
    let coeffs = sums.iter().map(divide_by_vandermonde).collect::<Result<Vec<_>>>()?;
    Ok(UPolyOp { coeffs })
}

/// The eigenvalue `prod_{i=1}^N (1 - u q^{l_i} t^{1-i})` of `D_N(u)` as a
/// polynomial in `u`.
pub fn dn_eigenvalue(l: &Partition, n: usize) -> UPoly {
    let mut acc = UPoly::constant(RatFun::one());
    for i in 1..=n {
        acc = acc.mul(&UPoly::linear(RatFun::one(), RatFun::monomial(-1, l.part(i) as i32, 1 - i as i32)));
    }
    acc
}

/// `A_N(u) f = (T_1..T_N)^{-1} D_N(u) f / (u; t^{-1})_N` in the basis
/// `1/(u; t^{-1})_k`, `k = 0..N`.
pub fn apply_an(f: &NSymPoly, n: usize) -> Result<UFamily<NSymPoly>> {
    let d = apply_dn(f, n)?;
    // the degree-d component is scaled by q^{-d}
    let scaled: Vec<NSymPoly> = d
        .coeffs
        .iter()
        .map(|g| {
            let mut out = NSymPoly::zero(n);
            for (mu, c) in g.terms() {
                out.add_term(mu, c * &RatFun::monomial(1, -(mu.weight() as i32), 0));
            }
            out
        })
        .collect();
    let value = |u0: &RatFun| {
        let mut acc = NSymPoly::zero(n);
        let mut pow = RatFun::one();
        for g in &scaled {
            acc = acc.add(&g.scale(&pow));
            pow = &pow * u0;
        }
        acc
    };
    // P(u) = sum_k c_k B_k(u), B_k(u) = prod_{m=k}^{N-1} (1 - u t^{-m});
    // B_k(t^j) = 0 for k <= j < N, and B_k(0) = 1
    let basis = |k: usize, u0: &RatFun| {
        let mut acc = RatFun::one();
        for m in k..n {
            acc = &acc * &(&RatFun::one() - &(u0 * &RatFun::monomial(1, 0, -(m as i32))));
        }
        acc
    };
    let mut c: Vec<NSymPoly> = vec![NSymPoly::zero(n); n + 1];
    for j in (0..n).rev() {
        let u0 = RatFun::monomial(1, 0, j as i32);
        let mut rest = value(&u0);
        for (k, ck) in c.iter().enumerate().skip(j + 2) {
            rest = rest.sub(&ck.scale(&basis(k, &u0)));
        }
        c[j + 1] = rest.scale(&basis(j + 1, &u0).inv()?);
    }
    let mut c0 = value(&RatFun::zero());
    for ck in &c[1..] {
        c0 = c0.sub(ck);
    }
    c[0] = c0;
    debug_assert!({
        let u0 = RatFun::from_int(7);
        let direct = value(&u0).scale(&pochhammer_tinv(&u0, n).inv().unwrap());
        UFamily::new(c.clone()).evaluate(&u0).unwrap() == direct
    });
    Ok(UFamily::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    fn msym(n: usize, terms: &[(&[usize], &str)]) -> NSymPoly {
        let mut out = NSymPoly::zero(n);
        for (l, c) in terms {
            out.add_term(&p(l), r(c));
        }
        out
    }

    #[test]
    fn signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert_eq!(perms[0], (vec![0, 1, 2], 1));
    }

    #[test]
    fn one_variable() {
        let f = msym(1, &[(&[3], "1")]);
        let d = apply_dn(&f, 1).unwrap();
        assert_eq!(d.coeffs, vec![f.clone(), f.scale(&r("-q^3"))]);
    }

    #[test]
    fn two_variables() {
        let f = msym(2, &[(&[1], "1")]);
        let d = apply_dn(&f, 2).unwrap();
        assert_eq!(d.coeffs, vec![f.clone(), f.scale(&r("-(q+1/t)")), f.scale(&r("q/t"))]);
        let one = msym(2, &[(&[], "1")]);
        let d = apply_dn(&one, 2).unwrap();
        assert_eq!(d.coeffs, vec![one.clone(), one.scale(&r("-(1+1/t)")), one.scale(&r("1/t"))]);
    }

    #[test]
    fn renormalized() {
        let f = msym(1, &[(&[1], "1")]);
        let a = apply_an(&f, 1).unwrap();
        assert_eq!(a.entries(), &[f.clone(), f.scale(&r("1/q-1"))]);
        for n in 1..=3 {
            let one = msym(n, &[(&[], "1")]);
            let a = apply_an(&one, n).unwrap();
            assert_eq!(a.entries()[0], one);
            assert!(a.entries()[1..].iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn eigenvalue_polynomial() {
        let e = dn_eigenvalue(&p(&[1]), 2);
        assert_eq!(e.coeffs, vec![RatFun::one(), r("-(q+1/t)"), r("q/t")]);
        assert!(e.eval(&r("1/q")).is_zero());
    }
}
