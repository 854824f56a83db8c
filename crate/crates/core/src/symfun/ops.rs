//! Products, the (q,t) scalar product, adjoints of multiplication operators,
//! the derivative in `p_1`, and restriction to finitely many variables.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rq::RatFun;

use super::transition::convert;
use super::xpoly::NSymPoly;
use super::{Basis, SymFun};

fn require_p(f: &SymFun) -> Result<()> {
    if f.basis() != Basis::P {
        return Err(Error::BasisMismatch { expected: "p".into(), found: f.basis().tag().into() });
    }
    Ok(())
}

fn concat(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::new(v)
}

/// Product in the power-sum basis, truncated at `degree_bound`.
pub fn p_multiply(f: &SymFun, g: &SymFun, degree_bound: usize) -> Result<SymFun> {
    require_p(f)?;
    require_p(g)?;
    let mut out = SymFun::zero(Basis::P, degree_bound);
    for (a, c) in f.terms() {
        for (b, d) in g.terms() {
            if a.weight() + b.weight() <= degree_bound {
                out.add_term(&concat(a, b), &(c * d));
            }
        }
    }
    Ok(out)
}

/// `<p_l, p_l> = z_l prod (1 - q^{l_i}) / (1 - t^{l_i})`.
pub fn p_norm(l: &Partition) -> RatFun {
    let mut acc = RatFun::from_int(l.stats().z);
    for &k in l.parts() {
        let k = k as i32;
        acc = &acc * &(&RatFun::one_minus(k, 0) / &RatFun::one_minus(0, k));
    }
    acc
}

/// `prod_i l_i (1 - q^{l_i}) / (1 - t^{l_i})`.
fn derivation_factor(l: &Partition) -> RatFun {
    let mut acc = RatFun::one();
    for &k in l.parts() {
        let k = k as i32;
        acc = &acc * &(&RatFun::one_minus(k, 0) / &RatFun::one_minus(0, k)).mul_int(k as i64);
    }
    acc
}

/// The (q,t) scalar product.
pub fn inner_product(f: &SymFun, g: &SymFun) -> Result<RatFun> {
    let fp = convert(f, Basis::P)?;
    let gp = convert(g, Basis::P)?;
    let mut acc = RatFun::zero();
    for (l, c) in fp.terms() {
        let d = gp.coeff(l);
        if !d.is_zero() {
            acc += &(&(c * &d) * &p_norm(l));
        }
    }
    Ok(acc)
}

fn multiplicities(l: &Partition) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &k in l.parts() {
        *m.entry(k).or_insert(0) += 1;
    }
    m
}

/// `prod_n d^{a_n}/dp_n^{a_n}` applied to `p_mu`: the falling factorials and
/// the remaining partition, or `None` when the result is zero.
fn differentiate(l: &Partition, mu: &Partition) -> Option<(u128, Partition)> {
    let lm = multiplicities(l);
    let mut mm = multiplicities(mu);
    let mut factor: u128 = 1;
    for (&n, &a) in &lm {
        let k = mm.get(&n).copied().unwrap_or(0);
        if a > k {
            return None;
        }
        for j in 0..a {
            factor *= (k - j) as u128;
        }
        mm.insert(n, k - a);
    }
    let rest = mm.iter().flat_map(|(&n, &k)| std::iter::repeat(n).take(k)).collect();
    Some((factor, Partition::new(rest)))
}

/// `f^*` applied to `g`, where `f^*` is adjoint to multiplication by `f` for
/// the (q,t) scalar product. Each `p_n` in `f` becomes
/// `n (1 - q^n)/(1 - t^n) d/dp_n`. The result is in the `p` basis.
pub fn adjoint_apply(f: &SymFun, g: &SymFun) -> Result<SymFun> {
    let fp = convert(f, Basis::P)?;
    let gp = convert(g, Basis::P)?;
    let mut out = SymFun::zero(Basis::P, g.degree_bound());
    for (l, c) in fp.terms() {
        let cs = c * &derivation_factor(l);
        for (mu, d) in gp.terms() {
            if let Some((k, rest)) = differentiate(l, mu) {
                out.add_term(&rest, &(&cs * &(d * &RatFun::from_int(k))));
            }
        }
    }
    Ok(out)
}

/// The derivative `d/dp_1` in the power-sum basis.
pub fn dp1(g: &SymFun) -> Result<SymFun> {
    let gp = convert(g, Basis::P)?;
    let one = Partition::from([1]);
    let mut out = SymFun::zero(Basis::P, g.degree_bound());
    for (mu, d) in gp.terms() {
        if let Some((k, rest)) = differentiate(&one, mu) {
            out.add_term(&rest, &(d * &RatFun::from_int(k)));
        }
    }
    Ok(out)
}

/// The image in `N` variables: the monomial expansion without terms of
/// length greater than `N`.
pub fn restrict(f: &SymFun, n: usize) -> Result<NSymPoly> {
    let fm = convert(f, Basis::M)?;
    let mut out = NSymPoly::zero(n);
    for (l, c) in fm.terms() {
        out.add_term(l, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn pe(v: &[usize], bound: usize) -> SymFun {
        SymFun::basis_element(Basis::P, &p(v), bound)
    }

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(p_multiply(&pe(&[2], 3), &pe(&[1], 3), 3).unwrap(), pe(&[2, 1], 3));
        assert_eq!(p_multiply(&pe(&[1], 2), &pe(&[1], 2), 2).unwrap(), pe(&[1, 1], 2));
        let f = &pe(&[1], 3) + &pe(&[2], 3);
        assert_eq!(p_multiply(&f, &pe(&[1], 3), 2).unwrap(), pe(&[1, 1], 2));
        let m = SymFun::basis_element(Basis::M, &p(&[1]), 2);
        assert!(p_multiply(&m, &pe(&[1], 2), 2).is_err());
    }

    #[test]
    fn scalar_products() {
        assert_eq!(inner_product(&pe(&[2], 2), &pe(&[2], 2)).unwrap(), r("2*(1-q^2)/(1-t^2)"));
        assert!(inner_product(&pe(&[1], 2), &pe(&[2], 2)).unwrap().is_zero());
        assert_eq!(inner_product(&pe(&[1, 1], 2), &pe(&[1, 1], 2)).unwrap(), r("2*(1-q)^2/(1-t)^2"));
    }

    #[test]
    fn adjoints() {
        let got = adjoint_apply(&pe(&[1], 2), &pe(&[1, 1], 2)).unwrap();
        let expect = SymFun::from_terms(Basis::P, 2, [(p(&[1]), r("2*(1-q)/(1-t)"))]);
        assert_eq!(got, expect);
        assert!(adjoint_apply(&pe(&[2], 2), &pe(&[1, 1], 2)).unwrap().is_zero());
    }

    #[test]
    fn derivative_in_p1() {
        assert_eq!(dp1(&pe(&[1, 1], 2)).unwrap(), SymFun::from_terms(Basis::P, 2, [(p(&[1]), RatFun::from_int(2))]));
        assert!(dp1(&pe(&[2], 2)).unwrap().is_zero());
        let f = &pe(&[2, 1, 1], 4) + &pe(&[3, 1], 4);
        let via_adjoint = adjoint_apply(&pe(&[1], 4), &f).unwrap().scale(&r("(1-t)/(1-q)"));
        assert_eq!(dp1(&f).unwrap(), via_adjoint);
    }

    #[test]
    fn restriction() {
        let m111 = SymFun::basis_element(Basis::M, &p(&[1, 1, 1]), 3);
        assert!(restrict(&m111, 2).unwrap().is_zero());
        let p2 = restrict(&pe(&[2], 2), 1).unwrap();
        assert_eq!(p2.len(), 1);
        assert!(p2.coeff(&p(&[2])).is_one());
    }
}
