//! Functions of two alphabets `x` and `y`, stored in the basis
//! `p_l(x) p_m(y)` and truncated at a degree bound.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::Result;
use crate::partitions::Partition;
use crate::rq::RatFun;

use super::ops::adjoint_apply;
use super::transition::convert;
use super::{Basis, SymFun};

/// A truncated element of the tensor square of the ring of symmetric
/// functions, `sum c_{l,m} p_l(x) p_m(y)`.
///
/// Terms are kept when `max(|l|, |m|) <= degree_bound`. Kernels are
/// bihomogeneous, but images of adjoint operators in the `x` slot are not,
/// so the type does not insist on it.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSymFun {
    coeffs: BTreeMap<(Partition, Partition), RatFun>,
    degree_bound: usize,
}

fn concat(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::new(v)
}

impl BiSymFun {
    pub fn zero(degree_bound: usize) -> Self {
        BiSymFun { coeffs: BTreeMap::new(), degree_bound }
    }

    pub fn one(degree_bound: usize) -> Self {
        let mut out = BiSymFun::zero(degree_bound);
        out.add_term(&Partition::empty(), &Partition::empty(), &RatFun::one());
        out
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn coeff(&self, l: &Partition, m: &Partition) -> RatFun {
        self.coeffs.get(&(l.clone(), m.clone())).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Partition, &RatFun)> {
        self.coeffs.iter().map(|((l, m), c)| (l, m, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c p_l(x) p_m(y)`, silently dropping it beyond the bound.
    pub fn add_term(&mut self, l: &Partition, m: &Partition, c: &RatFun) {
        if c.is_zero() || l.weight().max(m.weight()) > self.degree_bound {
            return;
        }
        let key = (l.clone(), m.clone());
        match self.coeffs.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&key);
                }
            }
            None => {
                self.coeffs.insert(key, c.clone());
            }
        }
    }

    /// `f(x) g(y)`.
    pub fn tensor(f: &SymFun, g: &SymFun, degree_bound: usize) -> Result<Self> {
        let fp = convert(f, Basis::P)?;
        let gp = convert(g, Basis::P)?;
        let mut out = BiSymFun::zero(degree_bound);
        for (l, c) in fp.terms() {
            for (m, d) in gp.terms() {
                out.add_term(l, m, &(c * d));
            }
        }
        Ok(out)
    }

    /// `f(y)`, the function placed in the second alphabet.
    pub fn in_y(f: &SymFun, degree_bound: usize) -> Result<Self> {
        BiSymFun::tensor(&SymFun::scalar(Basis::P, RatFun::one(), 0), f, degree_bound)
    }

    pub fn add(&self, other: &BiSymFun) -> BiSymFun {
        let mut out = self.clone();
        out.degree_bound = self.degree_bound.max(other.degree_bound);
        for ((l, m), c) in &other.coeffs {
            out.add_term(l, m, c);
        }
        out
    }

    pub fn sub(&self, other: &BiSymFun) -> BiSymFun {
        self.add(&other.scale(&RatFun::from_int(-1)))
    }

    pub fn scale(&self, k: &RatFun) -> BiSymFun {
        let mut out = BiSymFun::zero(self.degree_bound);
        for ((l, m), c) in &self.coeffs {
            out.add_term(l, m, &(c * k));
        }
        out
    }

    /// Product, truncated at the smaller of the two bounds.
    pub fn mul(&self, other: &BiSymFun) -> BiSymFun {
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = BiSymFun::zero(bound);
        for ((a, b), c) in &self.coeffs {
            for ((x, y), d) in &other.coeffs {
                if (a.weight() + x.weight()).max(b.weight() + y.weight()) <= bound {
                    out.add_term(&concat(a, x), &concat(b, y), &(c * d));
                }
            }
        }
        out
    }

    /// The constant term.
    pub fn constant(&self) -> RatFun {
        self.coeff(&Partition::empty(), &Partition::empty())
    }

    /// `exp(self)` as a truncated series. The constant term must vanish.
    pub fn exp(&self) -> BiSymFun {
        assert!(self.constant().is_zero(), "exp of a series with a constant term");
        let mut out = BiSymFun::one(self.degree_bound);
        let mut power = BiSymFun::one(self.degree_bound);
        for k in 1..=self.degree_bound {
            power = power.mul(self).scale(&RatFun::from_rational(&BigRational::new(1.into(), (k as i64).into())));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        out
    }

    /// The inverse as a truncated series, computed as `sum (1 - self)^k`.
    /// The constant term must be 1.
    pub fn inverse(&self) -> BiSymFun {
        assert!(self.constant().is_one(), "series inverse needs constant term 1");
        let e = BiSymFun::one(self.degree_bound).sub(self);
        let mut out = BiSymFun::one(self.degree_bound);
        let mut power = BiSymFun::one(self.degree_bound);
        for _ in 1..=self.degree_bound {
            power = power.mul(&e);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        out
    }

    /// Applies `f^*` to the `x` alphabet.
    pub fn adjoint_x(&self, f: &SymFun) -> Result<BiSymFun> {
        let mut images: BTreeMap<&Partition, SymFun> = BTreeMap::new();
        let mut out = BiSymFun::zero(self.degree_bound);
        for ((l, m), c) in &self.coeffs {
            if !images.contains_key(l) {
                let pl = SymFun::basis_element(Basis::P, l, l.weight());
                images.insert(l, adjoint_apply(f, &pl)?);
            }
            for (nu, d) in images[l].terms() {
                out.add_term(nu, m, &(c * d));
            }
        }
        Ok(out)
    }

    /// The terms with `|l| = |m| = d`.
    pub fn bihomogeneous(&self, d: usize) -> BiSymFun {
        let mut out = BiSymFun::zero(self.degree_bound);
        for ((l, m), c) in &self.coeffs {
            if l.weight() == d && m.weight() == d {
                out.add_term(l, m, c);
            }
        }
        out
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.coeffs.keys().all(|(l, m)| l.weight() == m.weight())
    }

    /// The first term (in key order) where two elements differ.
    pub fn first_difference(&self, other: &BiSymFun) -> Option<(Partition, Partition, RatFun, RatFun)> {
        let keys: std::collections::BTreeSet<_> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        for (l, m) in keys {
            let a = self.coeff(l, m);
            let b = other.coeff(l, m);
            if a != b {
                return Some((l.clone(), m.clone(), a, b));
            }
        }
        None
    }
}

impl fmt::Debug for BiSymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.coeffs.iter().map(|((l, m), c)| format!("({c})*p{l}(x)*p{m}(y)")).collect();
        write!(f, "{}", parts.join(" + "))
    }
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

    fn log_kernel(bound: usize) -> BiSymFun {
        let mut g = BiSymFun::zero(bound);
        for n in 1..=bound {
            let c = r(&format!("(1-t^{n})/({n}*(1-q^{n}))"));
            g.add_term(&p(&[n]), &p(&[n]), &c);
        }
        g
    }

    #[test]
    fn exponential_low_degrees() {
        let pi = log_kernel(2).exp();
        assert!(pi.constant().is_one());
        assert_eq!(pi.coeff(&p(&[1]), &p(&[1])), r("(1-t)/(1-q)"));
        assert_eq!(pi.coeff(&p(&[1, 1]), &p(&[1, 1])), r("(1-t)^2/(2*(1-q)^2)"));
        assert_eq!(pi.coeff(&p(&[2]), &p(&[2])), r("(1-t^2)/(2*(1-q^2))"));
        assert_eq!(pi.len(), 4);
        assert!(pi.is_bihomogeneous());
    }

    #[test]
    fn inverse_is_exp_of_negative() {
        let g = log_kernel(4);
        let a = g.exp().inverse();
        let b = g.scale(&RatFun::from_int(-1)).exp();
        assert_eq!(a, b);
        assert_eq!(g.exp().mul(&a), BiSymFun::one(4));
    }

    #[test]
    fn lemma_for_p1() {
        let pi = log_kernel(3).exp();
        let p1 = SymFun::basis_element(Basis::P, &p(&[1]), 1);
        let lhs = pi.adjoint_x(&p1).unwrap().mul(&pi.inverse());
        assert_eq!(lhs, BiSymFun::in_y(&p1, 3).unwrap());
    }
}
