//! Rational functions of the spectral variable `u`, kept either as a
//! quotient of polynomials in `u` or in the basis `1/(u; t^{-1})_k`.

use crate::error::{Error, Result};
use crate::rq::RatFun;
use crate::symfun::{NSymPoly, SymFun};

/// Values that can be combined linearly over `Q(q,t)`.
pub trait Linear: Clone {
    fn zero_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, k: &RatFun) -> Self;
    fn is_null(&self) -> bool;
}

impl Linear for RatFun {
    fn zero_like(&self) -> Self {
        RatFun::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, k: &RatFun) -> Self {
        self * k
    }
    fn is_null(&self) -> bool {
        self.is_zero()
    }
}

impl Linear for SymFun {
    fn zero_like(&self) -> Self {
        SymFun::zero(self.basis(), self.degree_bound())
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(other).expect("same basis")
    }
    fn times(&self, k: &RatFun) -> Self {
        self.scale(k)
    }
    fn is_null(&self) -> bool {
        self.is_zero()
    }
}

impl Linear for NSymPoly {
    fn zero_like(&self) -> Self {
        NSymPoly::zero(self.n())
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, k: &RatFun) -> Self {
        self.scale(k)
    }
    fn is_null(&self) -> bool {
        self.is_zero()
    }
}

/// `(u; t^{-1})_k = prod_{m=0}^{k-1} (1 - u t^{-m})` at a value of `u`.
pub fn pochhammer_tinv(u: &RatFun, k: usize) -> RatFun {
    let mut acc = RatFun::one();
    for m in 0..k {
        acc = &acc * &(&RatFun::one() - &(u * &RatFun::monomial(1, 0, -(m as i32))));
    }
    acc
}

/// `sum_k c_k / (u; t^{-1})_k` with finitely many coefficients `c_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct UFamily<T> {
    entries: Vec<T>,
}

impl<T: Linear> UFamily<T> {
    pub fn new(entries: Vec<T>) -> Self {
        UFamily { entries }
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// `c_k`, or `None` past the stored entries (where it is zero).
    pub fn entry(&self, k: usize) -> Option<&T> {
        self.entries.get(k)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The value at `u = u0`.
    pub fn evaluate(&self, u0: &RatFun) -> Result<T> {
        let mut acc = self.entries[0].zero_like();
        for (k, c) in self.entries.iter().enumerate() {
            if c.is_null() {
                continue;
            }
            let d = pochhammer_tinv(u0, k);
            if d.is_zero() {
                return Err(Error::PoleAtSample(format!("(u;1/t)_{k} vanishes at u = {u0}")));
            }
            acc = acc.plus(&c.times(&d.inv()?));
        }
        Ok(acc)
    }
}

/// A polynomial in `u` over `Q(q,t)`, coefficients by ascending power.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly {
    pub coeffs: Vec<RatFun>,
}

impl UPoly {
    pub fn constant(c: RatFun) -> Self {
        UPoly { coeffs: vec![c] }
    }

    /// `a + b u`.
    pub fn linear(a: RatFun, b: RatFun) -> Self {
        UPoly { coeffs: vec![a, b] }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        let mut c = vec![RatFun::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        UPoly { coeffs: c }
    }

    pub fn eval(&self, u0: &RatFun) -> RatFun {
        let mut acc = RatFun::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * u0) + c;
        }
        acc
    }
}

/// A rational function of `u` as `num / den`.
#[derive(Clone, Debug, PartialEq)]
pub struct URational {
    pub num: UPoly,
    pub den: UPoly,
}

impl URational {
    pub fn one() -> Self {
        URational { num: UPoly::constant(RatFun::one()), den: UPoly::constant(RatFun::one()) }
    }

    pub fn mul(&self, other: &URational) -> URational {
        URational { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    pub fn scale(&self, k: &RatFun) -> URational {
        URational { num: self.num.mul(&UPoly::constant(k.clone())), den: self.den.clone() }
    }

    /// Value at `u = u0`; fails when the denominator vanishes there.
    pub fn eval(&self, u0: &RatFun) -> Result<RatFun> {
        let d = self.den.eval(u0);
        if d.is_zero() {
            return Err(Error::PoleAtSample(format!("denominator vanishes at u = {u0}")));
        }
        self.num.eval(u0).try_div(&d)
    }
}

/// Solves `a x = b` by Gaussian elimination; `None` when singular.
pub(crate) fn solve(mut a: Vec<Vec<RatFun>>, mut b: Vec<RatFun>) -> Option<Vec<RatFun>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv().ok()?;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let k = &a[r][col] * &inv;
                for c in col..n {
                    let d = &k * &a[col][c];
                    a[r][c] -= &d;
                }
                let d = &k * &b[col];
                b[r] -= &d;
            }
        }
    }
    Some((0..n).map(|i| &b[i] * &a[i][i].inv().unwrap()).collect())
}
