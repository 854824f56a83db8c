use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::gcd;
use super::intpoly::IntPoly2;
use super::mode;
use crate::error::{Error, Result};

/// An element of Q(q,t), stored as a reduced fraction of two polynomials in
/// Z[q,t].
///
/// The representation is canonical: numerator and denominator are coprime,
/// the denominator has a positive leading coefficient in graded lexicographic
/// order (`q > t`), and zero is `0/1`. Structural equality is therefore
/// equality in the field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: IntPoly2,
    den: IntPoly2,
}

impl RatFun {
    pub fn zero() -> Self {
        Self::from_reduced(IntPoly2::zero(), IntPoly2::one())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_reduced(IntPoly2::constant(c), IntPoly2::one())
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_reduced(
            IntPoly2::constant(r.numer().clone()),
            IntPoly2::constant(r.denom().clone()),
        )
    }

    /// The variable `q`, or its value in numeric mode.
    pub fn q() -> Self {
        Self::from_poly(IntPoly2::q())
    }

    /// The variable `t`, or its value in numeric mode.
    pub fn t() -> Self {
        Self::from_poly(IntPoly2::t())
    }

    /// `c q^a t^b` with integer exponents of either sign.
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        &Self::from_int(c) * &(&Self::q().pow(a) * &Self::t().pow(b))
    }

    /// `1 - c q^a t^b`, the building block of almost every coefficient.
    pub fn one_minus(a: i32, b: i32) -> Self {
        &Self::one() - &Self::monomial(1, a, b)
    }

    pub fn from_poly(p: IntPoly2) -> Self {
        if let Some(v) = mode::eval_at_point(&p) {
            return Self::from_rational(&v);
        }
        Self::from_reduced(p, IntPoly2::one())
    }

    /// Normalizes `num / den`.
    pub fn new(num: IntPoly2, den: IntPoly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if mode::is_numeric() {
            let n = mode::eval_at_point(&num).unwrap();
            let d = mode::eval_at_point(&den).unwrap();
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Self::from_rational(&(n / d)));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly2, den: IntPoly2) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.divexact(&g).unwrap(), den.divexact(&g).unwrap())
        };
        Self::signed(num, den)
    }

    fn signed(num: IntPoly2, den: IntPoly2) -> Self {
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            Self { num: -num, den: -den }
        } else {
            Self { num, den }
        }
    }

    fn from_reduced(num: IntPoly2, den: IntPoly2) -> Self {
        Self { num, den }
    }

    pub fn num(&self) -> &IntPoly2 {
        &self.num
    }

    pub fn den(&self) -> &IntPoly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value when `self` is a rational constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    /// The value when `self` is a polynomial.
    pub fn as_poly(&self) -> Option<&IntPoly2> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return Self::zero();
        }
        self * &Self::from_int(k)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::signed(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: i32) -> Self {
        if n < 0 {
            return self
                .inv()
                .expect("negative power of zero")
                .pow(-n);
        }
        let n = n as u32;
        Self::from_reduced(self.num.pow(n), self.den.pow(n))
    }

    /// Substitutes the given values for `q` and/or `t`; unbound variables stay
    /// symbolic.
    pub fn specialize(&self, q: Option<&RatFun>, t: Option<&RatFun>) -> Result<Self> {
        let qv = q.cloned().unwrap_or_else(|| Self::from_reduced(IntPoly2::q(), IntPoly2::one()));
        let tv = t.cloned().unwrap_or_else(|| Self::from_reduced(IntPoly2::t(), IntPoly2::one()));
        let den = substitute(&self.den, &qv, &tv);
        if den.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        let num = substitute(&self.num, &qv, &tv);
        num.try_div(&den)
    }

    /// Convenience form of [`specialize`](Self::specialize) with integer values.
    pub fn specialize_int(&self, q: Option<i64>, t: Option<i64>) -> Result<Self> {
        let q = q.map(Self::from_int);
        let t = t.map(Self::from_int);
        self.specialize(q.as_ref(), t.as_ref())
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0, t0);
        if d.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        Ok(self.num.eval(q0, t0) / d)
    }
}

fn substitute(p: &IntPoly2, q: &RatFun, t: &RatFun) -> RatFun {
    let mut acc = RatFun::zero();
    for row in p.rows().iter().rev() {
        let mut inner = RatFun::zero();
        for c in row.iter().rev() {
            inner = &(&inner * t) + &RatFun::from_int(c.clone());
        }
        acc = &(&acc * q) + &inner;
    }
    acc
}

fn rational_fast(a: &RatFun, b: &RatFun, f: impl Fn(BigRational, BigRational) -> BigRational) -> Option<RatFun> {
    let x = a.as_rational()?;
    let y = b.as_rational()?;
    Some(RatFun::from_rational(&f(x, y)))
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if let Some(r) = rational_fast(self, rhs, |x, y| x + y) {
            return r;
        }
        let (a, b, c, d) = (&self.num, &self.den, &rhs.num, &rhs.den);
        if b == d {
            return RatFun::reduce(a + c, b.clone());
        }
        if b.is_one() {
            return RatFun::from_reduced(&(a * d) + c, d.clone());
        }
        if d.is_one() {
            return RatFun::from_reduced(a + &(c * b), b.clone());
        }
        let g = gcd(b, d);
        if g.is_one() {
            let num = &(a * d) + &(c * b);
            // gcd(num, b d) = 1 since gcd(a, b) = gcd(c, d) = gcd(b, d) = 1
            return RatFun::signed(num, b * d);
        }
        let d1 = d.divexact(&g).unwrap();
        let b1 = b.divexact(&g).unwrap();
        let num = &(a * &d1) + &(c * &b1);
        if num.is_zero() {
            return RatFun::zero();
        }
        let den = b * &d1;
        let g2 = gcd(&num, &g);
        if g2.is_one() {
            RatFun::signed(num, den)
        } else {
            RatFun::signed(num.divexact(&g2).unwrap(), den.divexact(&g2).unwrap())
        }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if let Some(r) = rational_fast(self, rhs, |x, y| x * y) {
            return r;
        }
        let cancel = |x: &IntPoly2, y: &IntPoly2| -> (IntPoly2, IntPoly2) {
            if y.is_one() || x.is_one() {
                return (x.clone(), y.clone());
            }
            let g = gcd(x, y);
            if g.is_one() {
                (x.clone(), y.clone())
            } else {
                (x.divexact(&g).unwrap(), y.divexact(&g).unwrap())
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RatFun::signed(&a * &c, &b * &d)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun::from_reduced(-&self.num, self.den.clone())
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    /// Panics on division by zero; see [`RatFun::try_div`].
    fn div(self, rhs: &RatFun) -> RatFun {
        self.try_div(rhs).expect("division by zero in Q(q,t)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun::from_reduced(-self.num, self.den)
    }
}

impl AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, rhs: &RatFun) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFun> for RatFun {
    fn sub_assign(&mut self, rhs: &RatFun) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFun> for RatFun {
    fn mul_assign(&mut self, rhs: &RatFun) {
        *self = &*self * rhs;
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> Self {
        RatFun::from_int(c)
    }
}

impl From<IntPoly2> for RatFun {
    fn from(p: IntPoly2) -> Self {
        RatFun::from_poly(p)
    }
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl RatFun {
    /// Factored text such as `(1+q)*(1-t)/(1-q*t)`.
    pub fn to_plain(&self) -> String {
        super::display::plain(self)
    }
}

impl fmt::Display for RatFun {
    /// Canonical text: `(num)` or `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(r("1-t^2").try_div(&r("1-t")).unwrap(), r("1+t"));
    }

    #[test]
    fn common_denominator() {
        assert_eq!(&r("(1-q)/(1-t)") + &r("(q-q^2)/(1-t)"), r("(1-q^2)/(1-t)"));
    }

    #[test]
    fn inverse_pair() {
        assert!((&r("(1-t)/(1-q*t)") * &r("(1-q*t)/(1-t)")).is_one());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(RatFun::one().try_div(&RatFun::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalize_examples() {
        let x = RatFun::new(r("1-t^2").num().clone(), r("(1-t)*(1-q*t)").num().clone()).unwrap();
        assert_eq!(x, r("(1+t)/(1-q*t)"));
        let y = RatFun::new(IntPoly2::monomial(-1, 1, 0), IntPoly2::constant(-1)).unwrap();
        assert_eq!(y.to_string(), "(q)");
        let z = RatFun::new(IntPoly2::zero(), r("1-t").num().clone()).unwrap();
        assert_eq!(z.to_string(), "(0)");
        assert_eq!(RatFun::new(IntPoly2::one(), IntPoly2::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn denominator_sign_is_positive_under_grlex() {
        let x = r("(1+t)/(1-q*t)");
        assert_eq!(x.den().leading_coeff().map(|c| c.is_positive()), Some(true));
        assert_eq!(x.to_string(), "(-1-t)/(-1+q*t)");
    }

    #[test]
    fn specializations() {
        let x = r("(1+q)*(1-t)/(1-q*t)");
        assert_eq!(x.specialize_int(Some(0), None).unwrap(), r("1-t"));
        assert!(x.specialize_int(None, Some(1)).unwrap().is_zero());
        assert_eq!(
            r("(1-q)/(1-t)").specialize_int(None, Some(1)),
            Err(Error::PoleAtSpecialization)
        );
    }

    #[test]
    fn format_canonical_order() {
        assert_eq!(r("q^2-1").to_string(), "(-1+q^2)");
    }

    #[test]
    fn numeric_mode_constructors() {
        let (q0, t0) = mode::sample_point(11);
        let v = mode::with_point(q0.clone(), t0.clone(), || RatFun::one_minus(1, 1));
        let expect = BigRational::one() - &q0 * &t0;
        assert_eq!(v.as_rational(), Some(expect));
    }
}
