//! The small amount of ring structure shared by coefficient types.

use std::fmt::Debug;

use crate::rq::{IntPoly2, RatFun};

/// A commutative ring with unit.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(c: i64) -> Self;

    fn mul_int(&self, c: i64) -> Self {
        self.mul(&Self::from_int(c))
    }
}

impl Ring for IntPoly2 {
    fn zero() -> Self {
        IntPoly2::zero()
    }
    fn one() -> Self {
        IntPoly2::one()
    }
    fn is_zero(&self) -> bool {
        IntPoly2::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(c: i64) -> Self {
        IntPoly2::constant(c)
    }
    fn mul_int(&self, c: i64) -> Self {
        self.scale(&c.into())
    }
}

impl Ring for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(c: i64) -> Self {
        RatFun::from_int(c)
    }
    fn mul_int(&self, c: i64) -> Self {
        RatFun::mul_int(self, c)
    }
}
