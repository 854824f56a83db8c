//! Exact arithmetic in Z[q,t] and Q(q,t).

pub mod display;
mod gcd;
mod intpoly;
pub mod mode;
mod parse;
mod ratfun;
pub(crate) mod upoly;

pub use gcd::{gcd, lcm};
pub use intpoly::{grlex_cmp, IntPoly2};
pub use parse::Parser;
pub use ratfun::RatFun;
