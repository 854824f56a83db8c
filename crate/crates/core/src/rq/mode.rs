//! Numeric evaluation mode.
//!
//! Inside [`with_point`], the constructors [`RatFun::q`](super::RatFun::q),
//! [`RatFun::t`](super::RatFun::t) and every conversion from [`IntPoly2`]
//! produce rational constants evaluated at a fixed point `(q0, t0)`. All
//! arithmetic then runs over Q, which is much faster than working in Q(q,t).
//! Identities that hold in Q(q,t) hold at the point; the converse holds for
//! all but finitely many points, so callers sample a few independent ones.
//!
//! The setting is per thread.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::intpoly::IntPoly2;

thread_local! {
    static POINT: RefCell<Option<(BigRational, BigRational)>> = const { RefCell::new(None) };
}

/// Runs `f` with `q` and `t` bound to the given rational values.
pub fn with_point<R>(q0: BigRational, t0: BigRational, f: impl FnOnce() -> R) -> R {
    struct Restore(Option<(BigRational, BigRational)>);
    impl Drop for Restore {
        fn drop(&mut self) {
            let prev = self.0.take();
            POINT.with(|p| *p.borrow_mut() = prev);
        }
    }
    let prev = POINT.with(|p| p.borrow_mut().replace((q0, t0)));
    let _restore = Restore(prev);
    f()
}

/// The active evaluation point, if any.
pub fn current_point() -> Option<(BigRational, BigRational)> {
    POINT.with(|p| p.borrow().clone())
}

pub fn is_numeric() -> bool {
    POINT.with(|p| p.borrow().is_some())
}

/// A string identifying the active mode, used to key caches.
pub fn mode_key() -> String {
    match current_point() {
        None => "symbolic".to_string(),
        Some((q0, t0)) => format!("numeric:{q0}:{t0}"),
    }
}

pub(crate) fn eval_at_point(p: &IntPoly2) -> Option<BigRational> {
    POINT.with(|pt| pt.borrow().as_ref().map(|(q0, t0)| p.eval(q0, t0)))
}

/// A pseudo-random evaluation point from a seed.
///
/// Coordinates are ratios of distinct primes, so `q0^a t0^b = 1` only for
/// `a = b = 0` and no factor `1 - q^a t^b` vanishes.
pub fn sample_point(seed: u64) -> (BigRational, BigRational) {
    const PRIMES: [i64; 24] = [
        101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
        193, 197, 199, 211, 223, 227,
    ];
    let mut s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0x2545_F491_4F6C_DD1D);
    let mut next = || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        (s % PRIMES.len() as u64) as usize
    };
    let mut picks: Vec<usize> = Vec::with_capacity(4);
    while picks.len() < 4 {
        let k = next();
        if !picks.contains(&k) {
            picks.push(k);
        }
    }
    let r = |a: usize, b: usize| {
        BigRational::new(BigInt::from(PRIMES[picks[a]]), BigInt::from(PRIMES[picks[b]]))
    };
    (r(0, 1), r(2, 3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_is_scoped() {
        assert!(!is_numeric());
        let (q0, t0) = sample_point(7);
        with_point(q0.clone(), t0, || {
            assert!(is_numeric());
            assert_eq!(current_point().unwrap().0, q0);
        });
        assert!(!is_numeric());
    }

    #[test]
    fn sampled_points_differ_by_seed() {
        assert_ne!(sample_point(1), sample_point(2));
        assert_eq!(sample_point(3), sample_point(3));
    }
}
