//! Dense univariate polynomials over the integers, stored as coefficient
//! vectors in ascending degree with no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut UPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn add_assign(a: &mut UPoly, b: &[BigInt]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (o, s) in a.iter_mut().zip(b) {
        *o += s;
    }
    trim(a);
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let n = a.len().max(b.len());
    let mut out: UPoly = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        match b.get(i) {
            Some(y) => out.push(x - y),
            None => out.push(x),
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[BigInt]) -> UPoly {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], k: &BigInt) -> UPoly {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * k).collect()
}

pub(crate) fn div_scalar_exact(a: &[BigInt], k: &BigInt) -> UPoly {
    a.iter().map(|c| c / k).collect()
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a` in Z[t].
pub(crate) fn divexact(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    let db = degree(b)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.len() == 1 {
        let k = &b[0];
        let mut out = Vec::with_capacity(a.len());
        for c in a {
            let (qq, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(qq);
        }
        return Some(out);
    }
    let da = degree(a)?;
    if da < db {
        return None;
    }
    let mut rem: UPoly = a.to_vec();
    let lb = &b[db];
    let mut quo = vec![BigInt::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = &rem[i + db];
        if c.is_zero() {
            continue;
        }
        let (qq, r) = c.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[i + j] -= &qq * bj;
            }
        }
        quo[i] = qq;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quo);
    Some(quo)
}

/// Nonnegative gcd of the coefficients.
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn primitive(a: &[BigInt]) -> UPoly {
    let c = content(a);
    if c.is_zero() || c.is_one() {
        return a.to_vec();
    }
    div_scalar_exact(a, &c)
}

/// Lowest exponent with a nonzero coefficient.
pub(crate) fn valuation(a: &[BigInt]) -> usize {
    a.iter().position(|c| !c.is_zero()).unwrap_or(0)
}

/// Pseudo-remainder of `a` by `b` (b nonzero), scaled by powers of lc(b).
fn prem(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: UPoly = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let g = lb.gcd(&lr);
        let fr = lb / &g;
        let fb = &lr / &g;
        for c in r.iter_mut() {
            *c *= &fr;
        }
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &fb * bj;
        }
        trim(&mut r);
    }
    r
}

/// Gcd in Z[t], normalized with a positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return normalize_sign(b.to_vec());
    }
    if b.is_empty() {
        return normalize_sign(a.to_vec());
    }
    let cont = content(a).gcd(&content(b));
    if a.len() == 1 || b.len() == 1 {
        return vec![cont];
    }
    let va = valuation(a);
    let vb = valuation(b);
    let v = va.min(vb);
    let mut x = primitive(&a[va..]);
    let mut y = primitive(&b[vb..]);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if let Some(_q) = divexact(&x, &y) {
        return finish(y, &cont, v);
    }
    if let Some(g) = heuristic_gcd(&x, &y) {
        return finish(g, &cont, v);
    }
    while y.len() > 1 {
        let r = prem(&x, &y);
        x = y;
        if r.is_empty() {
            return finish(x, &cont, v);
        }
        y = primitive(&r);
    }
    if y.is_empty() {
        return finish(x, &cont, v);
    }
    // y is a nonzero constant: the primitive parts are coprime
    finish(vec![BigInt::one()], &cont, v)
}

/// Largest absolute value of a coefficient.
pub(crate) fn max_norm(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

pub(crate) fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Digits of `c` in base `xi` with remainders in `(-xi/2, xi/2]`, lowest
/// first.
pub(crate) fn symmetric_digits(mut c: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half: BigInt = xi >> 1;
    let mut out = Vec::new();
    while !c.is_zero() {
        let mut r = c.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        c = (c - &r) / xi;
        out.push(r);
    }
    out
}

/// Starting evaluation point for the heuristic gcd, large enough that a
/// reconstructed common divisor is the gcd.
pub(crate) fn initial_xi(na: &BigInt, nb: &BigInt) -> BigInt {
    na.min(nb) * 2 + 29
}

pub(crate) fn next_xi(xi: &BigInt) -> BigInt {
    xi * 73794 * xi.sqrt().sqrt() / 27011
}

pub(crate) const HEURISTIC_TRIES: usize = 6;

/// Gcd of two primitive nonconstant polynomials by evaluation at a large
/// integer, integer gcd and reconstruction, confirmed by exact division.
/// `None` when no evaluation point worked.
fn heuristic_gcd(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    let mut xi = initial_xi(&max_norm(a), &max_norm(b));
    for _ in 0..HEURISTIC_TRIES {
        let h = eval(a, &xi).gcd(&eval(b, &xi));
        let g = normalize_sign(primitive(&symmetric_digits(h, &xi)));
        if !g.is_empty() && divexact(a, &g).is_some() && divexact(b, &g).is_some() {
            return Some(g);
        }
        xi = next_xi(&xi);
    }
    None
}

fn finish(g: UPoly, cont: &BigInt, shift: usize) -> UPoly {
    let g = primitive(&g);
    let mut out = vec![BigInt::zero(); shift];
    out.extend(g.into_iter().map(|c| c * cont));
    normalize_sign(out)
}

pub(crate) fn normalize_sign(mut a: UPoly) -> UPoly {
    trim(&mut a);
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -&*c;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        let mut out: UPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1-t)(1+t) and (1-t)(1+t+t^2)
        let a = p(&[1, 0, -1]);
        let b = p(&[1, 0, 0, -1]);
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content_and_powers_of_t() {
        let a = p(&[0, 6, 6]);
        let b = p(&[0, 0, 4, 4]);
        assert_eq!(gcd(&a, &b), p(&[0, 2, 2]));
    }

    #[test]
    fn divexact_detects_remainders() {
        assert_eq!(divexact(&p(&[1, 0, -1]), &p(&[1, -1])), Some(p(&[1, 1])));
        assert_eq!(divexact(&p(&[1, 0, 1]), &p(&[1, -1])), None);
        assert_eq!(divexact(&p(&[2, 4]), &p(&[4])), None);
    }
}
