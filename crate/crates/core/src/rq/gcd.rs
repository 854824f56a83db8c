//! Greatest common divisors in Z[q,t].
//!
//! Polynomials are viewed as polynomials in one variable with coefficients in
//! Z[other]; contents are split off recursively and the primitive parts go
//! through a primitive pseudo-remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly2;
use super::upoly::{self, UPoly};

/// The gcd of `a` and `b`, normalized to a positive leading coefficient in
/// graded lexicographic order. `gcd(0, 0) = 0`.
pub fn gcd(a: &IntPoly2, b: &IntPoly2) -> IntPoly2 {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() || a == b {
        return normalize_sign(a.clone());
    }
    let (aq, at) = a.valuation();
    let (bq, bt) = b.valuation();
    let (mq, mt) = (aq.min(bq), at.min(bt));
    let cont = a.content().gcd(&b.content());
    let a1 = a.unshift(aq, at);
    let b1 = b.unshift(bq, bt);
    if a1.as_constant().is_some() || b1.as_constant().is_some() {
        return IntPoly2::monomial(cont, mq, mt);
    }
    let a1 = primitive(&a1);
    let b1 = primitive(&b1);
    let g = core(&a1, &b1);
    normalize_sign(g.scale(&cont).shift(mq, mt))
}

/// Multiplies by -1 when the graded-lex leading coefficient is negative.
pub(crate) fn normalize_sign(p: IntPoly2) -> IntPoly2 {
    match p.leading_coeff() {
        Some(c) if c.is_negative() => -p,
        _ => p,
    }
}

fn primitive(p: &IntPoly2) -> IntPoly2 {
    let c = p.content();
    if c.is_one() || c.is_zero() {
        p.clone()
    } else {
        p.div_scalar_exact(&c)
    }
}

/// Gcd of two nonconstant polynomials with unit integer content and no
/// monomial factor, up to sign.
fn core(a: &IntPoly2, b: &IntPoly2) -> IntPoly2 {
    if let Some(g) = divisibility(a, b) {
        return g;
    }
    if let Some(g) = heuristic(a, b) {
        return g;
    }
    let dq = a.deg_q().unwrap().max(b.deg_q().unwrap());
    let dt = a.deg_t().unwrap().max(b.deg_t().unwrap());
    if dt < dq {
        return core_in_q(&a.transpose(), &b.transpose()).transpose();
    }
    core_in_q(a, b)
}

/// `p(xi, t)` as a polynomial in `t`.
fn eval_q(p: &IntPoly2, xi: &BigInt) -> UPoly {
    let mut acc: UPoly = Vec::new();
    for row in p.rows().iter().rev() {
        acc = upoly::scale(&acc, xi);
        upoly::add_assign(&mut acc, row);
    }
    acc
}

/// The heuristic gcd: evaluate `q` at a large integer, take the gcd in
/// Z[t], read the q-coefficients back off as balanced base-`xi` digits and
/// keep the result only if it divides both inputs.
fn heuristic(a: &IntPoly2, b: &IntPoly2) -> Option<IntPoly2> {
    let mut xi = upoly::initial_xi(&a.max_norm(), &b.max_norm());
    for _ in 0..upoly::HEURISTIC_TRIES {
        let h = upoly::gcd(&eval_q(a, &xi), &eval_q(b, &xi));
        let mut rows: Vec<UPoly> = Vec::new();
        for (j, c) in h.into_iter().enumerate() {
            for (i, d) in upoly::symmetric_digits(c, &xi).into_iter().enumerate() {
                if rows.len() <= i {
                    rows.resize(i + 1, Vec::new());
                }
                if rows[i].len() <= j {
                    rows[i].resize(j + 1, BigInt::zero());
                }
                rows[i][j] = d;
            }
        }
        for r in rows.iter_mut() {
            upoly::trim(r);
        }
        let g = primitive(&IntPoly2::from_rows(rows));
        if !g.is_zero() && a.divexact(&g).is_some() && b.divexact(&g).is_some() {
            return Some(g);
        }
        xi = upoly::next_xi(&xi);
    }
    None
}

fn divisibility(a: &IntPoly2, b: &IntPoly2) -> Option<IntPoly2> {
    let fits = |x: &IntPoly2, y: &IntPoly2| {
        x.deg_q() >= y.deg_q() && x.deg_t() >= y.deg_t() && x.num_terms() >= 2
    };
    if fits(a, b) && a.divexact(b).is_some() {
        return Some(b.clone());
    }
    if fits(b, a) && b.divexact(a).is_some() {
        return Some(a.clone());
    }
    None
}

/// Gcd of the coefficients in Z[t] of a polynomial in q.
fn q_content(p: &IntPoly2) -> UPoly {
    let mut g: UPoly = Vec::new();
    for r in p.rows() {
        if r.is_empty() {
            continue;
        }
        g = upoly::gcd(&g, r);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn div_rows(p: &IntPoly2, c: &UPoly) -> IntPoly2 {
    if c.len() == 1 && c[0].is_one() {
        return p.clone();
    }
    let rows = p
        .rows()
        .iter()
        .map(|r| {
            if r.is_empty() {
                Vec::new()
            } else {
                upoly::divexact(r, c).expect("content divides every coefficient")
            }
        })
        .collect();
    IntPoly2::from_rows(rows)
}

fn core_in_q(a: &IntPoly2, b: &IntPoly2) -> IntPoly2 {
    let ca = q_content(a);
    let cb = q_content(b);
    let cg = upoly::gcd(&ca, &cb);
    let x0 = div_rows(a, &ca);
    let y0 = div_rows(b, &cb);
    let (mut x, mut y) = if x0.deg_q() >= y0.deg_q() {
        (x0, y0)
    } else {
        (y0, x0)
    };
    let g = loop {
        if y.deg_q() == Some(0) {
            break IntPoly2::one();
        }
        let r = prem_q(&x, &y);
        if r.is_zero() {
            break y;
        }
        x = y;
        y = div_rows(&r, &q_content(&r));
    };
    let g = if g.deg_q() == Some(0) {
        IntPoly2::one()
    } else {
        div_rows(&g, &q_content(&g))
    };
    &g * &IntPoly2::from_t_poly(cg)
}

/// Pseudo-remainder in q with coefficients in Z[t].
fn prem_q(a: &IntPoly2, b: &IntPoly2) -> IntPoly2 {
    let db = b.deg_q().unwrap();
    let lb = &b.rows()[db];
    let mut r: Vec<UPoly> = a.rows().to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r <- (lb / g) r - (lr / g) q^(dr-db) b, g a common integer factor
        let g = upoly::content(lb).gcd(&upoly::content(&lr));
        let (fl, fr) = if g.is_one() {
            (lb.clone(), lr)
        } else {
            (
                upoly::div_scalar_exact(lb, &g),
                upoly::div_scalar_exact(&lr, &g),
            )
        };
        for row in r.iter_mut() {
            if !row.is_empty() {
                *row = upoly::mul(row, &fl);
            }
        }
        let shift = dr - db;
        for (j, bj) in b.rows().iter().enumerate() {
            if !bj.is_empty() {
                let prod = upoly::mul(&fr, bj);
                r[shift + j] = upoly::sub(&r[shift + j], &prod);
            }
        }
        while r.last().is_some_and(|x| x.is_empty()) {
            r.pop();
        }
    }
    IntPoly2::from_rows(r)
}

/// Least common multiple, normalized like [`gcd`].
pub fn lcm(a: &IntPoly2, b: &IntPoly2) -> IntPoly2 {
    if a.is_zero() || b.is_zero() {
        return IntPoly2::zero();
    }
    let g = gcd(a, b);
    normalize_sign(&a.divexact(&g).expect("gcd divides") * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(usize, usize, i64)]) -> IntPoly2 {
        IntPoly2::from_terms(terms.iter().map(|&(a, b, c)| (a, b, c)))
    }

    fn one_minus(a: usize, b: usize) -> IntPoly2 {
        poly(&[(0, 0, 1), (a, b, -1)])
    }

    #[test]
    fn gcd_of_binomial_products() {
        let x = &one_minus(0, 1) * &one_minus(1, 1);
        let y = &one_minus(0, 2) * &one_minus(1, 0);
        // 1 - t divides both; normalized with positive leading coefficient
        assert_eq!(gcd(&x, &y), poly(&[(0, 0, -1), (0, 1, 1)]));
    }

    #[test]
    fn gcd_with_mixed_factors() {
        let f = &one_minus(1, 2) * &poly(&[(0, 0, 3), (2, 0, 1), (1, 1, -2)]);
        let a = &f * &one_minus(2, 1);
        let b = &f * &one_minus(0, 3);
        let g = gcd(&a, &b);
        assert_eq!(g, normalize_sign(f));
    }

    #[test]
    fn gcd_keeps_monomials_and_content() {
        let a = poly(&[(1, 1, 6), (2, 1, 6)]);
        let b = poly(&[(1, 2, 4), (2, 2, 4)]);
        assert_eq!(gcd(&a, &b), poly(&[(1, 1, 2), (2, 1, 2)]));
    }

    #[test]
    fn coprime_inputs() {
        let g = gcd(&one_minus(1, 0), &one_minus(0, 1));
        assert!(g.is_one());
    }
}
