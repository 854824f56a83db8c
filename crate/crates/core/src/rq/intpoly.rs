use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, UPoly};

/// A polynomial in `q` and `t` with integer coefficients.
///
/// Stored densely as a polynomial in `q` whose coefficients are polynomials in
/// `t`: `rows[i]` holds the coefficient of `q^i`. Rows carry no trailing
/// zeros and the row vector carries no trailing empty rows, so structural
/// equality is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly2 {
    rows: Vec<UPoly>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * q^deg_q * t^deg_t`.
    pub fn monomial(c: impl Into<BigInt>, deg_q: usize, deg_t: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![Vec::new(); deg_q + 1];
        let mut row = vec![BigInt::zero(); deg_t + 1];
        row[deg_t] = c;
        rows[deg_q] = row;
        Self { rows }
    }

    /// Builds a polynomial from `(deg_q, deg_t, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, C)>,
        C: Into<BigInt>,
    {
        let mut rows: Vec<UPoly> = Vec::new();
        for (a, b, c) in terms {
            if rows.len() <= a {
                rows.resize(a + 1, Vec::new());
            }
            let row = &mut rows[a];
            if row.len() <= b {
                row.resize(b + 1, BigInt::zero());
            }
            row[b] += c.into();
        }
        Self::from_rows(rows)
    }

    pub(crate) fn from_rows(mut rows: Vec<UPoly>) -> Self {
        for r in rows.iter_mut() {
            upoly::trim(r);
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Self { rows }
    }

    /// A polynomial in `t` alone.
    pub(crate) fn from_t_poly(p: UPoly) -> Self {
        Self::from_rows(vec![p])
    }

    pub(crate) fn rows(&self) -> &[UPoly] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].len() == 1 && self.rows[0][0].is_one()
    }

    /// The value when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.rows.len() {
            0 => Some(BigInt::zero()),
            1 if self.rows[0].len() == 1 => Some(self.rows[0][0].clone()),
            _ => None,
        }
    }

    /// `(coefficient, deg_q, deg_t)` when the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(BigInt, usize, usize)> {
        let mut found = None;
        for (a, row) in self.rows.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    if found.is_some() {
                        return None;
                    }
                    found = Some((c.clone(), a, b));
                }
            }
        }
        found
    }

    /// Terms as `(deg_q, deg_t, coefficient)` in ascending `(deg_q, deg_t)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.rows.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(b, c)| (a, b, c))
        })
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Terms sorted by graded lexicographic order with `q > t`, ascending.
    pub fn terms_grlex(&self) -> Vec<(usize, usize, BigInt)> {
        let mut v: Vec<_> = self.terms().map(|(a, b, c)| (a, b, c.clone())).collect();
        v.sort_by(|x, y| grlex_cmp((x.0, x.1), (y.0, y.1)));
        v
    }

    pub fn deg_q(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn deg_t(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| upoly::degree(r)).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms().map(|(a, b, _)| a + b).max()
    }

    /// Leading coefficient for graded lexicographic order with `q > t`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for (a, b, c) in self.terms() {
            match best {
                Some((ba, bb, _)) if grlex_cmp((a, b), (ba, bb)) != Ordering::Greater => {}
                _ => best = Some((a, b, c)),
            }
        }
        best.map(|(_, _, c)| c)
    }

    /// Nonnegative gcd of all integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for row in &self.rows {
            g = g.gcd(&upoly::content(row));
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            rows: self.rows.iter().map(|r| upoly::scale(r, k)).collect(),
        }
    }

    /// Divides every coefficient by `k`; `k` must divide the content.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| upoly::div_scalar_exact(r, k))
                .collect(),
        }
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![Vec::new(); a];
        for r in &self.rows {
            if r.is_empty() {
                rows.push(Vec::new());
            } else {
                let mut nr = vec![BigInt::zero(); b];
                nr.extend(r.iter().cloned());
                rows.push(nr);
            }
        }
        Self { rows }
    }

    /// Smallest exponents of `q` and `t` over all terms.
    pub fn valuation(&self) -> (usize, usize) {
        let vq = self.rows.iter().position(|r| !r.is_empty()).unwrap_or(0);
        let vt = self
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| upoly::valuation(r))
            .min()
            .unwrap_or(0);
        (vq, vt)
    }

    /// Divides by `q^a t^b`, which must divide every term.
    pub fn unshift(&self, a: usize, b: usize) -> Self {
        let rows = self.rows[a.min(self.rows.len())..]
            .iter()
            .map(|r| if r.is_empty() { Vec::new() } else { r[b..].to_vec() })
            .collect();
        Self::from_rows(rows)
    }

    /// Swaps the roles of `q` and `t`.
    pub fn transpose(&self) -> Self {
        Self::from_terms(self.terms().map(|(a, b, c)| (b, a, c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient, or `None` when `d` does not divide `self` in Z[q,t].
    pub fn divexact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, a, b)) = d.as_monomial() {
            let (va, vb) = self.valuation();
            if va < a || vb < b {
                return None;
            }
            let shifted = self.unshift(a, b);
            if c.is_one() {
                return Some(shifted);
            }
            let cont = shifted.content();
            if !cont.is_multiple_of(&c) {
                return None;
            }
            return Some(shifted.div_scalar_exact(&c));
        }
        let dd = d.rows.len() - 1;
        if self.rows.len() - 1 < dd {
            return None;
        }
        let lead = &d.rows[dd];
        let mut rem = self.rows.clone();
        let mut quo = vec![Vec::new(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            if rem[i + dd].is_empty() {
                continue;
            }
            let qi = upoly::divexact(&rem[i + dd], lead)?;
            for (j, dj) in d.rows.iter().enumerate() {
                if !dj.is_empty() {
                    let prod = upoly::mul(&qi, dj);
                    rem[i + j] = upoly::sub(&rem[i + j], &prod);
                }
            }
            quo[i] = qi;
        }
        if rem.iter().any(|r| !r.is_empty()) {
            return None;
        }
        Some(Self::from_rows(quo))
    }

    /// Largest absolute value of a coefficient.
    pub(crate) fn max_norm(&self) -> BigInt {
        self.rows.iter().map(|r| upoly::max_norm(r)).max().unwrap_or_default()
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for row in self.rows.iter().rev() {
            let mut inner = BigRational::zero();
            for c in row.iter().rev() {
                inner = inner * t0 + BigRational::from_integer(c.clone());
            }
            acc = acc * q0 + inner;
        }
        acc
    }
}

/// Graded lexicographic comparison of exponent pairs `(deg_q, deg_t)` with `q > t`.
pub fn grlex_cmp(x: (usize, usize), y: (usize, usize)) -> Ordering {
    (x.0 + x.1).cmp(&(y.0 + y.1)).then(x.0.cmp(&y.0))
}

impl Add for &IntPoly2 {
    type Output = IntPoly2;
    fn add(self, rhs: &IntPoly2) -> IntPoly2 {
        let (long, short) = if self.rows.len() >= rhs.rows.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut rows = long.rows.clone();
        for (r, s) in rows.iter_mut().zip(&short.rows) {
            upoly::add_assign(r, s);
        }
        IntPoly2::from_rows(rows)
    }
}

impl Sub for &IntPoly2 {
    type Output = IntPoly2;
    fn sub(self, rhs: &IntPoly2) -> IntPoly2 {
        let n = self.rows.len().max(rhs.rows.len());
        let empty = Vec::new();
        let rows = (0..n)
            .map(|i| {
                upoly::sub(
                    self.rows.get(i).unwrap_or(&empty),
                    rhs.rows.get(i).unwrap_or(&empty),
                )
            })
            .collect();
        IntPoly2::from_rows(rows)
    }
}

impl Mul for &IntPoly2 {
    type Output = IntPoly2;
    fn mul(self, rhs: &IntPoly2) -> IntPoly2 {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly2::zero();
        }
        let mut rows = vec![Vec::new(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            for (j, b) in rhs.rows.iter().enumerate() {
                if !b.is_empty() {
                    let prod = upoly::mul(a, b);
                    upoly::add_assign(&mut rows[i + j], &prod);
                }
            }
        }
        IntPoly2::from_rows(rows)
    }
}

impl Neg for &IntPoly2 {
    type Output = IntPoly2;
    fn neg(self) -> IntPoly2 {
        IntPoly2 {
            rows: self.rows.iter().map(|r| upoly::neg(r)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly2 {
            type Output = IntPoly2;
            fn $m(self, rhs: IntPoly2) -> IntPoly2 {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly2 {
    type Output = IntPoly2;
    fn neg(self) -> IntPoly2 {
        -&self
    }
}

impl From<i64> for IntPoly2 {
    fn from(c: i64) -> Self {
        IntPoly2::constant(c)
    }
}

impl fmt::Display for IntPoly2 {
    /// Canonical text: terms in ascending graded lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms_grlex();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (a, b, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let abs = c.abs();
            let mono = monomial_text(*a, *b);
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn monomial_text(a: usize, b: usize) -> String {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("t".to_string()),
        _ => parts.push(format!("t^{b}")),
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(c0: i64, cq: i64, ct: i64) -> IntPoly2 {
        IntPoly2::from_terms([(0, 0, c0), (1, 0, cq), (0, 1, ct)])
    }

    #[test]
    fn difference_of_squares() {
        let a = lin(1, 0, -1);
        let b = lin(1, 0, 1);
        assert_eq!(&a * &b, IntPoly2::from_terms([(0, 0, 1), (0, 2, -1)]));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let sum = &IntPoly2::q() + &(-IntPoly2::q());
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn distributivity_example() {
        let prod = &lin(1, -1, 0) * &lin(1, 0, -1);
        let expected = IntPoly2::from_terms([(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)]);
        assert_eq!(prod, expected);
    }

    #[test]
    fn grlex_leading_coefficient() {
        // 1 - q t : leading term is -q t
        let p = IntPoly2::from_terms([(0, 0, 1), (1, 1, -1)]);
        assert_eq!(p.leading_coeff(), Some(&BigInt::from(-1)));
        // t^2 + q: total degree wins
        let p = IntPoly2::from_terms([(0, 2, 3), (1, 0, -1)]);
        assert_eq!(p.leading_coeff(), Some(&BigInt::from(3)));
        // q t vs t^2 at the same degree: q wins
        let p = IntPoly2::from_terms([(0, 2, 3), (1, 1, -2)]);
        assert_eq!(p.leading_coeff(), Some(&BigInt::from(-2)));
    }

    #[test]
    fn canonical_display() {
        let p = IntPoly2::from_terms([(2, 0, 1), (0, 0, -1)]);
        assert_eq!(p.to_string(), "-1+q^2");
        let p = IntPoly2::from_terms([(0, 0, 1), (1, 1, -1)]);
        assert_eq!(p.to_string(), "1-q*t");
    }

    #[test]
    fn exact_division() {
        let a = &lin(1, 0, -1) * &lin(1, -1, 0);
        assert_eq!(a.divexact(&lin(1, -1, 0)), Some(lin(1, 0, -1)));
        assert_eq!(a.divexact(&lin(1, 1, 0)), None);
        assert_eq!(IntPoly2::monomial(6, 2, 1).divexact(&IntPoly2::monomial(3, 1, 1)), Some(IntPoly2::monomial(2, 1, 0)));
    }
}
