//! Polynomials in finitely many variables `x_1..x_N`: fully expanded
//! polynomials, symmetric polynomials in the monomial basis, and alternants.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::ring::Ring;
use crate::rq::RatFun;

use super::transition::kostka;
use super::{Basis, SymFun};

/// A polynomial in `x_1..x_N` stored as exponent vector -> coefficient.
#[derive(Clone, PartialEq)]
pub struct XPoly<C = RatFun> {
    n: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Ring> XPoly<C> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    /// `c x^e`; the number of variables is `e.len()`.
    pub fn monomial(e: Vec<u32>, c: C) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, c);
        p
    }

    /// The variable `x_i`, 0-based.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    /// `prod_{i<j} (x_i - x_j)`.
    pub fn vandermonde(n: usize) -> Self {
        let mut acc = Self::one(n);
        for i in 0..n {
            for j in i + 1..n {
                acc = acc.mul(&Self::variable(n, i).sub(&Self::variable(n, j)));
            }
        }
        acc
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: C) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|c| c.mul(k))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                let g: Vec<u32> = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, c.mul(d));
            }
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> XPoly<D> {
        let mut out = XPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Rewrites every term `c x^e` as `f(e, c) x^e`.
    pub fn map_terms(&self, f: impl Fn(&[u32], &C) -> C) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(e, c));
        }
        out
    }

    /// Sets `x_i = 0` (0-based) and drops that variable.
    pub fn set_zero(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n - 1);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                let mut f = e.clone();
                f.remove(i);
                out.add_term(f, c.clone());
            }
        }
        out
    }

    /// Permutes variables: the exponent of `x_i` moves to `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.n];
            for (i, &k) in perm.iter().enumerate() {
                f[k] = e[i];
            }
            out.add_term(f, c.clone());
        }
        out
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for XPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{e:?}")?;
        }
        Ok(())
    }
}

/// A symmetric polynomial in `N` variables in the monomial basis.
#[derive(Clone, PartialEq)]
pub struct NSymPoly<C = RatFun> {
    n: usize,
    coeffs: BTreeMap<Partition, C>,
}

impl<C: Ring> NSymPoly<C> {
    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, l: &Partition) -> C {
        self.coeffs.get(l).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Adds `c m_l`; terms with more than `N` parts vanish in `N` variables
    /// and are dropped.
    pub fn add_term(&mut self, l: &Partition, c: C) {
        if c.is_zero() || l.len() > self.n {
            return;
        }
        match self.coeffs.get_mut(l) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.coeffs.remove(l);
                }
            }
            None => {
                self.coeffs.insert(l.clone(), c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::from_int(-1)))
    }

    pub fn scale(&self, k: &C) -> Self {
        self.map_coeffs(|c| c.mul(k))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> NSymPoly<D> {
        let mut out = NSymPoly::zero(self.n);
        for (l, c) in &self.coeffs {
            out.add_term(l, f(c));
        }
        out
    }

    /// Sets `x_N = 0`, giving a symmetric polynomial in `N - 1` variables.
    pub fn set_last_zero(&self) -> Self {
        let mut out = Self::zero(self.n - 1);
        for (l, c) in &self.coeffs {
            out.add_term(l, c.clone());
        }
        out
    }

    /// Component of degree `d`.
    pub fn homogeneous(&self, d: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (l, c) in &self.coeffs {
            if l.weight() == d {
                out.add_term(l, c.clone());
            }
        }
        out
    }
}

impl NSymPoly<RatFun> {
    /// The unique symmetric function with the same monomial coefficients and
    /// no `m_l` with more than `N` parts.
    pub fn to_symfun(&self, degree_bound: usize) -> SymFun {
        SymFun::from_terms(
            Basis::M,
            degree_bound,
            self.coeffs.iter().map(|(l, c)| (l.clone(), c.clone())),
        )
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for NSymPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[N={}] ", self.n)?;
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*m{l}")?;
        }
        Ok(())
    }
}

/// Distinct rearrangements of `v`, in lexicographic order.
pub(crate) fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

fn padded(l: &Partition, n: usize) -> Vec<u32> {
    let mut e: Vec<u32> = l.parts().iter().map(|&p| p as u32).collect();
    e.resize(n, 0);
    e
}

/// Expands each `m_l` into its monomials.
pub fn expand_x<C: Ring>(p: &NSymPoly<C>) -> XPoly<C> {
    let mut out = XPoly::zero(p.n());
    for (l, c) in p.terms() {
        for e in distinct_permutations(&padded(l, p.n())) {
            out.add_term(e, c.clone());
        }
    }
    out
}

fn monomial_text(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{a}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Collects a symmetric polynomial into the monomial basis.
pub fn collect_symmetric<C: Ring>(xp: &XPoly<C>) -> Result<NSymPoly<C>> {
    let n = xp.n();
    let mut out = NSymPoly::zero(n);
    let mut orbits: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for (e, c) in xp.terms() {
        let mut key = e.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let rep = xp.coeff(&key);
        if &rep != c {
            return Err(Error::NotSymmetric {
                witness: format!("{} and {} have different coefficients", monomial_text(e), monomial_text(&key)),
            });
        }
        *orbits.entry(key).or_default() += 1;
    }
    for (key, count) in orbits {
        let perms = distinct_permutations(&key);
        if perms.len() != count {
            let missing = perms.iter().find(|e| xp.coeff(e).is_zero()).unwrap();
            return Err(Error::NotSymmetric {
                witness: format!("{} is present but {} is not", monomial_text(&key), monomial_text(missing)),
            });
        }
        let l = Partition::new(key.iter().map(|&a| a as usize).collect());
        out.add_term(&l, xp.coeff(&key));
    }
    Ok(out)
}

/// A skew-symmetric polynomial written as a combination of alternants
/// `a_e = det(x_i^{e_j})` with strictly decreasing `e`.
#[derive(Clone, PartialEq)]
pub struct Alternant<C = RatFun> {
    n: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

/// Sign of the permutation sorting `e` into decreasing order, and the sorted
/// vector; `None` when `e` has a repeated entry.
fn sort_sign(e: &[u32]) -> Option<(i64, Vec<u32>)> {
    let mut v = e.to_vec();
    let mut sign = 1;
    // insertion sort counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

/// `sum_{sigma in S_N} sgn(sigma) sigma(xp)`, as a combination of alternants.
pub fn alternate<C: Ring>(xp: &XPoly<C>) -> Alternant<C> {
    let mut out = Alternant::zero(xp.n());
    for (e, c) in xp.terms() {
        if let Some((s, key)) = sort_sign(e) {
            out.add_term(key, if s > 0 { c.clone() } else { c.neg() });
        }
    }
    out
}

impl<C: Ring> Alternant<C> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul(k));
        }
        out
    }

    /// Reads off the alternant expansion of a skew-symmetric polynomial.
    pub fn from_xpoly(xp: &XPoly<C>) -> Result<Self> {
        let mut out = Self::zero(xp.n());
        for (e, c) in xp.terms() {
            match sort_sign(e) {
                None => {
                    return Err(Error::NotAlternating {
                        witness: format!("{} has a repeated exponent", monomial_text(e)),
                    })
                }
                Some((s, key)) => {
                    let expect = if s > 0 { c.clone() } else { c.neg() };
                    if xp.coeff(&key) != expect {
                        return Err(Error::NotAlternating {
                            witness: format!("{} and {} do not match", monomial_text(e), monomial_text(&key)),
                        });
                    }
                    if &key == e {
                        out.add_term(key, c.clone());
                    }
                }
            }
        }
        // each orbit must be complete
        let total: usize = out.terms.len() * (1..=xp.n()).product::<usize>();
        if total != xp.len() {
            return Err(Error::NotAlternating { witness: "incomplete orbit".into() });
        }
        Ok(out)
    }

    /// The expanded polynomial.
    pub fn to_xpoly(&self) -> XPoly<C> {
        let mut out = XPoly::zero(self.n);
        let idx: Vec<u32> = (0..self.n as u32).collect();
        for perm in distinct_permutations(&idx) {
            let (s, _) = sort_sign(&perm.iter().map(|&i| self.n as u32 - i).collect::<Vec<_>>()).unwrap();
            for (e, c) in &self.terms {
                let f: Vec<u32> = perm.iter().map(|&i| e[i as usize]).collect();
                out.add_term(f, if s > 0 { c.clone() } else { c.neg() });
            }
        }
        out
    }

    /// `a_{nu + delta} -> s_nu`.
    pub fn schur_expansion(&self) -> BTreeMap<Partition, C> {
        let n = self.n as u32;
        self.terms
            .iter()
            .map(|(e, c)| {
                let nu = e.iter().enumerate().map(|(i, &a)| (a - (n - 1 - i as u32)) as usize).collect();
                (Partition::new(nu), c.clone())
            })
            .collect()
    }

    /// The quotient by the Vandermonde determinant, in the monomial basis.
    pub fn divide_by_vandermonde(&self) -> NSymPoly<C> {
        let mut out = NSymPoly::zero(self.n);
        for (nu, c) in self.schur_expansion() {
            for (mu, k) in schur_to_m(&nu, self.n) {
                out.add_term(&mu, c.mul_int(k as i64));
            }
        }
        out
    }
}

/// Monomial expansion `s_nu = sum K_{nu mu} m_mu` restricted to `N`
/// variables.
pub fn schur_to_m(nu: &Partition, n: usize) -> Vec<(Partition, u64)> {
    Partition::all(nu.weight())
        .into_iter()
        .filter(|mu| mu.len() <= n)
        .filter_map(|mu| {
            let k = kostka(nu, &mu);
            (k != 0).then_some((mu, k))
        })
        .collect()
}

/// Exact division of a skew-symmetric polynomial by `prod_{i<j}(x_i - x_j)`.
pub fn divide_by_vandermonde<C: Ring>(xp: &XPoly<C>) -> Result<NSymPoly<C>> {
    Ok(Alternant::from_xpoly(xp)?.divide_by_vandermonde())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rq::IntPoly2;

    type X = XPoly<IntPoly2>;

    fn xm(e: &[u32], c: i64) -> X {
        XPoly::monomial(e.to_vec(), IntPoly2::constant(c))
    }

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn msym(n: usize, terms: &[(&[usize], i64)]) -> NSymPoly<IntPoly2> {
        let mut out = NSymPoly::zero(n);
        for (l, c) in terms {
            out.add_term(&p(l), IntPoly2::constant(*c));
        }
        out
    }

    #[test]
    fn expand_examples() {
        let e = expand_x(&msym(2, &[(&[2, 1], 1)]));
        assert_eq!(e, xm(&[2, 1], 1).add(&xm(&[1, 2], 1)));
        let e = expand_x(&msym(3, &[(&[1, 1], 1)]));
        assert_eq!(e, xm(&[1, 1, 0], 1).add(&xm(&[1, 0, 1], 1)).add(&xm(&[0, 1, 1], 1)));
    }

    #[test]
    fn collect_examples() {
        let s = xm(&[2, 1], 1).add(&xm(&[1, 2], 1));
        assert_eq!(collect_symmetric(&s).unwrap(), msym(2, &[(&[2, 1], 1)]));
        let bad = xm(&[1, 0], 1).sub(&xm(&[0, 1], 1));
        assert!(matches!(collect_symmetric(&bad), Err(Error::NotSymmetric { .. })));
        let c = xm(&[0, 0], 5);
        assert_eq!(collect_symmetric(&c).unwrap(), msym(2, &[(&[], 5)]));
    }

    #[test]
    fn vandermonde_division_examples() {
        let d = X::vandermonde(3);
        assert_eq!(divide_by_vandermonde(&d).unwrap(), msym(3, &[(&[], 1)]));
        let a = xm(&[2, 0], 1).sub(&xm(&[0, 2], 1));
        assert_eq!(divide_by_vandermonde(&a).unwrap(), msym(2, &[(&[1], 1)]));
        let b = xm(&[3, 1], 1).sub(&xm(&[1, 3], 1));
        assert_eq!(divide_by_vandermonde(&b).unwrap(), msym(2, &[(&[2, 1], 1)]));
        assert!(matches!(divide_by_vandermonde(&xm(&[1, 0], 1)), Err(Error::NotAlternating { .. })));
    }

    #[test]
    fn quotient_times_vandermonde_recovers_input() {
        // a_{(4,2,0)} in three variables
        let alt = {
            let mut a = Alternant::<IntPoly2>::zero(3);
            a.add_term(vec![4, 2, 0], IntPoly2::constant(3));
            a.add_term(vec![3, 1, 0], IntPoly2::t());
            a
        };
        let xp = alt.to_xpoly();
        let quot = divide_by_vandermonde(&xp).unwrap();
        let back = expand_x(&quot).mul(&X::vandermonde(3));
        assert_eq!(back, xp);
    }

    #[test]
    fn alternation_matches_explicit_sum() {
        let seed = xm(&[2, 1, 0], 1).add(&xm(&[1, 1, 1], 4)).add(&xm(&[0, 3, 1], -2));
        let mut direct = X::zero(3);
        let idx: Vec<u32> = vec![0, 1, 2];
        for perm in distinct_permutations(&idx) {
            let inv: Vec<u32> = perm.iter().map(|&i| 3 - i).collect();
            let (s, _) = sort_sign(&inv).unwrap();
            let perm: Vec<usize> = perm.iter().map(|&i| i as usize).collect();
            let moved = seed.permute(&perm);
            direct = direct.add(&moved.scale(&IntPoly2::constant(s)));
        }
        assert_eq!(alternate(&seed).to_xpoly(), direct);
    }

    #[test]
    fn set_last_zero_drops_long_terms() {
        let f = msym(3, &[(&[1, 1, 1], 1), (&[2, 1], 2)]);
        assert_eq!(f.set_last_zero(), msym(2, &[(&[2, 1], 2)]));
    }
}
