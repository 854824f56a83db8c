//! The ring of symmetric functions over Q(q,t), one graded component at a
//! time.
//!
//! A [`SymFun`] is a finite expansion in one of the supported bases, tagged
//! with that basis and with a degree bound. Arithmetic between different
//! bases is refused; use [`convert`] first.

mod bisym;
mod ops;
mod transition;
mod xpoly;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rq::display::Factored;
use crate::rq::RatFun;

pub use bisym::BiSymFun;
pub use ops::{adjoint_apply, dp1, inner_product, p_multiply, p_norm, restrict};
pub use transition::{convert, kostka, transition_matrix, Transition};
pub use xpoly::{
    alternate, collect_symmetric, divide_by_vandermonde, expand_x, schur_to_m, Alternant,
    NSymPoly, XPoly,
};

/// The bases of the ring of symmetric functions handled by the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomial symmetric functions `m`.
    M,
    /// Power sums `p`.
    P,
    /// Schur functions `s`.
    S,
    /// Hall-Littlewood `P`.
    HlP,
    /// Hall-Littlewood `Q`.
    HlQ,
    /// Macdonald `M` (monic in the monomial basis).
    MacM,
}

impl Basis {
    pub const ALL: [Basis; 6] = [Basis::M, Basis::P, Basis::S, Basis::HlP, Basis::HlQ, Basis::MacM];

    /// Tag used in JSON.
    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::P => "p",
            Basis::S => "s",
            Basis::HlP => "HL_P",
            Basis::HlQ => "HL_Q",
            Basis::MacM => "Mac_M",
        }
    }

    /// Generator name used in rendered expressions: `m[2,1]`, `P[2]`, ...
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::P => "p",
            Basis::S => "s",
            Basis::HlP => "P",
            Basis::HlQ => "Q",
            Basis::MacM => "M",
        }
    }

    /// Looks a basis up by tag or generator name.
    pub fn from_name(s: &str) -> Option<Basis> {
        Basis::ALL
            .into_iter()
            .find(|b| b.tag() == s || b.symbol() == s)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Basis::from_name(s).ok_or_else(|| Error::Parse { position: 0, message: format!("unknown basis '{s}'") })
    }
}

/// A symmetric function truncated at a degree bound, expanded in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFun {
    basis: Basis,
    coeffs: BTreeMap<Partition, RatFun>,
    degree_bound: usize,
}

impl SymFun {
    pub fn zero(basis: Basis, degree_bound: usize) -> Self {
        Self { basis, coeffs: BTreeMap::new(), degree_bound }
    }

    /// A single basis element.
    pub fn basis_element(basis: Basis, lambda: &Partition, degree_bound: usize) -> Self {
        Self::from_terms(basis, degree_bound, [(lambda.clone(), RatFun::one())])
    }

    /// A constant.
    pub fn scalar(basis: Basis, c: RatFun, degree_bound: usize) -> Self {
        Self::from_terms(basis, degree_bound, [(Partition::empty(), c)])
    }

    /// Sums the given terms, dropping zeros and terms above the bound.
    pub fn from_terms<I>(basis: Basis, degree_bound: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, RatFun)>,
    {
        let mut f = Self::zero(basis, degree_bound);
        for (l, c) in terms {
            f.add_term(&l, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFun {
        self.coeffs.get(lambda).cloned().unwrap_or_else(RatFun::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFun)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c` times the basis element `lambda`; ignored above the bound.
    pub fn add_term(&mut self, lambda: &Partition, c: &RatFun) {
        if c.is_zero() || lambda.weight() > self.degree_bound {
            return;
        }
        match self.coeffs.get_mut(lambda) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(lambda);
                }
            }
            None => {
                self.coeffs.insert(lambda.clone(), c.clone());
            }
        }
    }

    fn check_basis(&self, other: &SymFun) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.tag().into(),
                found: other.basis.tag().into(),
            });
        }
        Ok(())
    }

    /// Sum; the bound of the result is the larger bound.
    pub fn checked_add(&self, other: &SymFun) -> Result<SymFun> {
        self.check_basis(other)?;
        let mut out = self.clone();
        out.degree_bound = self.degree_bound.max(other.degree_bound);
        for (l, c) in &other.coeffs {
            out.add_term(l, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymFun) -> Result<SymFun> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> SymFun {
        self.map(|c| -c)
    }

    pub fn scale(&self, k: &RatFun) -> SymFun {
        if k.is_zero() {
            return SymFun::zero(self.basis, self.degree_bound);
        }
        self.map(|c| c * k)
    }

    fn map(&self, f: impl Fn(&RatFun) -> RatFun) -> SymFun {
        let mut out = SymFun::zero(self.basis, self.degree_bound);
        for (l, c) in &self.coeffs {
            out.add_term(l, &f(c));
        }
        out
    }

    /// Applies a fallible map to every coefficient.
    pub fn try_map(&self, f: impl Fn(&RatFun) -> Result<RatFun>) -> Result<SymFun> {
        let mut out = SymFun::zero(self.basis, self.degree_bound);
        for (l, c) in &self.coeffs {
            out.add_term(l, &f(c)?);
        }
        Ok(out)
    }

    /// Substitutes values for `q` and/or `t` in every coefficient.
    pub fn specialize(&self, q: Option<&RatFun>, t: Option<&RatFun>) -> Result<SymFun> {
        self.try_map(|c| c.specialize(q, t))
    }

    /// Same element with a different bound; terms above it are dropped.
    pub fn with_bound(&self, degree_bound: usize) -> SymFun {
        SymFun::from_terms(
            self.basis,
            degree_bound,
            self.coeffs.iter().map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    /// The component of degree `d`.
    pub fn homogeneous(&self, d: usize) -> SymFun {
        SymFun::from_terms(
            self.basis,
            self.degree_bound,
            self.coeffs
                .iter()
                .filter(|(l, _)| l.weight() == d)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    /// Degrees with a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.coeffs.keys().map(Partition::weight).collect();
        d.dedup();
        d
    }

    /// Largest degree with a nonzero term.
    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::weight).max()
    }

    /// Plain text such as `m[2] + ((1+q)*(1-t)/(1-q*t))*m[1,1]`.
    pub fn to_plain(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (l, c)) in self.coeffs.iter().enumerate() {
            let f = Factored::new(c);
            let body = if l.is_empty() {
                let s = f.plain();
                s.strip_prefix('-').map(str::to_string).unwrap_or(s)
            } else {
                let g = format!("{}[{}]", self.basis.symbol(), l.to_text());
                let coef = f.coefficient_plain();
                if coef.is_empty() {
                    g
                } else {
                    format!("{coef}*{g}")
                }
            };
            match (k, f.is_negative()) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            out.push_str(&body);
        }
        out
    }

    /// LaTeX text with `\frac` coefficients.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (l, c)) in self.coeffs.iter().enumerate() {
            let f = Factored::new(c);
            let g = format!("{}_{{{}}}", self.basis.symbol(), l);
            let body = match (l.is_empty(), f.is_unit()) {
                (true, _) => f.magnitude_latex(),
                (false, true) => g,
                (false, false) => format!("{} {}", f.magnitude_latex(), g),
            };
            match (k, f.is_negative()) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            out.push_str(&body);
        }
        out
    }

    /// JSON in the fixed key order `basis`, `degree_bound`, `terms`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SymFun> {
        SymFun::deserialize(v).map_err(|e| Error::Parse { position: 0, message: e.to_string() })
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<{}>: ", self.basis.tag(), self.degree_bound)?;
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{}{}", self.basis.symbol(), l)?;
        }
        Ok(())
    }
}

impl std::ops::Add for &SymFun {
    type Output = SymFun;
    /// Panics on a basis mismatch; see [`SymFun::checked_add`].
    fn add(self, rhs: &SymFun) -> SymFun {
        self.checked_add(rhs).expect("basis mismatch")
    }
}

impl std::ops::Sub for &SymFun {
    type Output = SymFun;
    /// Panics on a basis mismatch; see [`SymFun::checked_sub`].
    fn sub(self, rhs: &SymFun) -> SymFun {
        self.checked_sub(rhs).expect("basis mismatch")
    }
}

impl std::ops::Neg for &SymFun {
    type Output = SymFun;
    fn neg(self) -> SymFun {
        SymFun::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<usize>,
    coeff: RatFun,
}

#[derive(Serialize, Deserialize)]
struct SymFunJson {
    basis: String,
    degree_bound: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SymFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFunJson {
            basis: self.basis.tag().to_string(),
            degree_bound: self.degree_bound,
            terms: self
                .coeffs
                .iter()
                .map(|(l, c)| TermJson { partition: l.parts().to_vec(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = SymFunJson::deserialize(d)?;
        let basis = Basis::from_name(&j.basis).ok_or_else(|| D::Error::custom("unknown basis"))?;
        let mut f = SymFun::zero(basis, j.degree_bound);
        for t in j.terms {
            let l = Partition::from_decreasing(t.partition)
                .ok_or_else(|| D::Error::custom("invalid partition"))?;
            if l.weight() > j.degree_bound {
                return Err(D::Error::custom("term above the degree bound"));
            }
            f.add_term(&l, &t.coeff);
        }
        Ok(f)
    }
}
