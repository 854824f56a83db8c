//! Human-oriented rendering of rational functions.
//!
//! Coefficients that occur in practice are products of binomials `1 ± q^a t^b`
//! up to monomials and integers. [`Factored`] pulls those factors out by
//! trial division so that, for example, the canonical
//! `(-1-q+t+q*t)/(-1+q*t)` prints as `(1+q)*(1-t)/(1-q*t)`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::intpoly::{monomial_text, IntPoly2};
use super::ratfun::RatFun;

/// `1 + sign * q^a t^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Binomial {
    a: usize,
    b: usize,
    plus: bool,
}

impl Binomial {
    fn poly(&self) -> IntPoly2 {
        let s = if self.plus { 1 } else { -1 };
        IntPoly2::from_terms([(0, 0, 1), (self.a, self.b, s)])
    }

    fn text(&self, latex: bool) -> String {
        let m = if latex { latex_monomial(self.a, self.b) } else { monomial_text(self.a, self.b) };
        format!("1{}{}", if self.plus { "+" } else { "-" }, m)
    }
}

#[derive(Clone, Debug, Default)]
struct Side {
    integer: BigInt,
    mono: (usize, usize),
    binomials: Vec<(Binomial, u32)>,
    rest: Option<IntPoly2>,
}

impl Side {
    /// Splits a nonzero polynomial; returns the side and whether a sign flip
    /// was absorbed.
    fn of(p: &IntPoly2) -> (Side, bool) {
        let mut negative = false;
        let c = p.content();
        let mut p = p.div_scalar_exact(&c);
        let (vq, vt) = p.valuation();
        p = p.unshift(vq, vt);
        let mut binomials = Vec::new();
        let mut cands = Vec::new();
        if let (Some(dq), Some(dt)) = (p.deg_q(), p.deg_t()) {
            for a in 0..=dq {
                for b in 0..=dt {
                    if a + b > 0 {
                        cands.push((a, b));
                    }
                }
            }
        }
        cands.sort_by_key(|&(a, b)| (a + b, std::cmp::Reverse(a)));
        for (a, b) in cands {
            if p.as_constant().is_some() {
                break;
            }
            if p.deg_q().unwrap() < a || p.deg_t().unwrap() < b {
                continue;
            }
            for plus in [false, true] {
                let f = Binomial { a, b, plus };
                let fp = f.poly();
                let mut k = 0;
                while p.as_constant().is_none() {
                    match p.divexact(&fp) {
                        Some(quot) => {
                            p = quot;
                            k += 1;
                        }
                        None => break,
                    }
                }
                if k > 0 {
                    binomials.push((f, k));
                }
            }
        }
        let rest = match p.as_constant() {
            Some(v) => {
                negative ^= v.is_negative();
                None
            }
            None => {
                let lowest = p.terms_grlex()[0].2.clone();
                if lowest.is_negative() {
                    negative = !negative;
                    Some(-p)
                } else {
                    Some(p)
                }
            }
        };
        (
            Side { integer: c, mono: (vq, vt), binomials, rest },
            negative,
        )
    }

    fn is_one(&self) -> bool {
        self.integer.is_one() && self.mono == (0, 0) && self.binomials.is_empty() && self.rest.is_none()
    }

    fn parts(&self, latex: bool) -> Vec<String> {
        let mut out = Vec::new();
        if !self.integer.is_one() {
            out.push(self.integer.to_string());
        }
        if self.mono != (0, 0) {
            out.push(if latex {
                latex_monomial(self.mono.0, self.mono.1)
            } else {
                monomial_text(self.mono.0, self.mono.1)
            });
        }
        for (f, k) in &self.binomials {
            let base = if latex {
                format!("\\left({}\\right)", f.text(true))
            } else {
                format!("({})", f.text(false))
            };
            out.push(match k {
                1 => base,
                _ if latex => format!("{base}^{{{k}}}"),
                _ => format!("{base}^{k}"),
            });
        }
        if let Some(r) = &self.rest {
            let body = if latex { latex_poly(r) } else { r.to_string() };
            out.push(if latex { format!("\\left({body}\\right)") } else { format!("({body})") });
        }
        out
    }
}

/// A rational function split into sign, integers, monomials and binomial
/// factors.
#[derive(Clone, Debug)]
pub struct Factored {
    negative: bool,
    num: Side,
    den: Side,
    zero: bool,
}

impl Factored {
    pub fn new(r: &RatFun) -> Self {
        if r.is_zero() {
            return Self { negative: false, num: Side::default(), den: Side::default(), zero: true };
        }
        let (num, sn) = Side::of(r.num());
        let (den, sd) = Side::of(r.den());
        Self { negative: sn ^ sd, num, den, zero: false }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// True when the absolute value is 1.
    pub fn is_unit(&self) -> bool {
        !self.zero && self.num.is_one() && self.den.is_one()
    }

    /// True when the absolute value renders as one parenthesized factor.
    pub fn is_single_group(&self) -> bool {
        self.den.is_one()
            && self.num.integer.is_one()
            && self.num.mono == (0, 0)
            && (self.num.binomials.len() + self.num.rest.is_some() as usize) == 1
            && self.num.binomials.iter().all(|(_, k)| *k == 1)
    }

    /// True when the absolute value is an integer.
    pub fn is_integer(&self) -> bool {
        self.den.is_one()
            && self.num.mono == (0, 0)
            && self.num.binomials.is_empty()
            && self.num.rest.is_none()
    }

    /// Plain text of the absolute value.
    pub fn magnitude_plain(&self) -> String {
        if self.zero {
            return "0".into();
        }
        let n = self.num.parts(false);
        let d = self.den.parts(false);
        let num = if n.is_empty() { "1".to_string() } else { n.join("*") };
        match d.len() {
            0 => num,
            1 => format!("{num}/{}", d[0]),
            _ => format!("{num}/({})", d.join("*")),
        }
    }

    /// LaTeX of the absolute value.
    pub fn magnitude_latex(&self) -> String {
        if self.zero {
            return "0".into();
        }
        let n = self.num.parts(true);
        let d = self.den.parts(true);
        let num = if n.is_empty() { "1".to_string() } else { n.join(" ") };
        if d.is_empty() {
            num
        } else {
            format!("\\frac{{{num}}}{{{}}}", d.join(" "))
        }
    }

    /// Plain text with sign, e.g. `-(1-q)/q`.
    pub fn plain(&self) -> String {
        let m = self.magnitude_plain();
        if !self.negative {
            m
        } else if self.is_single_group() || self.is_integer() || self.num.is_one() && self.den.is_one() {
            format!("-{m}")
        } else {
            format!("-({m})")
        }
    }

    pub fn latex(&self) -> String {
        let m = self.magnitude_latex();
        if self.negative {
            format!("-{m}")
        } else {
            m
        }
    }

    /// The magnitude as it should appear in front of a basis element: empty
    /// for 1, bare for integers and single groups, parenthesized otherwise.
    pub fn coefficient_plain(&self) -> String {
        if self.is_unit() {
            String::new()
        } else if self.is_single_group() || self.is_integer() {
            self.magnitude_plain()
        } else {
            format!("({})", self.magnitude_plain())
        }
    }
}

/// Plain factored text of a rational function.
pub fn plain(r: &RatFun) -> String {
    Factored::new(r).plain()
}

/// LaTeX factored text of a rational function.
pub fn latex(r: &RatFun) -> String {
    Factored::new(r).latex()
}

fn latex_monomial(a: usize, b: usize) -> String {
    let f = |v: &str, e: usize| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{{{e}}}"),
    };
    format!("{}{}", f("q", a), f("t", b))
}

fn latex_poly(p: &IntPoly2) -> String {
    let mut s = String::new();
    for (k, (a, b, c)) in p.terms_grlex().into_iter().enumerate() {
        let neg = c.is_negative();
        if neg {
            s.push('-');
        } else if k > 0 {
            s.push('+');
        }
        let abs = c.abs();
        let m = latex_monomial(a, b);
        if m.is_empty() {
            s.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                s.push_str(&abs.to_string());
            }
            s.push_str(&m);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn binomial_products() {
        assert_eq!(plain(&r("(1+q)*(1-t)/(1-q*t)")), "(1+q)*(1-t)/(1-q*t)");
        assert_eq!(plain(&r("1/q-1")), "(1-q)/q");
        assert_eq!(plain(&r("q-1")), "-(1-q)");
        assert_eq!(plain(&r("-q^2")), "-(q^2)");
        assert_eq!(plain(&r("(1-t)^2*(1-t^2)")), "(1-t)^3*(1+t)");
    }

    #[test]
    fn coefficient_wrapping() {
        assert_eq!(Factored::new(&r("1-t")).coefficient_plain(), "(1-t)");
        assert_eq!(Factored::new(&r("q^2")).coefficient_plain(), "(q^2)");
        assert_eq!(Factored::new(&r("1")).coefficient_plain(), "");
        assert_eq!(Factored::new(&r("1/2")).coefficient_plain(), "(1/2)");
        assert_eq!(Factored::new(&r("3")).coefficient_plain(), "3");
    }

    #[test]
    fn leftover_factor() {
        assert_eq!(plain(&r("1+q+q^2")), "(1+q+q^2)");
        assert_eq!(latex(&r("(1-t)/(1-q*t)")), "\\frac{\\left(1-t\\right)}{\\left(1-qt\\right)}");
    }
}
