//! Text grammar for elements of Q(q,t).
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' exponent)?
//! exponent := '-'? integer | '(' '-'? integer ')'
//! atom   := integer | 'q' | 't' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. `^` binds tighter than unary minus, so `-q^2` is
//! `-(q^2)`.

use std::str::FromStr;

use num_bigint::BigInt;

use super::ratfun::RatFun;
use crate::error::{Error, Result};

impl FromStr for RatFun {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let v = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(v)
    }
}

/// A cursor over the input, reusable by richer grammars that embed
/// rational-function scalars.
pub struct Parser<'a> {
    src: &'a [u8],
    pub pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(s: &'a str) -> Self {
        Self { src: s.as_bytes(), pos: 0 }
    }

    pub fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    pub fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    pub fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    pub fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    pub fn expr(&mut self) -> Result<RatFun> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.unary()?;
                if rhs.is_zero() {
                    self.pos = at;
                    return Err(Error::DivisionByZero);
                }
                acc = &acc / &rhs;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFun> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFun> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let n = self.exponent()?;
        if n < 0 && base.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(base.pow(n))
    }

    fn exponent(&mut self) -> Result<i32> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let at = self.pos;
        let v = self.integer()?;
        let v: i32 = i32::try_from(v).map_err(|_| Error::Parse {
            position: at,
            message: "exponent out of range".into(),
        })?;
        if paren {
            self.expect(b')')?;
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFun::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(RatFun::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFun::from_int(self.integer()?)),
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rq::IntPoly2;

    #[test]
    fn parses_a_fraction() {
        let r: RatFun = "(1-t)/(1-q*t)".parse().unwrap();
        let expect = RatFun::new(
            IntPoly2::from_terms([(0, 0, 1), (0, 1, -1)]),
            IntPoly2::from_terms([(0, 0, 1), (1, 1, -1)]),
        )
        .unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn zero_literal_denominator() {
        assert!("1/(0)".parse::<RatFun>().is_err());
        assert!("q^-1".parse::<RatFun>().is_ok());
        assert!("0^-1".parse::<RatFun>().is_err());
    }

    #[test]
    fn positions_are_reported() {
        match "1+*q".parse::<RatFun>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!("(1-q".parse::<RatFun>().is_err());
        assert!("1 q".parse::<RatFun>().is_err());
    }

    #[test]
    fn precedence() {
        let a: RatFun = "-q^2".parse().unwrap();
        let b: RatFun = "-(q^2)".parse().unwrap();
        assert_eq!(a, b);
        let c: RatFun = "2*q^2 - 3 / t".parse().unwrap();
        assert_eq!(c.to_string(), "(-3+2*q^2*t)/(t)");
    }
}
