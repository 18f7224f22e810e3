//! Text form of polynomials in the single variable `x`.
//!
//! ```text
//! poly  := sign? term (('+' | '-') term)*
//! term  := coeff? ('*'? 'x' ('^' uint)?)?      at least one of coeff, x
//! coeff := uint | uint '/' uint
//! ```
//!
//! Whitespace is insignificant between tokens. Like terms are collected.
//! [`format_poly`] writes the canonical form (descending exponents,
//! `c*x^e`, explicit signs) which parses back to the same polynomial.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::rational::Rational;

pub fn parse_poly(text: &str) -> Result<SparsePoly> {
    Parser::new(text).parse()
}

pub fn format_poly(p: &SparsePoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = c.abs();
        if e == 0 {
            out.push_str(&magnitude.to_string());
            continue;
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
            out.push('*');
        }
        out.push('x');
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self { src: text.as_bytes(), pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<SparsePoly> {
        if self.peek().is_none() {
            return self.error("empty polynomial");
        }
        let mut poly = SparsePoly::zero();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (exponent, coeff) = self.term()?;
            poly.add_term(exponent, if negative { -coeff } else { coeff });
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(c) => return self.error(format!("unexpected character '{}'", c as char)),
            }
            self.pos += 1;
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(u32, Rational)> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.coefficient()?),
            _ => None,
        };
        let mut star = false;
        if coeff.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            star = true;
        }
        let exponent = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.peek();
                    self.uint::<u32>("exponent")?
                } else {
                    1
                }
            }
            _ if star => return self.error("expected 'x' after '*'"),
            _ if coeff.is_none() => return self.error("expected a coefficient or 'x'"),
            _ => 0,
        };
        Ok((exponent, coeff.unwrap_or_else(Rational::one)))
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let numer: BigInt = self.uint("integer")?;
        if self.peek() != Some(b'/') {
            return Ok(Rational::from_integer(numer));
        }
        self.pos += 1;
        self.peek();
        let at = self.pos;
        let denom: BigInt = self.uint("denominator")?;
        if denom.is_zero() {
            return Err(Error::DivisionByZero { position: at });
        }
        Ok(Rational::new(numer, denom))
    }

    fn uint<T: std::str::FromStr>(&mut self, what: &str) -> Result<T> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error(format!("expected {what}"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().or_else(|_| {
            self.pos = start;
            self.error(format!("{what} out of range"))
        })
    }
}
