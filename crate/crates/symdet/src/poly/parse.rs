//! Recursive-descent parser for the textual polynomial syntax.
//!
//! ```text
//! poly    := ['-'] term (('+' | '-') term)*
//! term    := coeff ['*' factors] | factors
//! factors := factor ('*' factor)*
//! factor  := var ['^' nat]
//! var     := 'x' nat | 'y' | 's' nat
//! coeff   := nat ['/' nat]
//! ```
//!
//! A bare `x` (no index) is accepted as an alias for `y`, so univariate
//! inputs like `x^2 - 3*x + 2` read naturally. Whitespace is allowed
//! between tokens. Errors carry the byte offset of the offending token.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rational, VarId};

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

/// Parse a polynomial from text.
pub fn parse(text: &str) -> Result<Poly> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.syntax("empty input"));
    }
    let poly = p.parse_poly()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.input.len()
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn syntax(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_poly(&mut self) -> Result<Poly> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
            self.skip_ws();
        }
        let mut out = {
            let t = self.parse_term()?;
            if negate {
                t.neg()
            } else {
                t
            }
        };
        loop {
            self.skip_ws();
            let sub = if self.eat(b'+') {
                false
            } else if self.eat(b'-') {
                true
            } else {
                break;
            };
            self.skip_ws();
            let t = self.parse_term()?;
            out = if sub { out.sub(&t) } else { out.add(&t) };
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let coeff = self.parse_coeff()?;
                let save = self.pos;
                self.skip_ws();
                if self.eat(b'*') {
                    self.skip_ws();
                    let m = self.parse_factors()?;
                    Ok(Poly::monomial(m, coeff))
                } else {
                    self.pos = save;
                    Ok(Poly::constant(coeff))
                }
            }
            Some(b'x' | b'y' | b's') => {
                let m = self.parse_factors()?;
                Ok(Poly::monomial(m, Rational::one()))
            }
            _ => Err(self.syntax("expected a number or variable")),
        }
    }

    fn parse_factors(&mut self) -> Result<Monomial> {
        let mut m = self.parse_factor()?;
        loop {
            let save = self.pos;
            self.skip_ws();
            if self.eat(b'*') {
                self.skip_ws();
                // a '*' may also precede a numeric coefficient only at the
                // start of a term, never inside a factor chain
                if !matches!(self.peek(), Some(b'x' | b'y' | b's')) {
                    return Err(self.syntax("expected a variable after '*'"));
                }
                m = m.mul(&self.parse_factor()?);
            } else {
                self.pos = save;
                return Ok(m);
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Monomial> {
        let var = self.parse_var()?;
        let save = self.pos;
        self.skip_ws();
        let exp = if self.eat(b'^') {
            self.skip_ws();
            self.parse_exponent()?
        } else {
            self.pos = save;
            1
        };
        Ok(Monomial::var(var, exp))
    }

    fn parse_var(&mut self) -> Result<VarId> {
        let start = self.pos;
        match self.peek() {
            Some(b'y') => {
                self.pos += 1;
                Ok(VarId::Y)
            }
            Some(b'x') => {
                self.pos += 1;
                if matches!(self.peek(), Some(b'0'..=b'9')) {
                    let idx = self.parse_index(start)?;
                    if idx == 0 {
                        return Err(Error::UnknownVariable { offset: start });
                    }
                    Ok(VarId::X(idx))
                } else {
                    // bare `x` stands for the univariate indeterminate
                    Ok(VarId::Y)
                }
            }
            Some(b's') => {
                self.pos += 1;
                if !matches!(self.peek(), Some(b'0'..=b'9')) {
                    return Err(Error::UnknownVariable { offset: start });
                }
                let idx = self.parse_index(start)?;
                Ok(VarId::S(idx))
            }
            _ => Err(self.syntax("expected a variable")),
        }
    }

    fn parse_index(&mut self, start: usize) -> Result<u32> {
        let mut value: u64 = 0;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            value = value * 10 + (b - b'0') as u64;
            if value > u32::MAX as u64 {
                return Err(Error::UnknownVariable { offset: start });
            }
            self.pos += 1;
        }
        Ok(value as u32)
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        let start = self.pos;
        if !matches!(self.peek(), Some(b'0'..=b'9')) {
            return Err(self.syntax("expected an exponent"));
        }
        let mut value: u64 = 0;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            value = value * 10 + (b - b'0') as u64;
            if value > i32::MAX as u64 {
                return Err(Error::ExponentOverflow { offset: start });
            }
            self.pos += 1;
        }
        Ok(value as u32)
    }

    fn parse_coeff(&mut self) -> Result<Rational> {
        let numer = self.parse_nat()?;
        let save = self.pos;
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let denom_start = self.pos;
            let denom = self.parse_nat()?;
            if denom.is_zero() {
                return Err(Error::Syntax {
                    offset: denom_start,
                    message: "zero denominator".to_string(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            self.pos = save;
            Ok(Rational::from_integer(numer))
        }
    }

    fn parse_nat(&mut self) -> Result<BigInt> {
        if !matches!(self.peek(), Some(b'0'..=b'9')) {
            return Err(self.syntax("expected a number"));
        }
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.input[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(parse("x1").unwrap(), Poly::x(1));
        assert_eq!(parse("y").unwrap(), Poly::y());
        assert_eq!(parse("s0").unwrap(), Poly::s(0));
        assert_eq!(parse("0").unwrap(), Poly::zero());
        assert_eq!(parse("-x1").unwrap(), Poly::x(1).neg());
        assert_eq!(
            parse("3/2").unwrap(),
            Poly::constant(Rational::new(3.into(), 2.into()))
        );
    }

    #[test]
    fn bare_x_is_y() {
        assert_eq!(parse("x^2 - 3*x + 2").unwrap(), parse("y^2 - 3*y + 2").unwrap());
    }

    #[test]
    fn whitespace_and_products() {
        assert_eq!(
            parse(" 2 * x1 ^ 2 * x2 - 1 ").unwrap(),
            parse("2*x1^2*x2 - 1").unwrap()
        );
    }

    #[test]
    fn repeated_variables_multiply() {
        assert_eq!(parse("x1*x1").unwrap(), parse("x1^2").unwrap());
    }

    #[test]
    fn error_offsets() {
        match parse("x1 + @") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse("x1^9999999999") {
            Err(Error::ExponentOverflow { offset }) => assert_eq!(offset, 3),
            other => panic!("expected exponent overflow, got {other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("x0").is_err());
        assert!(parse("s").is_err());
    }
}
