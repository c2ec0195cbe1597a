//! Recursive-descent parser for coefficient expressions such as
//! `(q^2*z - q^-2*z^-1)/(q - q^-1)` or `1/2*q + 3`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{CoeffError, FieldElem, Rational};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> CoeffError {
        CoeffError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn expect(&mut self, c: u8) -> Result<(), CoeffError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<FieldElem, CoeffError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FieldElem, CoeffError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<FieldElem, CoeffError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<FieldElem, CoeffError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.signed_int()?;
            let e = i32::try_from(e).map_err(|_| self.err("exponent out of range"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<BigInt, CoeffError> {
        let neg = match self.peek() {
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
        let n = self.digits()?;
        Ok(if neg { -n } else { n })
    }

    fn digits(&mut self) -> Result<BigInt, CoeffError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<FieldElem, CoeffError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(FieldElem::q())
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(FieldElem::z())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(FieldElem::from_rational(Rational::from_integer(n)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub fn parse(s: &str) -> Result<FieldElem, CoeffError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parse a plain rational such as `5/7` or `-3`.
pub fn parse_rational(s: &str) -> Result<Rational, CoeffError> {
    let v = parse(s)?;
    if !v.is_polynomial() {
        return Err(CoeffError::Parse { pos: 0, msg: "not a rational number".into() });
    }
    let p = v.numerator();
    if p.is_zero() {
        return Ok(Rational::zero());
    }
    if p.len() == 1 && !p.coeff(0, 0).is_zero() {
        return Ok(p.coeff(0, 0));
    }
    Err(CoeffError::Parse { pos: 0, msg: "not a rational number".into() })
}
