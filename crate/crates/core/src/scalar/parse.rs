//! Recursive-descent reader for scalar expressions such as `-1/q`,
//! `(q^2 + 1)/(q - 3)` or `7/3`.

use super::Scalar;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn parse_scalar(input: &str) -> Result<Scalar> {
    Parser::new(input, None).run()
}

/// Parses with `q` replaced by the given value, when one is supplied.
pub fn parse_scalar_at(input: &str, q: Option<&Scalar>) -> Result<Scalar> {
    Parser::new(input, q.cloned()).run()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    q: Option<Scalar>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, q: Option<Scalar>) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
            q,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{} at offset {} in {:?}",
            msg,
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn run(mut self) -> Result<Scalar> {
        let v = self.expr()?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(v)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' { &acc * &rhs } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
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

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(self.q.clone().unwrap_or_else(Scalar::q))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::Rational(BigRational::from_integer(n)))
            }
            _ => Err(self.err("expected a number, 'q' or '('")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| self.err("bad integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        assert_eq!(parse_scalar("1 + 2 * 3").unwrap(), Scalar::from_i64(7));
        assert!(parse_scalar("2^3^1").is_err());
        assert_eq!(parse_scalar("-2^2").unwrap(), Scalar::from_i64(-4));
        assert_eq!(parse_scalar("q^-1 * q").unwrap(), Scalar::one());
    }

    #[test]
    fn substitution() {
        let two = Scalar::from_i64(2);
        assert_eq!(parse_scalar_at("-1/q", Some(&two)).unwrap(), Scalar::frac(-1, 2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/", "(1", "x", "1/0", "q/(q-q)"] {
            assert!(parse_scalar(bad).is_err(), "{}", bad);
        }
    }
}
