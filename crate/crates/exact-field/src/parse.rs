// Number grammar:
//   num  := term (('+'|'-') term)*
//   term := rat | rat '*' unit | unit
//   unit := 'r2' | 'i' | 'r2*i'
//   rat  := ['-'] digits ['/' digits]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ExactNumber;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

#[derive(Clone, Copy)]
enum Unit {
    One,
    R2,
    I,
    R2I,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn unit(&mut self) -> Result<Unit, ParseError> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(b"r2") {
            self.pos += 2;
            let save = self.pos;
            if self.eat(b'*') {
                self.skip_ws();
                if self.peek() == Some(b'i') {
                    self.pos += 1;
                    return Ok(Unit::R2I);
                }
                self.pos = save;
                return self.err("expected 'i' after 'r2*'");
            }
            return Ok(Unit::R2);
        }
        if self.peek() == Some(b'i') {
            self.pos += 1;
            return Ok(Unit::I);
        }
        self.err("expected unit 'r2', 'i' or 'r2*i'")
    }

    fn term(&mut self, negate: bool) -> Result<ExactNumber, ParseError> {
        self.skip_ws();
        let mut neg = negate;
        let starts_rat = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                neg = !neg;
                self.skip_ws();
                true
            }
            Some(c) if c.is_ascii_digit() => true,
            _ => false,
        };
        let mut q = BigRational::one();
        let mut unit = Unit::One;
        if starts_rat && self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.digits()?;
            let mut den = BigInt::one();
            let save = self.pos;
            if self.eat(b'/') {
                self.skip_ws();
                den = self.digits()?;
                if den.is_zero() {
                    self.pos = save;
                    return self.err("zero denominator");
                }
            }
            q = BigRational::new(num, den);
            let save = self.pos;
            if self.eat(b'*') {
                unit = self.unit()?;
            } else {
                self.pos = save;
            }
        } else {
            unit = self.unit()?;
        }
        if neg {
            q = -q;
        }
        let z = BigRational::zero;
        Ok(match unit {
            Unit::One => ExactNumber::new(q, z(), z(), z()),
            Unit::R2 => ExactNumber::new(z(), q, z(), z()),
            Unit::I => ExactNumber::new(z(), z(), q, z()),
            Unit::R2I => ExactNumber::new(z(), z(), z(), q),
        })
    }
}

pub(crate) fn parse_number(text: &str) -> Result<ExactNumber, ParseError> {
    let mut cur = Cursor { s: text.as_bytes(), pos: 0 };
    let mut acc = cur.term(false)?;
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => return Ok(acc),
            Some(b'+') => {
                cur.pos += 1;
                acc += &cur.term(false)?;
            }
            Some(b'-') => {
                cur.pos += 1;
                acc += &cur.term(true)?;
            }
            Some(_) => return cur.err("expected '+', '-' or end of number"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_number("1/2*r2").unwrap(), ExactNumber::from_parts([(0, 1), (1, 2), (0, 1), (0, 1)]));
        assert_eq!(parse_number("-1*i").unwrap(), ExactNumber::from_parts([(0, 1), (0, 1), (-1, 1), (0, 1)]));
        assert_eq!(
            parse_number("1 + -1/2*r2*i").unwrap(),
            ExactNumber::from_parts([(1, 1), (0, 1), (0, 1), (-1, 2)])
        );
        assert_eq!(parse_number("1-i").unwrap(), ExactNumber::from_parts([(1, 1), (0, 1), (-1, 1), (0, 1)]));
        assert_eq!(parse_number("2/4").unwrap(), ExactNumber::from_ratio(1, 2));
    }

    #[test]
    fn errors_carry_position() {
        let e = parse_number("1 + x").unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(parse_number("").is_err());
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("2*r2*").is_err());
        assert!(parse_number("3 3").is_err());
    }
}
