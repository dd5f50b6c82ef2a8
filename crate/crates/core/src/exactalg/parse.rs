//! Parser for the scalar text syntax.
//!
//! Accepts what [`EqScalar`]'s `Display` emits (`2*t1+2*t2`,
//! `(1/2)/(t1*t2)`, `-3/4`) and more generally any expression built from
//! integers, `t1`, `t2`, `+ - * /`, `^` with a nonnegative integer exponent,
//! and parentheses.

use num_bigint::BigInt;

use super::poly::Poly;
use super::scalar::EqScalar;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    T1,
    T2,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Int(digits.parse().expect("ascii digits")));
            }
            't' => {
                match chars.get(i + 1) {
                    Some('1') => out.push(Tok::T1),
                    Some('2') => out.push(Tok::T2),
                    _ => return Err(Error::Parse(format!("bad variable near position {i} in {s:?}"))),
                }
                i += 2;
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<EqScalar> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<EqScalar> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<EqScalar> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e: i32 = e
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    base.pow(e)
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<EqScalar> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(EqScalar::from_rational(Rational::from_integer(n))),
            Some(Tok::T1) => Ok(EqScalar::from_poly(Poly::t1())),
            Some(Tok::T2) => Ok(EqScalar::from_poly(Poly::t2())),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(v),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            Some(Tok::Minus) => Ok(-self.power()?),
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_scalar(s: &str) -> Result<EqScalar> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_display_output() {
        for s in ["2*t1+2*t2", "(1/2)/(t1*t2)", "-3/4", "t1^2-3*t2", "0", "1/2*t2^3-t1"] {
            let v = parse_scalar(s).unwrap();
            assert_eq!(v.to_string(), s, "round trip of {s}");
        }
    }

    #[test]
    fn parses_general_expressions() {
        let v = parse_scalar("(t1+t2)*(t1-t2)/(t1+t2)").unwrap();
        assert_eq!(v, EqScalar::linear(1, -1));
        assert_eq!(parse_scalar("1/2*t1").unwrap(), EqScalar::t1().scale(&Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("t3").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("(t1").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
