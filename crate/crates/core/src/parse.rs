//! Parser for the polynomial input grammar.
//!
//! ```text
//! expr   := [+|-] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' UINT)?
//! atom   := INT ('/' INT)? | IDENT | '(' expr ')'
//! IDENT  := [A-Za-z][A-Za-z0-9_]* '\''?
//! ```
//!
//! `*` is mandatory between factors and `^` takes a nonnegative integer
//! literal. Integer literals may carry a `/denominator` suffix so that any
//! printed polynomial parses back; plain spec-grammar input never needs it.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::Polynomial;
use crate::variables::VariableSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error("division by zero in coefficient")]
    ZeroDenominator,
    #[error("unexpected trailing input")]
    TrailingInput,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                toks.push((Tok::Int(n), start));
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'\'' {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_owned()), start));
            }
            _ => {
                let c = text[i..].chars().next().unwrap();
                return Err(ParseError {
                    position: i,
                    kind: ParseErrorKind::UnexpectedChar(c),
                });
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Arc<VariableSet>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.here(),
            kind,
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.try_add(&t).expect("parser builds over one ring");
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.try_sub(&t).expect("parser builds over one ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            let f = self.factor()?;
            acc = acc.try_mul(&f).expect("parser builds over one ring");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| {
                            self.pos -= 1;
                            self.err(ParseErrorKind::ExponentTooLarge)
                        })?;
                    Ok(base.pow(e))
                }
                Some(Tok::Minus) => {
                    self.pos -= 1;
                    Err(self.err(ParseErrorKind::NegativeExponent))
                }
                _ => {
                    if self.pos > 0 {
                        self.pos -= 1;
                    }
                    Err(self.err(ParseErrorKind::Expected("a nonnegative integer exponent")))
                }
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let start = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let mut q = BigRational::from_integer(n);
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(ParseError {
                                    position: start,
                                    kind: ParseErrorKind::ZeroDenominator,
                                });
                            }
                            q /= BigRational::from_integer(d);
                        }
                        _ => {
                            if self.pos > 0 {
                                self.pos -= 1;
                            }
                            return Err(self.err(ParseErrorKind::Expected("an integer denominator")));
                        }
                    }
                }
                Ok(Polynomial::constant(self.ring, q))
            }
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring, i)),
                None => Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::UnknownIdentifier(name),
                }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        if self.pos > 0 {
                            self.pos -= 1;
                        }
                        Err(self.err(ParseErrorKind::Expected("`)`")))
                    }
                }
            }
            _ => {
                if self.pos > 0 {
                    self.pos -= 1;
                }
                Err(self.err(ParseErrorKind::Expected("a number, variable or `(`")))
            }
        }
    }
}

/// Parse `text` as a polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<VariableSet>) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        ring,
        end: text.len(),
    };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(parser.err(ParseErrorKind::TrailingInput));
    }
    Ok(p)
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Star => write!(f, "*"),
            Tok::Caret => write!(f, "^"),
            Tok::Slash => write!(f, "/"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ExponentVector;
    use num_traits::One;

    fn ring2() -> Arc<VariableSet> {
        VariableSet::plain(&["x", "y"]).unwrap()
    }

    #[test]
    fn zero_polynomial() {
        let r = ring2();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
    }

    #[test]
    fn single_monomial() {
        let r = ring2();
        let p = parse_polynomial("x^2", &r).unwrap();
        assert_eq!(p.num_terms(), 1);
        let (e, c) = p.terms().next().unwrap();
        assert_eq!(e, &ExponentVector::from_vec(vec![2, 0]));
        assert!(c.is_one());
    }

    #[test]
    fn two_terms_with_signs() {
        let r = ring2();
        let p = parse_polynomial("x^3-x*y", &r).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(
            p.coefficient(&ExponentVector::from_vec(vec![3, 0])),
            BigRational::one()
        );
        assert_eq!(
            p.coefficient(&ExponentVector::from_vec(vec![1, 1])),
            -BigRational::one()
        );
    }

    #[test]
    fn primed_identifiers() {
        let r = ring2().primed_extension().unwrap();
        let p = parse_polynomial("y^2 + y*y' + y'^2 + x'", &r).unwrap();
        assert_eq!(p.num_terms(), 4);
    }

    #[test]
    fn parens_and_products() {
        let r = ring2();
        let p = parse_polynomial("(x + y)*(x - y)", &r).unwrap();
        assert_eq!(p, parse_polynomial("x^2 - y^2", &r).unwrap());
    }

    #[test]
    fn unknown_identifier_with_position() {
        let r = ring2();
        let e = parse_polynomial("x + zz^2", &r).unwrap_err();
        assert_eq!(e.position, 4);
        assert!(matches!(e.kind, ParseErrorKind::UnknownIdentifier(ref s) if s == "zz"));
    }

    #[test]
    fn negative_exponent_is_rejected() {
        let r = ring2();
        let e = parse_polynomial("x^-2", &r).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NegativeExponent));
        assert_eq!(e.position, 2);
    }

    #[test]
    fn malformed_syntax() {
        let r = ring2();
        assert!(parse_polynomial("x +", &r).is_err());
        assert!(parse_polynomial("(x", &r).is_err());
        assert!(parse_polynomial("x y", &r).is_err()); // * is mandatory
        assert!(parse_polynomial("x $ y", &r).is_err());
        assert!(parse_polynomial("3/0", &r).is_err());
    }

    #[test]
    fn parse_print_parse_is_idempotent() {
        let r = ring2();
        for s in ["0", "x^2", "x^3-x*y", "2 - x*y + x*y", "(x+y)^3"] {
            let once = parse_polynomial(s, &r).unwrap();
            let twice = parse_polynomial(&once.to_string(), &r).unwrap();
            assert_eq!(once, twice);
        }
    }
}
