//! Text grammar for polynomials: terms joined by `+`/`-`, each term a
//! `*`-separated product of integer or `a/b` coefficients and `x` / `x^3`
//! factors. Whitespace is ignored.

use std::sync::Arc;

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::polynomial::{PolyRing, Polynomial};
use super::PolyError;

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, text }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse { input: self.text.to_string(), message: msg.into() }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

pub(crate) fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial, PolyError> {
    let field = ring.field();
    let mut cur = Cursor::new(text);
    if cur.chars.is_empty() {
        return Err(cur.error("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let mut sign = 1i64;
        match cur.peek() {
            Some('+') => {
                cur.bump();
            }
            Some('-') => {
                cur.bump();
                sign = -1;
            }
            _ if !first => return Err(cur.error("expected '+' or '-'")),
            _ => {}
        }
        first = false;
        let mut num = BigInt::from(sign);
        let mut den = BigInt::from(1);
        let mut exps = vec![0u32; ring.nvars()];
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    num *= cur.integer()?;
                    if cur.peek() == Some('/') {
                        cur.bump();
                        den *= cur.integer()?;
                    }
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let name = cur.ident();
                    let idx = ring.index_of(&name).ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                    let mut e = 1u32;
                    if cur.peek() == Some('^') {
                        cur.bump();
                        let p = cur.integer()?;
                        e = u32::try_from(p).map_err(|_| cur.error("exponent too large"))?;
                    }
                    exps[idx] += e;
                }
                _ => return Err(cur.error("expected coefficient or variable")),
            }
            if cur.peek() == Some('*') {
                cur.bump();
            } else {
                break;
            }
        }
        let c = field.from_fraction(&num, &den).ok_or_else(|| cur.error("denominator vanishes in the field"))?;
        terms.push((c, Monomial::new(exps)));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, PolyRing};

    #[test]
    fn grammar_examples() {
        let r = PolyRing::grevlex(Field::Rational, &["x", "y"]);
        let f = r.parse(" x^2 * y - 3/4*x + 2 ").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.to_string(), "x^2*y - 3/4*x + 2");
        assert_eq!(r.parse("x*x").unwrap(), r.parse("x^2").unwrap());
        assert_eq!(r.parse("x - x").unwrap(), r.zero());
    }

    #[test]
    fn errors() {
        let r = PolyRing::grevlex(Field::Rational, &["x"]);
        assert!(matches!(r.parse("z"), Err(PolyError::UnknownVariable(_))));
        assert!(matches!(r.parse(""), Err(PolyError::Parse { .. })));
        assert!(matches!(r.parse("x +"), Err(PolyError::Parse { .. })));
        assert!(matches!(r.parse("1/0"), Err(PolyError::Parse { .. })));
        assert!(r.parse("x y").is_err());
    }
}
