//! Text grammar for polynomials: integer/rational coefficients, the
//! extension generator `c`, `^` powers, optional `*` before variables, e.g.
//! `4*x^4 + (3*c+9)*x^2*y^2 - 15*z^4`. Printing then parsing is the identity
//! on canonical forms.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::{Polynomial, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        match ch {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = bytes[start..i].iter().collect();
                out.push(Token::Int(lit.parse().expect("digits")));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                i += 1;
                while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(bytes[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn element_from_int(&self, n: &BigInt) -> FieldElement {
        let field = self.ring.field();
        match field {
            Field::Rationals => FieldElement::Q(BigRational::from(n.clone())),
            Field::RationalExt => {
                FieldElement::QExt(BigRational::from(n.clone()), BigRational::zero())
            }
            Field::Prime(p) | Field::PrimeExt(p) => {
                let m = n.mod_floor_u64(p);
                match field {
                    Field::Prime(_) => FieldElement::Zp(m),
                    _ => FieldElement::ZpExt(m, 0),
                }
            }
        }
    }

    // expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.ring.zero();
        let mut sign_neg = false;
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            sign_neg = true;
        } else if matches!(self.peek(), Some(Token::Plus)) {
            self.bump();
        }
        loop {
            let t = self.term()?;
            acc = if sign_neg { acc.sub(&t)? } else { acc.add(&t)? };
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    sign_neg = false;
                }
                Some(Token::Minus) => {
                    self.bump();
                    sign_neg = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor (['*'] factor)*, implicit product before idents/parens
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                Some(Token::Ident(_)) | Some(Token::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // factor := primary ['^' uint]
    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            match self.bump() {
                Some(Token::Int(e)) => {
                    let e = e
                        .to_u32()
                        .ok_or_else(|| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse("expected integer exponent after `^`".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Token::Int(n)) => {
                // rational literal a/b
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Token::Int(d)) => {
                            if d.is_zero() {
                                return Err(Error::DivisionByZero);
                            }
                            let num = self.ring.constant(self.element_from_int(&n));
                            let den = self.element_from_int(&d);
                            let di = self.ring.field().inv(&den)?;
                            Ok(num.scale(&di))
                        }
                        _ => Err(Error::Parse("expected denominator after `/`".into())),
                    }
                } else {
                    Ok(self.ring.constant(self.element_from_int(&n)))
                }
            }
            Some(Token::Ident(name)) => {
                if let Some(i) = self.ring.var_index(&name) {
                    return Ok(self.ring.var(i));
                }
                if name == "c" {
                    let c = self.ring.field().generator()?;
                    return Ok(self.ring.constant(c));
                }
                Err(Error::Parse(format!("unknown variable `{name}`")))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            Some(Token::Minus) => {
                // unary minus inside a term, e.g. `(-3)`
                Ok(self.factor()?.neg())
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let p_big = BigInt::from(p);
        let mut r = self % &p_big;
        if r.is_negative() {
            r += &p_big;
        }
        r.to_u64().expect("residue fits")
    }
}

/// Parses a polynomial in the text grammar over the given ring.
pub fn parse_poly(ring: &Ring, input: &str) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
    };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing tokens at position {}",
            p.pos
        )));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_example() {
        let r = Ring::xyz(Field::prime(11).unwrap());
        let f = parse_poly(&r, "4*x^4 + (3*c+9)*x^2*y^2 - 15*z^4").unwrap();
        // c = 4 mod 11, so 3c+9 = 21 = 10 and -15 = 7
        let g = parse_poly(&r, "4x^4 + 10x^2y^2 + 7z^4").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn implicit_multiplication() {
        let r = Ring::xyz(Field::rationals());
        assert_eq!(
            parse_poly(&r, "3x y^2").unwrap(),
            parse_poly(&r, "3*x*y^2").unwrap()
        );
        assert_eq!(
            parse_poly(&r, "x(y+z)").unwrap(),
            parse_poly(&r, "x*y + x*z").unwrap()
        );
    }

    #[test]
    fn rational_literals() {
        let r = Ring::xyz(Field::rationals());
        let f = parse_poly(&r, "1/2*x + 1/3*x").unwrap();
        assert_eq!(f, parse_poly(&r, "5/6 x").unwrap());
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = Ring::xyz(Field::rationals());
        assert!(parse_poly(&r, "x + w").is_err());
        // `c` needs a field that has it
        assert!(parse_poly(&r, "c*x").is_err());
        let rc = Ring::xyz(Field::RationalExt);
        assert!(parse_poly(&rc, "c*x").is_ok());
    }

    #[test]
    fn roundtrip_printed_forms() {
        let r = Ring::xyz(Field::prime(13).unwrap());
        for s in [
            "x^2 - y^2",
            "4*x^4 + 9*x^2*y^2 + 12*z^4",
            "x*y*z",
            "1",
            "0",
            "x - 1",
        ] {
            let f = parse_poly(&r, s).unwrap();
            assert_eq!(parse_poly(&r, &f.to_string()).unwrap(), f);
        }
    }
}
