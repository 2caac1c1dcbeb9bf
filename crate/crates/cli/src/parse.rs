//! Expressions over `Q(rho)` in `x, y, z`.
//!
//! ```text
//! input  := expr ('/' expr)?
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := rational | 'rho' | 'x' | 'y' | 'z' | '(' expr ')' | '-' factor
//! ```
//!
//! A rational literal is `digits` or `digits/digits` with no spaces.

use cyclify_core::poly3::{birat_from_parts, Poly3};
use cyclify_core::{BiRatFunc, Field, Scalar, Q};
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Q),
    Rho,
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < b.len() && b[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < b.len() {
        let c = b[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let end = digits(i);
                let num: BigInt = s[i..end].parse().expect("digits");
                i = end;
                if i + 1 < b.len() && b[i] == b'/' && b[i + 1].is_ascii_digit() {
                    let end = digits(i + 1);
                    let den: BigInt = s[i + 1..end].parse().expect("digits");
                    if den == BigInt::from(0) {
                        return Err(ParseError { pos: i + 1, msg: "zero denominator".into() });
                    }
                    i = end;
                    Tok::Num(Q::new(num, den))
                } else {
                    Tok::Num(Q::from_integer(num))
                }
            }
            b'a'..=b'z' => {
                let mut end = i;
                while end < b.len() && b[end].is_ascii_alphanumeric() {
                    end += 1;
                }
                let word = &s[i..end];
                i = end;
                match word {
                    "rho" => Tok::Rho,
                    "x" => Tok::Var(0),
                    "y" => Tok::Var(1),
                    "z" => Tok::Var(2),
                    _ => return Err(ParseError { pos: start, msg: format!("unknown identifier '{word}'") }),
                }
            }
            _ => {
                i += 1;
                match c {
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'/' => Tok::Slash,
                    b'^' => Tok::Caret,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    _ => return Err(ParseError { pos: start, msg: format!("unexpected character '{}'", c as char) }),
                }
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    len: usize,
    order: u32,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly3, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly3, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = acc.mul(&self.factor()?);
        }
        if matches!(self.peek(), Some(Tok::Num(_) | Tok::Rho | Tok::Var(_) | Tok::LParen)) {
            return self.err("implicit multiplication is not allowed; use '*'");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly3, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if self.eat(&Tok::Caret) {
            match self.peek().cloned() {
                Some(Tok::Num(q)) if q.is_integer() => {
                    self.at += 1;
                    let e: u32 = q
                        .to_integer()
                        .try_into()
                        .map_err(|_| ParseError { pos: self.pos(), msg: "exponent too large".into() })?;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected a natural exponent"),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly3, ParseError> {
        let Some(tok) = self.peek().cloned() else { return self.err("unexpected end of input") };
        self.at += 1;
        match tok {
            Tok::Num(q) => Ok(Poly3::constant(Scalar::rational(q))),
            Tok::Rho => {
                let r = Scalar::rho(self.order).map_err(|e| ParseError { pos: self.pos(), msg: e.to_string() })?;
                Ok(Poly3::constant(r))
            }
            Tok::Var(i) => Ok(Poly3::var(i)),
            Tok::LParen => {
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Tok::Minus => Ok(self.factor()?.neg()),
            _ => {
                self.at -= 1;
                self.err(format!("unexpected token in '{}'", self.src))
            }
        }
    }
}

/// Numerator and denominator of an expression; `rho` is a primitive
/// `order`-th root of unity.
pub fn parse_fraction(src: &str, order: u32) -> Result<(Poly3, Poly3), ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, len: src.len(), order, src };
    let num = p.expr()?;
    let den = if p.eat(&Tok::Slash) { p.expr()? } else { Poly3::one() };
    if p.peek().is_some() {
        return p.err("unexpected trailing input (division is only allowed at top level)");
    }
    if den.is_zero() {
        return Err(ParseError { pos: src.len(), msg: "division by the zero polynomial".into() });
    }
    Ok((num, den))
}

/// A polynomial (no division).
pub fn parse_poly(src: &str, order: u32) -> Result<Poly3, ParseError> {
    let (num, den) = parse_fraction(src, order)?;
    let c = match den.terms().next() {
        Some((e, c)) if *e == [0, 0, 0] && den.terms().count() == 1 => c.clone(),
        _ => return Err(ParseError { pos: 0, msg: "expected a polynomial, found a quotient".into() }),
    };
    Ok(num.scale(&c.inv().expect("nonzero constant")))
}

/// An element of `k0(x, y)`, read in the chart `z = 1`.
pub fn parse_birat(src: &str, order: u32) -> Result<BiRatFunc, ParseError> {
    let (num, den) = parse_fraction(src, order)?;
    birat_from_parts(&num.dehomogenize(), &den.dehomogenize())
        .ok_or_else(|| ParseError { pos: src.len(), msg: "division by zero after setting z = 1".into() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclify_core::poly3::format_birat;

    #[test]
    fn examples() {
        let xy = parse_poly("x*y", 2).unwrap();
        assert_eq!(xy, Poly3::var(0).mul(&Poly3::var(1)));
        let p = parse_poly("x^2+1", 2).unwrap();
        assert_eq!(p.to_string(), "x^2 + 1");
        let e = parse_birat("(y^3 - x)/(x+1)", 2).unwrap();
        assert_eq!(format_birat(&e), "(y^3 - x)/(x + 1)");
    }

    #[test]
    fn rho_and_rationals() {
        let p = parse_poly("rho*rho", 4).unwrap();
        assert_eq!(p, Poly3::constant(Scalar::int(-1)));
        let q = parse_poly("3/6 + 1/2", 2).unwrap();
        assert_eq!(q, Poly3::one());
        let half = parse_poly("-3/6", 2).unwrap();
        assert_eq!(half.to_string(), "-1/2");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_poly("x + $", 2).unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(parse_poly("2x", 2).is_err());
        assert!(parse_birat("x/(y-y)", 2).is_err());
        assert!(parse_fraction("(x/y)", 2).is_err());
    }
}
