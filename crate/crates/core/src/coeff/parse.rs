//! Parser for the canonical polynomial / rational-function text form: an
//! expression grammar over `+ - * / ^ ( )`, integer literals, and the fixed
//! indeterminates. Accepts everything [`IntPoly::render`] and
//! [`RatFunc::render`] emit.

use num_bigint::BigInt;

use super::intpoly::{IntPoly, Var};
use super::ratfunc::RatFunc;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

pub(crate) fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                it.next();
            }
            '0'..='9' => {
                let mut num = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        num.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(num.parse().unwrap()));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut id = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        id.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(id));
            }
            '+' => {
                it.next();
                out.push(Tok::Plus);
            }
            '-' => {
                it.next();
                out.push(Tok::Minus);
            }
            '*' => {
                it.next();
                out.push(Tok::Star);
            }
            '/' => {
                it.next();
                out.push(Tok::Slash);
            }
            '^' => {
                it.next();
                out.push(Tok::Caret);
            }
            '(' => {
                it.next();
                out.push(Tok::LParen);
            }
            ')' => {
                it.next();
                out.push(Tok::RParen);
            }
            '[' => {
                it.next();
                out.push(Tok::LBracket);
            }
            ']' => {
                it.next();
                out.push(Tok::RBracket);
            }
            ',' => {
                it.next();
                out.push(Tok::Comma);
            }
            _ => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor (('*'|'/') factor)*
    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    acc = acc.checked_div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := ('-')* atom ('^' int)?
    fn factor(&mut self) -> Result<RatFunc> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let mut base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let mut sign = 1i64;
            if let Some(Tok::Minus) = self.peek() {
                self.pos += 1;
                sign = -1;
            }
            match self.next() {
                Some(Tok::Int(n)) => {
                    let e: i64 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    base = base.pow(sign * e)?;
                }
                _ => return Err(Error::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.next().cloned() {
            Some(Tok::Int(n)) => Ok(RatFunc::int(n)),
            Some(Tok::Ident(id)) => match Var::from_name(&id) {
                Some(v) => Ok(RatFunc::var(v)),
                None => Err(Error::Parse(format!("unknown indeterminate '{id}'"))),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a rational function from text.
pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks: &toks, pos: 0 };
    let r = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!("trailing input in '{s}'")));
    }
    Ok(r)
}

/// Parse an integer polynomial (a rational function whose denominator is 1).
pub fn parse_intpoly(s: &str) -> Result<IntPoly> {
    let r = parse_ratfunc(s)?;
    r.as_poly()
        .cloned()
        .ok_or_else(|| Error::Parse(format!("'{s}' is not a polynomial")))
}
