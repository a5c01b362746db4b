//! Parser for symmetric-function expressions: basis atoms `s[3,1]`, `h[2,2]`,
//! `e[4]`, `p[2]`, `m[1,1]`, `f[2]` combined with `+ - * / ^ ( )` and
//! coefficient literals in the indeterminates. Products of basis atoms
//! multiply in the ring.

use num_bigint::BigInt;

use super::{Basis, SymFunc};
use crate::coeff::RatFunc;
use crate::coeff::Var;
use crate::partitions::Partition;
use crate::{Error, Result};

// Re-use the coeff tokenizer.
use crate::coeff::parse_ratfunc;

#[derive(Debug, Clone)]
enum Value {
    Scalar(RatFunc),
    Sym(SymFunc),
}

impl Value {
    fn into_sym(self) -> SymFunc {
        match self {
            Value::Scalar(c) => SymFunc::scalar(c),
            Value::Sym(f) => f,
        }
    }

    fn add(self, other: Value) -> Value {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a + &b),
            (a, b) => Value::Sym(&a.into_sym() + &b.into_sym()),
        }
    }

    fn mul(self, other: Value) -> Value {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a * &b),
            (Value::Scalar(a), Value::Sym(f)) | (Value::Sym(f), Value::Scalar(a)) => {
                Value::Sym(f.scale(&a))
            }
            (Value::Sym(f), Value::Sym(g)) => Value::Sym(f.multiply(&g)),
        }
    }

    fn div(self, other: Value) -> Result<Value> {
        match other {
            Value::Scalar(b) => match self {
                Value::Scalar(a) => Ok(Value::Scalar(a.checked_div(&b)?)),
                Value::Sym(f) => {
                    if b.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    Ok(Value::Sym(f.scale(&RatFunc::one().checked_div(&b)?)))
                }
            },
            Value::Sym(_) => Err(Error::Parse(
                "cannot divide by a symmetric function".into(),
            )),
        }
    }

    fn neg(self) -> Value {
        match self {
            Value::Scalar(a) => Value::Scalar(-&a),
            Value::Sym(f) => Value::Sym(-&f),
        }
    }
}

struct P<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> P<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.s.get(self.pos).map(|&b| b as char)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected '{c}' at position {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?);
            } else if self.eat('-') {
                acc = acc.add(self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(self.factor()?);
            } else if self.eat('/') {
                acc = acc.div(self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Value> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let n = self.integer()?;
            let e: i64 = n
                .clone()
                .try_into()
                .map_err(|_| Error::Parse("exponent too large".into()))?;
            let e = if neg { -e } else { e };
            return match base {
                Value::Scalar(a) => Ok(Value::Scalar(a.pow(e)?)),
                Value::Sym(f) => {
                    if e < 0 {
                        return Err(Error::Parse(
                            "negative power of a symmetric function".into(),
                        ));
                    }
                    let mut acc = SymFunc::one();
                    for _ in 0..e {
                        acc = acc.multiply(&f);
                    }
                    Ok(Value::Sym(acc))
                }
            };
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected integer at {}", start)));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .unwrap())
    }

    fn atom(&mut self) -> Result<Value> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Value::Scalar(RatFunc::int(self.integer()?))),
            Some(c) if c.is_ascii_alphabetic() => {
                // basis atom `b[...]` or a bare indeterminate
                let letter = c;
                let save = self.pos;
                self.pos += 1;
                if self.peek() == Some('[') {
                    let basis = Basis::from_letter(letter).ok_or_else(|| {
                        Error::Parse(format!("unknown basis letter '{letter}'"))
                    })?;
                    self.pos += 1;
                    let mut parts = Vec::new();
                    if self.peek() != Some(']') {
                        loop {
                            let n = self.integer()?;
                            let p: u32 = n
                                .try_into()
                                .map_err(|_| Error::Parse("part too large".into()))?;
                            parts.push(p);
                            if !self.eat(',') {
                                break;
                            }
                        }
                    }
                    self.expect(']')?;
                    parts.sort_unstable_by(|a, b| b.cmp(a));
                    let mu = Partition::new(parts.into_iter().filter(|&p| p > 0).collect());
                    return Ok(Value::Sym(SymFunc::generator(basis, &mu)));
                }
                // bare identifier: an indeterminate
                self.pos = save;
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos] as char).is_ascii_alphanumeric()
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                match Var::from_name(name) {
                    Some(v) => Ok(Value::Scalar(RatFunc::var(v))),
                    None => Err(Error::Parse(format!("unknown name '{name}'"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected input {other:?}"))),
        }
    }
}

/// Parse a symmetric-function expression like `p[2] + q*s[1,1]`.
pub fn parse_symfunc(input: &str) -> Result<SymFunc> {
    let mut p = P {
        s: input.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != input.len() {
        return Err(Error::Parse(format!(
            "trailing input at position {} in '{input}'",
            p.pos
        )));
    }
    Ok(v.into_sym())
}

/// Parse a plain coefficient expression (no basis atoms).
pub fn parse_coeff(input: &str) -> Result<RatFunc> {
    parse_ratfunc(input)
}
