//! Alphabet expressions and plethystic substitution `f[A]`.
//!
//! An alphabet's semantics is fully determined by its power-sum evaluation
//! `p_k[A]`: sums, differences, products and quotients of alphabets evaluate
//! through the rules `p_k[A+B] = p_k[A] + p_k[B]`, `p_k[AB] = p_k[A] p_k[B]`,
//! `p_k[A/B] = p_k[A]/p_k[B]`, with the atoms
//! `p_k[X] = p_k`, `p_k[eps] = (-1)^k`, `p_k[x] = x^k` for an indeterminate,
//! and `p_k[c] = c` for an integer constant.
//!
//! A second formal main alphabet `Y` is tracked alongside `X`, which is what
//! the two-alphabet identities (coproducts, Cauchy kernels) need; values
//! live in [`PairFunc`], the Schur-tensor-Schur module over Q(q,t).

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{RatFunc, Var};
use crate::partitions::Partition;
use crate::symfunc::{convert, Basis, SymFunc};
use crate::{Error, Result};

/// The scalar `M = (1-q)(1-t)`.
pub fn m_scalar() -> RatFunc {
    use crate::coeff::IntPoly;
    let q = IntPoly::var(Var::Q);
    let t = IntPoly::var(Var::T);
    let one = IntPoly::one();
    RatFunc::from_poly(&(&one - &q) * &(&one - &t))
}

/// An alphabet expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Alphabet {
    /// The main alphabet.
    X,
    /// A second, formal main alphabet.
    Y,
    /// The sign alphabet: `p_k[eps] = (-1)^k`. Kept as a first-class atom,
    /// never rewritten as -1.
    Eps,
    /// A scalar alphabet: any rational function in the indeterminates
    /// (monomials, integers, `1-q`, `(1-q)(1-t)`, ...). Its power sums
    /// substitute `v -> v^k` in every indeterminate.
    Scalar(RatFunc),
    Add(Box<Alphabet>, Box<Alphabet>),
    Sub(Box<Alphabet>, Box<Alphabet>),
    Mul(Box<Alphabet>, Box<Alphabet>),
    Div(Box<Alphabet>, Box<Alphabet>),
    Neg(Box<Alphabet>),
}

impl Alphabet {
    pub fn scalar(r: RatFunc) -> Alphabet {
        Alphabet::Scalar(r)
    }

    pub fn int(n: i64) -> Alphabet {
        Alphabet::Scalar(RatFunc::int(n))
    }

    pub fn var(v: Var) -> Alphabet {
        Alphabet::Scalar(RatFunc::var(v))
    }

    /// `(1-q)(1-t)`, the alphabet `M`.
    pub fn m_alphabet() -> Alphabet {
        Alphabet::Scalar(m_scalar())
    }

    pub fn add(a: Alphabet, b: Alphabet) -> Alphabet {
        Alphabet::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Alphabet, b: Alphabet) -> Alphabet {
        Alphabet::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Alphabet, b: Alphabet) -> Alphabet {
        Alphabet::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Alphabet, b: Alphabet) -> Alphabet {
        Alphabet::Div(Box::new(a), Box::new(b))
    }

    /// `p_k[self]` as a [`PairFunc`].
    pub fn pk_eval(&self, k: u32) -> Result<PairFunc> {
        assert!(k >= 1, "power sums are indexed from 1");
        Ok(match self {
            Alphabet::X => PairFunc::from_x(&SymFunc::p(k)),
            Alphabet::Y => PairFunc::from_y(&SymFunc::p(k)),
            Alphabet::Eps => PairFunc::scalar(RatFunc::int(if k % 2 == 0 { 1 } else { -1 })),
            Alphabet::Scalar(r) => PairFunc::scalar(r.frobenius(k)),
            Alphabet::Add(a, b) => &a.pk_eval(k)? + &b.pk_eval(k)?,
            Alphabet::Sub(a, b) => &a.pk_eval(k)? - &b.pk_eval(k)?,
            Alphabet::Neg(a) => -&a.pk_eval(k)?,
            Alphabet::Mul(a, b) => a.pk_eval(k)?.mul(&b.pk_eval(k)?),
            Alphabet::Div(a, b) => {
                let num = a.pk_eval(k)?;
                let den = b.pk_eval(k)?;
                let d = den.as_scalar().ok_or_else(|| {
                    Error::Internal("alphabet denominator must evaluate to a scalar".into())
                })?;
                if d.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                num.scale(&RatFunc::one().checked_div(&d)?)
            }
        })
    }

    /// Parse alphabet literals: `X`, `Y`, `eps`, `1-eps*A`, `X/(1-q*t)`,
    /// `1-q`, `X+Y`, ...
    pub fn parse(input: &str) -> Result<Alphabet> {
        let mut p = AParser {
            s: input.as_bytes(),
            pos: 0,
        };
        let a = p.expr()?;
        p.skip_ws();
        if p.pos != input.len() {
            return Err(Error::Parse(format!(
                "trailing input at {} in alphabet '{input}'",
                p.pos
            )));
        }
        Ok(a)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::X => write!(f, "X"),
            Alphabet::Y => write!(f, "Y"),
            Alphabet::Eps => write!(f, "eps"),
            Alphabet::Scalar(r) => write!(f, "{}", r.render()),
            Alphabet::Add(a, b) => write!(f, "({a} + {b})"),
            Alphabet::Sub(a, b) => write!(f, "({a} - {b})"),
            Alphabet::Mul(a, b) => write!(f, "({a})*({b})"),
            Alphabet::Div(a, b) => write!(f, "({a})/({b})"),
            Alphabet::Neg(a) => write!(f, "-({a})"),
        }
    }
}

struct AParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> AParser<'a> {
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

    fn expr(&mut self) -> Result<Alphabet> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Alphabet::add(acc, self.term()?);
            } else if self.eat('-') {
                acc = Alphabet::sub(acc, self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Alphabet> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = Alphabet::mul(acc, self.factor()?);
            } else if self.eat('/') {
                acc = Alphabet::div(acc, self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Alphabet> {
        if self.eat('-') {
            return Ok(Alphabet::Neg(Box::new(self.factor()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Alphabet> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let a = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                Ok(a)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos] as char).is_ascii_digit() {
                    self.pos += 1;
                }
                let n: i64 = std::str::from_utf8(&self.s[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::Parse("integer too large".into()))?;
                Ok(Alphabet::int(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos] as char).is_ascii_alphanumeric()
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                match name {
                    "X" => Ok(Alphabet::X),
                    "Y" => Ok(Alphabet::Y),
                    "eps" | "epsilon" => Ok(Alphabet::Eps),
                    _ => Var::from_name(name)
                        .map(Alphabet::var)
                        .ok_or_else(|| Error::Parse(format!("unknown alphabet atom '{name}'"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected alphabet input {other:?}"))),
        }
    }
}

/// An element of `Lambda_X (x) Lambda_Y` over Q(q,t): a finite map from
/// Schur-pair indices to coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairFunc {
    terms: BTreeMap<(Partition, Partition), RatFunc>,
}

impl PairFunc {
    pub fn zero() -> PairFunc {
        PairFunc::default()
    }

    pub fn scalar(c: RatFunc) -> PairFunc {
        let mut f = PairFunc::zero();
        f.add_term((Partition::empty(), Partition::empty()), c);
        f
    }

    pub fn from_x(f: &SymFunc) -> PairFunc {
        let mut out = PairFunc::zero();
        for (p, c) in f.terms() {
            out.add_term((p.clone(), Partition::empty()), c.clone());
        }
        out
    }

    pub fn from_y(f: &SymFunc) -> PairFunc {
        let mut out = PairFunc::zero();
        for (p, c) in f.terms() {
            out.add_term((Partition::empty(), p.clone()), c.clone());
        }
        out
    }

    pub fn add_term(&mut self, key: (Partition, Partition), c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &RatFunc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> PairFunc {
        if c.is_zero() {
            return PairFunc::zero();
        }
        PairFunc {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// The scalar value, if no X or Y component is present.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        if self.terms.is_empty() {
            return Some(RatFunc::zero());
        }
        if self.terms.len() == 1 {
            let ((px, py), c) = self.terms.iter().next().unwrap();
            if px.is_empty() && py.is_empty() {
                return Some(c.clone());
            }
        }
        None
    }

    /// The X-part, if no Y component is present.
    pub fn as_x_only(&self) -> Option<SymFunc> {
        let mut out = SymFunc::zero();
        for ((px, py), c) in &self.terms {
            if !py.is_empty() {
                return None;
            }
            out.add_term(px.clone(), c.clone());
        }
        Some(out)
    }

    pub fn mul(&self, other: &PairFunc) -> PairFunc {
        let mut out = PairFunc::zero();
        for ((ax, ay), ac) in &self.terms {
            for ((bx, by), bc) in &other.terms {
                let c = ac * bc;
                let xs = SymFunc::schur(ax).multiply(&SymFunc::schur(bx));
                let ys = SymFunc::schur(ay).multiply(&SymFunc::schur(by));
                for (px, cx) in xs.terms() {
                    for (py, cy) in ys.terms() {
                        out.add_term((px.clone(), py.clone()), &(&c * cx) * cy);
                    }
                }
            }
        }
        out
    }
}

impl std::ops::Add for &PairFunc {
    type Output = PairFunc;
    fn add(self, rhs: &PairFunc) -> PairFunc {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl std::ops::Sub for &PairFunc {
    type Output = PairFunc;
    fn sub(self, rhs: &PairFunc) -> PairFunc {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), -v);
        }
        out
    }
}

impl std::ops::Neg for &PairFunc {
    type Output = PairFunc;
    fn neg(self) -> PairFunc {
        PairFunc {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

/// Full two-alphabet plethysm `f[A]`.
pub fn plethysm2(f: &SymFunc, alphabet: &Alphabet) -> Result<PairFunc> {
    let p_exp = convert(f, Basis::P);
    let mut out = PairFunc::zero();
    for (lam, c) in &p_exp.coeffs {
        let mut term = PairFunc::scalar(RatFunc::one());
        for &k in lam.parts() {
            term = term.mul(&alphabet.pk_eval(k)?);
            if term.is_zero() {
                break;
            }
        }
        out = &out + &term.scale(c);
    }
    Ok(out)
}

/// Plethysm whose result stays in the main alphabet.
pub fn plethysm(f: &SymFunc, alphabet: &Alphabet) -> Result<SymFunc> {
    plethysm2(f, alphabet)?.as_x_only().ok_or_else(|| {
        Error::Internal("plethysm result involves the second alphabet Y".into())
    })
}

/// Plethysm at a purely scalar alphabet.
pub fn plethysm_scalar(f: &SymFunc, alphabet: &Alphabet) -> Result<RatFunc> {
    plethysm2(f, alphabet)?
        .as_scalar()
        .ok_or_else(|| Error::Internal("plethysm result is not a scalar".into()))
}

/// `s_mu[1-q]` in closed form: `(-q)^l (1-q)` when `mu = (a|l)` is a hook,
/// 1 for the empty partition, 0 otherwise.
pub fn hook_eval_1mq(mu: &Partition) -> RatFunc {
    if mu.is_empty() {
        return RatFunc::one();
    }
    match mu.as_hook() {
        None => RatFunc::zero(),
        Some((_, l)) => {
            let q = RatFunc::var(Var::Q);
            let mq = -&q;
            let mut r = &RatFunc::one() - &q;
            for _ in 0..l {
                r = &r * &mq;
            }
            r
        }
    }
}

/// Which series to take a degree slice of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `H = sum h_n`
    H,
    /// `E = sum e_n`
    E,
}

/// Degree-`n` term of `H[A]` or `E[A]`.
pub fn series_eval(kind: SeriesKind, alphabet: &Alphabet, n: u32) -> Result<PairFunc> {
    let f = match kind {
        SeriesKind::H => SymFunc::h(n),
        SeriesKind::E => SymFunc::e(n),
    };
    plethysm2(&f, alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_ratfunc;
    use crate::symfunc::parse_symfunc;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }
    fn sf(s: &str) -> SymFunc {
        parse_symfunc(s).unwrap()
    }
    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn plethysm_identity_alphabet() {
        // f[X] = f for degree <= 6
        for text in ["s[3,1]", "p[2]+q*s[1,1]", "e[4]", "h[2,2]", "s[3,2,1]"] {
            let f = sf(text);
            assert_eq!(plethysm(&f, &Alphabet::X).unwrap(), f, "{text}");
        }
    }

    #[test]
    fn en_of_minus_x_is_hn() {
        // e_n[-X] = (-1)^n h_n
        for n in 1..=5u32 {
            let lhs = plethysm(
                &SymFunc::e(n),
                &Alphabet::Neg(Box::new(Alphabet::X)),
            )
            .unwrap();
            let rhs = SymFunc::h(n).scale(&RatFunc::int(if n % 2 == 0 { 1 } else { -1 }));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn s2_of_xy_worked_example() {
        // s_2[X*Y] = s_2(X)s_2(Y) + s_11(X)s_11(Y)
        let got = plethysm2(&sf("s[2]"), &Alphabet::mul(Alphabet::X, Alphabet::Y)).unwrap();
        let mut want = PairFunc::zero();
        want.add_term((pt(&[2]), pt(&[2])), RatFunc::one());
        want.add_term((pt(&[1, 1]), pt(&[1, 1])), RatFunc::one());
        assert_eq!(got, want);
    }

    #[test]
    fn cauchy_h_n_of_xy() {
        // h_n[XY] = sum over lambda of s_lambda(X) s_lambda(Y), n <= 5
        for n in 0..=5u32 {
            let got = plethysm2(&SymFunc::h(n), &Alphabet::mul(Alphabet::X, Alphabet::Y)).unwrap();
            let mut want = PairFunc::zero();
            for lam in crate::partitions::partitions_of(n) {
                want.add_term((lam.clone(), lam.clone()), RatFunc::one());
            }
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn coproduct_h_n_of_x_plus_y() {
        // h_n[X+Y] = sum h_k(X) h_{n-k}(Y), n <= 6
        for n in 0..=6u32 {
            let got = plethysm2(&SymFunc::h(n), &Alphabet::add(Alphabet::X, Alphabet::Y)).unwrap();
            let mut want = PairFunc::zero();
            for k in 0..=n {
                want = &want
                    + &PairFunc::from_x(&SymFunc::h(k)).mul(&PairFunc::from_y(&SymFunc::h(n - k)));
            }
            assert_eq!(got, want, "n = {n}");
        }
        // e_2[X+Y] = e_2(X) + e_1(X)e_1(Y) + e_2(Y)
        let got = plethysm2(&SymFunc::e(2), &Alphabet::add(Alphabet::X, Alphabet::Y)).unwrap();
        let mut want = PairFunc::from_x(&SymFunc::e(2));
        want = &want + &PairFunc::from_y(&SymFunc::e(2));
        want = &want + &PairFunc::from_x(&SymFunc::e(1)).mul(&PairFunc::from_y(&SymFunc::e(1)));
        assert_eq!(got, want);
    }

    #[test]
    fn pk_rules_additive_multiplicative() {
        // p_k[A+B] = p_k[A] + p_k[B], p_k[A*B] = p_k[A] p_k[B]
        let alphabets = [
            Alphabet::X,
            Alphabet::Eps,
            Alphabet::scalar(rf("1-q")),
            Alphabet::scalar(rf("q*t")),
            Alphabet::div(Alphabet::X, Alphabet::scalar(rf("1-q*t"))),
        ];
        for a in &alphabets {
            for b in &alphabets {
                for k in 1..=4u32 {
                    let sum = Alphabet::add(a.clone(), b.clone());
                    let lhs = sum.pk_eval(k).unwrap();
                    let rhs = &a.pk_eval(k).unwrap() + &b.pk_eval(k).unwrap();
                    assert_eq!(lhs, rhs);
                    let prod = Alphabet::mul(a.clone(), b.clone());
                    let lhs = prod.pk_eval(k).unwrap();
                    let rhs = a.pk_eval(k).unwrap().mul(&b.pk_eval(k).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn eps_is_not_minus_one() {
        // p_k[eps] = (-1)^k but p_k[-1] = -1 for all k
        let minus_one = Alphabet::int(-1);
        assert_eq!(
            Alphabet::Eps.pk_eval(2).unwrap().as_scalar().unwrap(),
            RatFunc::one()
        );
        assert_eq!(
            minus_one.pk_eval(2).unwrap().as_scalar().unwrap(),
            RatFunc::int(-1)
        );
    }

    #[test]
    fn skewing_identity() {
        // f[X - eps*A] = sum_k A^k (e_k^perp f)(X) for degree <= 5
        let a = Alphabet::sub(
            Alphabet::X,
            Alphabet::mul(Alphabet::Eps, Alphabet::var(Var::A)),
        );
        for text in ["s[3,2]", "s[2,2,1]", "h[3,1]", "s[4,1]", "p[3]+s[1,1]"] {
            let f = sf(text);
            let lhs = plethysm(&f, &a).unwrap();
            let mut rhs = SymFunc::zero();
            for k in 0..=f.degree() {
                let ek = f.perp_e(k);
                let ak = RatFunc::var(Var::A).pow(k as i64).unwrap();
                rhs = &rhs + &ek.scale(&ak);
            }
            assert_eq!(lhs, rhs, "{text}");
        }
    }

    #[test]
    fn hook_eval_examples() {
        assert_eq!(hook_eval_1mq(&pt(&[2])), rf("1-q"));
        assert_eq!(hook_eval_1mq(&pt(&[2, 2])), RatFunc::zero());
        assert_eq!(hook_eval_1mq(&pt(&[1, 1])), rf("-q*(1-q)"));
    }

    #[test]
    fn hook_eval_agrees_with_plethysm() {
        let one_minus_q = Alphabet::scalar(rf("1-q"));
        for n in 0..=6u32 {
            for mu in crate::partitions::partitions_of(n) {
                let via_plethysm =
                    plethysm_scalar(&SymFunc::schur(&mu), &one_minus_q).unwrap();
                assert_eq!(hook_eval_1mq(&mu), via_plethysm, "{mu}");
            }
        }
    }

    #[test]
    fn hook_eval_1_minus_eps_q() {
        // s_(a|l)[1 - eps q] / (1+q) = q^l for a + l <= 6
        let alph = Alphabet::sub(
            Alphabet::int(1),
            Alphabet::mul(Alphabet::Eps, Alphabet::var(Var::Q)),
        );
        let one_plus_q = rf("1+q");
        for a in 0..=5u32 {
            for l in 0..=(6 - a - 1).min(5) {
                let mu = Partition::hook(a, l);
                let v = plethysm_scalar(&SymFunc::schur(&mu), &alph).unwrap();
                let got = v.checked_div(&one_plus_q).unwrap();
                assert_eq!(got, rf(&format!("q^{l}")), "a={a} l={l}");
            }
        }
        // s_11[1 - eps q] = q(1+q)
        let v = plethysm_scalar(&sf("s[1,1]"), &alph).unwrap();
        assert_eq!(v, rf("q*(1+q)"));
    }

    #[test]
    fn h_series_of_1mq_z() {
        // H[(1-q)z]: h_0 = 1, h_1 = (1-q)z, and in general
        // h_n[(1-q)z] = (1-q) q^0 z^n - ... matches (1-qz)/(1-z) termwise:
        // h_n[(1-q)z] = (1-q) z^n for n >= 1.
        let alph = Alphabet::scalar(rf("(1-q)*z"));
        assert_eq!(
            series_eval(SeriesKind::H, &alph, 0).unwrap().as_scalar().unwrap(),
            RatFunc::one()
        );
        for n in 1..=4u32 {
            let v = series_eval(SeriesKind::H, &alph, n)
                .unwrap()
                .as_scalar()
                .unwrap();
            assert_eq!(v, rf(&format!("(1-q)*z^{n}")), "n = {n}");
        }
        // H at X, n = 3 is h_3
        assert_eq!(
            series_eval(SeriesKind::H, &Alphabet::X, 3)
                .unwrap()
                .as_x_only()
                .unwrap(),
            SymFunc::h(3)
        );
    }

    #[test]
    fn alphabet_parsing() {
        for text in ["X", "eps", "1-eps*A", "X/(1-q*t)", "1-q", "X+Y"] {
            Alphabet::parse(text).unwrap();
        }
        let a = Alphabet::parse("X/(1-q*t)").unwrap();
        // p_2 of it: p_2 / (1 - q^2 t^2)
        let v = a.pk_eval(2).unwrap();
        let expect = PairFunc::from_x(&SymFunc::p(2))
            .scale(&RatFunc::one().checked_div(&rf("1-q^2*t^2")).unwrap());
        assert_eq!(v, expect);
    }
}
