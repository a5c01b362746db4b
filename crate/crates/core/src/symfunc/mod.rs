//! Symmetric functions over Q(q,t), held internally in the Schur basis.
//!
//! Inhomogeneous values are allowed everywhere (the A-candidate checker
//! mixes degrees); operations split by degree where a table is needed.

mod parse;
pub mod tables;

pub use parse::{parse_coeff, parse_symfunc};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeff::{IntPoly, RatFunc, Var};
use crate::partitions::{
    horizontal_strips_add, horizontal_strips_remove, partitions_of, vertical_strips_add,
    vertical_strips_remove, Partition,
};
use crate::{Error, Result};
use tables::{add_ribbons, remove_ribbons, tables};

/// The classical bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// monomial
    M,
    /// elementary
    E,
    /// complete homogeneous
    H,
    /// power sum
    P,
    /// Schur
    S,
    /// forgotten, `f_mu = omega(m_mu)`
    F,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
            Basis::F => 'f',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        match c {
            'm' => Some(Basis::M),
            'e' => Some(Basis::E),
            'h' => Some(Basis::H),
            'p' => Some(Basis::P),
            's' => Some(Basis::S),
            'f' => Some(Basis::F),
            _ => None,
        }
    }
}

/// A symmetric function: finite Schur-coefficient map over Q(q,t).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SymFunc {
    coeffs: BTreeMap<Partition, RatFunc>,
}

/// An expansion in one of the six classical bases; round-trips exactly
/// with [`SymFunc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn zero() -> SymFunc {
        SymFunc::default()
    }

    /// The constant 1 (the empty-partition Schur function).
    pub fn one() -> SymFunc {
        SymFunc::schur(&Partition::empty())
    }

    pub fn scalar(c: RatFunc) -> SymFunc {
        let mut f = SymFunc::zero();
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn schur(mu: &Partition) -> SymFunc {
        let mut f = SymFunc::zero();
        f.add_term(mu.clone(), RatFunc::one());
        f
    }

    pub fn h(k: u32) -> SymFunc {
        SymFunc::schur(&Partition::row(k))
    }

    pub fn e(k: u32) -> SymFunc {
        SymFunc::schur(&Partition::column(k))
    }

    pub fn p(k: u32) -> SymFunc {
        if k == 0 {
            return SymFunc::one();
        }
        let mut f = SymFunc::zero();
        for (mu, sign) in add_ribbons(&Partition::empty(), k) {
            f.add_term(mu, RatFunc::int(sign as i64));
        }
        f
    }

    /// Basis generator indexed by a partition: `h_mu`, `e_mu`, `p_mu`,
    /// `m_mu`, `f_mu`, or `s_mu`.
    pub fn generator(basis: Basis, mu: &Partition) -> SymFunc {
        match basis {
            Basis::S => SymFunc::schur(mu),
            Basis::H => mu.parts().iter().fold(SymFunc::one(), |acc, &k| acc.mult_h(k)),
            Basis::E => mu.parts().iter().fold(SymFunc::one(), |acc, &k| acc.mult_e(k)),
            Basis::P => mu.parts().iter().fold(SymFunc::one(), |acc, &k| acc.mult_p(k)),
            Basis::M | Basis::F => {
                let n = mu.size();
                let t = tables(n);
                let row = &t.m_to_s[t.idx(mu)];
                let mut f = SymFunc::zero();
                for (i, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        let lam = if basis == Basis::M {
                            t.parts[i].clone()
                        } else {
                            t.parts[i].conjugate()
                        };
                        f.add_term(lam, RatFunc::from_poly(IntPoly::constant(c.clone())));
                    }
                }
                f
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.coeffs.get(mu).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, mu: Partition, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(mu) {
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

    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            coeffs: self.coeffs.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&RatFunc) -> Result<RatFunc>) -> Result<SymFunc> {
        let mut out = SymFunc::zero();
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Split into homogeneous components by degree.
    pub fn components(&self) -> BTreeMap<u32, SymFunc> {
        let mut out: BTreeMap<u32, SymFunc> = BTreeMap::new();
        for (p, c) in &self.coeffs {
            out.entry(p.size())
                .or_default()
                .add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(|p| p.size()).max().unwrap_or(0)
    }

    /// `Some(n)` when homogeneous of degree `n` (zero counts as degree 0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for p in self.coeffs.keys() {
            match deg {
                None => deg = Some(p.size()),
                Some(d) if d != p.size() => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }

    // ---- products ----

    /// Multiply by `h_k` (Pieri: horizontal strips).
    pub fn mult_h(&self, k: u32) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.coeffs {
            for mu in horizontal_strips_add(lam, k) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// Multiply by `e_k` (dual Pieri: vertical strips).
    pub fn mult_e(&self, k: u32) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.coeffs {
            for mu in vertical_strips_add(lam, k) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// Multiply by `p_k` (Murnaghan-Nakayama: ribbons).
    pub fn mult_p(&self, k: u32) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.coeffs {
            for (mu, sign) in add_ribbons(lam, k) {
                let v = if sign >= 0 { c.clone() } else { -c };
                out.add_term(mu, v);
            }
        }
        out
    }

    /// Generic product via the power-sum basis; single-generator factors
    /// take the Pieri fast paths (the two routes agree, see tests).
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        if self.is_zero() || other.is_zero() {
            return SymFunc::zero();
        }
        if let Some(f) = self.single_generator_fast_path(other) {
            return f;
        }
        if let Some(f) = other.single_generator_fast_path(self) {
            return f;
        }
        let a = to_p_map(self);
        let b = to_p_map(other);
        let mut prod: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        for (la, ca) in &a {
            for (lb, cb) in &b {
                let key = la.merge(lb);
                let v = ca * cb;
                match prod.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(v);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = &*e.get() + &v;
                        *e.get_mut() = s;
                    }
                }
            }
        }
        from_p_map(&prod)
    }

    /// If `other` is `c * s_(k)` or `c * s_(1^k)`, multiply via Pieri.
    fn single_generator_fast_path(&self, other: &SymFunc) -> Option<SymFunc> {
        if other.coeffs.len() != 1 {
            return None;
        }
        let (p, c) = other.coeffs.iter().next().unwrap();
        if p.is_empty() {
            return Some(self.scale(c));
        }
        if p.len() == 1 {
            return Some(self.mult_h(p.part(0)).scale(c));
        }
        if p.part(0) == 1 {
            return Some(self.mult_e(p.len() as u32).scale(c));
        }
        None
    }

    // ---- scalar products ----

    /// Hall scalar product; Schur functions are orthonormal.
    pub fn hall_inner(&self, other: &SymFunc) -> RatFunc {
        let mut s = RatFunc::zero();
        for (p, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(p) {
                s = &s + &(c * d);
            }
        }
        s
    }

    /// Star scalar product: `<p_mu, p_mu>_* = (-1)^{|mu|-l(mu)}
    /// p_mu[(1-q)(1-t)] z_mu`, zero off-diagonal.
    pub fn star_inner(&self, other: &SymFunc) -> RatFunc {
        let a = to_p_map(self);
        let b = to_p_map(other);
        let mut s = RatFunc::zero();
        for (mu, ca) in &a {
            if let Some(cb) = b.get(mu) {
                s = &s + &(&(ca * cb) * &star_z(mu));
            }
        }
        s
    }

    // ---- adjoints ----

    /// `h_k^perp`: remove horizontal strips.
    pub fn perp_h(&self, k: u32) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.coeffs {
            for mu in horizontal_strips_remove(lam, k) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// `e_k^perp`: remove vertical strips.
    pub fn perp_e(&self, k: u32) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.coeffs {
            for mu in vertical_strips_remove(lam, k) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// `p_k^perp`: remove ribbons with sign.
    pub fn perp_p(&self, k: u32) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.coeffs {
            for (mu, sign) in remove_ribbons(lam, k) {
                let v = if sign >= 0 { c.clone() } else { -c };
                out.add_term(mu, v);
            }
        }
        out
    }

    /// Adjoint of multiplication: `<f^perp g, h> = <g, f h>`. `f` is
    /// decomposed in the h basis, whose perps are strip removals.
    pub fn perp(&self, g: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (deg, comp) in self.components() {
            if deg == 0 {
                let c = comp.coeff(&Partition::empty());
                out = &out + &g.scale(&c);
                continue;
            }
            let h_exp = convert(&comp, Basis::H);
            for (mu, c) in &h_exp.coeffs {
                let mut acc = g.clone();
                for &k in mu.parts() {
                    acc = acc.perp_h(k);
                    if acc.is_zero() {
                        break;
                    }
                }
                out = &out + &acc.scale(c);
            }
        }
        out
    }

    // ---- involutions ----

    /// The omega involution: `s_mu -> s_{mu'}`.
    pub fn omega(&self) -> SymFunc {
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.conjugate(), c.clone()))
                .collect(),
        }
    }

    /// The down involution `f(q,t;x) -> omega f(1/q, 1/t; x)`.
    pub fn down(&self) -> SymFunc {
        let qi = RatFunc::one().checked_div(&RatFunc::var(Var::Q)).unwrap();
        let ti = RatFunc::one().checked_div(&RatFunc::var(Var::T)).unwrap();
        self.omega().map_coeffs(|c| {
            c.specialize(&[(Var::Q, qi.clone()), (Var::T, ti.clone())])
                .expect("q,t inversion cannot hit a pole")
        })
    }

    /// Specialize q,t (and friends) in every coefficient.
    pub fn specialize(&self, bindings: &[(Var, RatFunc)]) -> Result<SymFunc> {
        self.try_map_coeffs(|c| c.specialize(bindings))
    }

    /// Canonical text form, e.g. `s[3,1] + (q+t)*s[2,2]`.
    pub fn render(&self) -> String {
        render_expansion('s', &self.coeffs)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

impl std::ops::Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

pub(crate) fn render_expansion(letter: char, coeffs: &BTreeMap<Partition, RatFunc>) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    // larger partitions first: by size descending, then descending lex
    let mut keys: Vec<&Partition> = coeffs.keys().collect();
    keys.sort_by(|a, b| {
        b.size()
            .cmp(&a.size())
            .then_with(|| b.parts().cmp(a.parts()))
    });
    let mut out = String::new();
    for (i, p) in keys.iter().enumerate() {
        let c = &coeffs[*p];
        let atom = if p.is_empty() {
            None
        } else {
            Some(format!(
                "{}[{}]",
                letter,
                p.parts()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ))
        };
        // decide sign and magnitude rendering
        let (neg, mag) = coeff_text(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match (mag, atom) {
            (m, Some(a)) if m == "1" => out.push_str(&a),
            (m, Some(a)) => {
                out.push_str(&m);
                out.push('*');
                out.push_str(&a);
            }
            (m, None) => out.push_str(&m),
        }
    }
    out
}

/// Render a coefficient as (is_negative, magnitude-text), parenthesizing
/// sums and quotients so `c*s[..]` re-parses unambiguously.
fn coeff_text(c: &RatFunc) -> (bool, String) {
    if let Some(p) = c.as_poly() {
        if p.num_terms() == 1 {
            let (m, k) = p.terms().next().unwrap();
            let neg = k < &BigInt::zero();
            let abs = IntPoly::monomial(if neg { -k } else { k.clone() }, *m);
            return (neg, abs.render());
        }
        return (false, format!("({})", p.render()));
    }
    (false, format!("({})", c.render()))
}

/// `Z_mu(q,t) = (-1)^{|mu|-l(mu)} p_mu[(1-q)(1-t)] z_mu`.
fn star_z(mu: &Partition) -> RatFunc {
    let mut p = IntPoly::constant(mu.z());
    if (mu.size() as usize - mu.len()) % 2 == 1 {
        p = -&p;
    }
    for &k in mu.parts() {
        let fq = &IntPoly::one() - &IntPoly::var_pow(Var::Q, k);
        let ft = &IntPoly::one() - &IntPoly::var_pow(Var::T, k);
        p = &(&p * &fq) * &ft;
    }
    RatFunc::from_poly(p)
}

/// Schur expansion -> power-sum coefficient map (both directions below keep
/// all degrees).
fn to_p_map(f: &SymFunc) -> BTreeMap<Partition, RatFunc> {
    let mut out: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    for (deg, comp) in f.components() {
        let t = tables(deg);
        for (lam, c) in &comp.coeffs {
            let i = t.idx(lam);
            // s_lambda = sum_mu chi^lambda_mu / z_mu p_mu
            for (j, chi) in t.p_to_s.iter().enumerate().map(|(j, row)| (j, &row[i])) {
                if chi.is_zero() {
                    continue;
                }
                let w = RatFunc::new(IntPoly::constant(chi.clone()), IntPoly::constant(t.z[j].clone()))
                    .unwrap();
                let v = c * &w;
                let key = t.parts[j].clone();
                match out.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(v);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = &*e.get() + &v;
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn from_p_map(map: &BTreeMap<Partition, RatFunc>) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, c) in map {
        if c.is_zero() {
            continue;
        }
        let t = tables(mu.size());
        let j = t.idx(mu);
        for (i, chi) in t.p_to_s[j].iter().enumerate() {
            if chi.is_zero() {
                continue;
            }
            out.add_term(
                t.parts[i].clone(),
                c * &RatFunc::from_poly(IntPoly::constant(chi.clone())),
            );
        }
    }
    out
}

/// Exact change of basis.
pub fn convert(f: &SymFunc, basis: Basis) -> BasisExpansion {
    let mut coeffs: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    match basis {
        Basis::S => {
            return BasisExpansion {
                basis,
                coeffs: f.coeffs.clone(),
            }
        }
        Basis::P => {
            return BasisExpansion {
                basis,
                coeffs: to_p_map(f),
            }
        }
        _ => {}
    }
    for (deg, comp) in f.components() {
        let t = tables(deg);
        for (lam, c) in &comp.coeffs {
            // pick the row converting s_lambda into the target basis;
            // e and f go through omega: s_lambda = omega(s_lambda'),
            // e_mu = omega(h_mu), f_mu = omega(m_mu)
            let (idx, mat): (usize, &Vec<Vec<BigInt>>) = match basis {
                Basis::H => (t.idx(lam), &t.s_to_h),
                Basis::M => (t.idx(lam), &t.s_to_m),
                Basis::E => (t.idx(&lam.conjugate()), &t.s_to_h),
                Basis::F => (t.idx(&lam.conjugate()), &t.s_to_m),
                Basis::S | Basis::P => unreachable!(),
            };
            for (j, k) in mat[idx].iter().enumerate() {
                if k.is_zero() {
                    continue;
                }
                let v = c * &RatFunc::from_poly(IntPoly::constant(k.clone()));
                let key = t.parts[j].clone();
                match coeffs.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(v);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = &*e.get() + &v;
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
    }
    coeffs.retain(|_, v| !v.is_zero());
    BasisExpansion { basis, coeffs }
}

/// Inverse of [`convert`]: rebuild the Schur form from a basis expansion.
pub fn from_expansion(exp: &BasisExpansion) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, c) in &exp.coeffs {
        let g = SymFunc::generator(exp.basis, mu);
        out = &out + &g.scale(c);
    }
    out
}

/// Straightening of a composition-indexed Schur function by the exchange
/// rule `s_(..., a, b, ...) = -s_(..., b-1, a+1, ...)`, iterated to either
/// zero or `sign * s_lambda`.
pub fn straighten_schur(alpha: &[i64]) -> Option<(i8, Partition)> {
    let mut a: Vec<i64> = alpha.to_vec();
    let mut sign = 1i8;
    'outer: loop {
        for i in 0..a.len().saturating_sub(1) {
            if a[i + 1] == a[i] + 1 {
                return None;
            }
            if a[i] < a[i + 1] {
                let (x, y) = (a[i], a[i + 1]);
                a[i] = y - 1;
                a[i + 1] = x + 1;
                sign = -sign;
                continue 'outer;
            }
        }
        break;
    }
    // weakly decreasing now; trailing zeros drop, any negative part kills it
    while a.last() == Some(&0) {
        a.pop();
    }
    if a.iter().any(|&x| x < 0) {
        return None;
    }
    Some((sign, Partition::new(a.iter().map(|&x| x as u32).collect())))
}

/// Principal specialization mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecMode {
    /// Evaluate at `k` variables equal to 1.
    Ones,
    /// Evaluate at `1, q, ..., q^{k-1}`.
    QPowers,
}

/// Evaluate `f` at a principal specialization, by the closed-form hook
/// product per Schur term. The result is cross-checked against the direct
/// monomial expansion; a mismatch is an internal arithmetic error.
pub fn principal_spec(f: &SymFunc, k: u32, mode: SpecMode) -> Result<RatFunc> {
    let mut total = RatFunc::zero();
    for (lam, c) in f.terms() {
        total = &total + &(c * &schur_principal(lam, k, mode));
    }
    let check = principal_spec_monomial(f, k, mode);
    if total != check {
        return Err(Error::Internal(format!(
            "principal specialization mismatch: hook product {} vs monomial sum {}",
            total.render(),
            check.render()
        )));
    }
    Ok(total)
}

fn schur_principal(lam: &Partition, k: u32, mode: SpecMode) -> RatFunc {
    match mode {
        SpecMode::Ones => {
            // prod over cells of (k + i - j) / hook; a nonpositive factor
            // only occurs when l(lam) > k, where a zero factor also occurs.
            let mut num = BigInt::from(1);
            let mut den = BigInt::from(1);
            for c in lam.cells() {
                let v = k as i64 + lam.content(c);
                if v <= 0 {
                    return RatFunc::zero();
                }
                num *= BigInt::from(v);
                den *= BigInt::from(lam.hook_len(c));
            }
            RatFunc::new(IntPoly::constant(num), IntPoly::constant(den)).unwrap()
        }
        SpecMode::QPowers => {
            // q^eta(lam) prod (1 - q^{k + i - j}) / (1 - q^{hook}).
            // A cell with k + i - j <= 0 only occurs when l(lam) > k, and
            // then the column-0 cell in row k contributes a zero factor.
            let mut num = IntPoly::var_pow(Var::Q, lam.eta());
            let mut den = IntPoly::one();
            for c in lam.cells() {
                let v = k as i64 + lam.content(c);
                if v <= 0 {
                    return RatFunc::zero();
                }
                num = &num * &(&IntPoly::one() - &IntPoly::var_pow(Var::Q, v as u32));
                den = &den * &(&IntPoly::one() - &IntPoly::var_pow(Var::Q, lam.hook_len(c)));
            }
            RatFunc::new(num, den).unwrap()
        }
    }
}

/// Direct evaluation by expanding in the monomial basis.
fn principal_spec_monomial(f: &SymFunc, k: u32, mode: SpecMode) -> RatFunc {
    let m_exp = convert(f, Basis::M);
    let mut total = RatFunc::zero();
    for (mu, c) in &m_exp.coeffs {
        if mu.len() > k as usize {
            continue;
        }
        total = &total + &(c * &monomial_principal(mu, k, mode));
    }
    total
}

/// `m_mu` at `k` ones or at `1, q, ..., q^{k-1}`: sum over the distinct
/// arrangements of the parts of `mu` into `k` slots.
fn monomial_principal(mu: &Partition, k: u32, mode: SpecMode) -> RatFunc {
    let mut slots: Vec<u32> = mu.parts().to_vec();
    slots.resize(k as usize, 0);
    let mut total = RatFunc::zero();
    permute_distinct(&mut slots, 0, &mut |arr| match mode {
        SpecMode::Ones => total = &total + &RatFunc::one(),
        SpecMode::QPowers => {
            let e: u32 = arr.iter().enumerate().map(|(i, &a)| i as u32 * a).sum();
            total = &total + &RatFunc::from_poly(IntPoly::var_pow(Var::Q, e));
        }
    });
    total
}

/// Visit each distinct rearrangement of `arr[i..]` exactly once.
fn permute_distinct(arr: &mut Vec<u32>, i: usize, f: &mut impl FnMut(&[u32])) {
    if i == arr.len() {
        f(arr);
        return;
    }
    let mut used = std::collections::HashSet::new();
    for j in i..arr.len() {
        if !used.insert(arr[j]) {
            continue;
        }
        arr.swap(i, j);
        permute_distinct(arr, i + 1, f);
        arr.swap(i, j);
    }
}

/// All partitions of `n`, re-exported for callers working degreewise.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_of(n)
}
