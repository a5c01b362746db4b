use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Number of indeterminates in the fixed universe.
pub const NVARS: usize = 6;

/// The fixed indeterminate universe, in priority order `q > t > A > u > y > z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    T = 1,
    A = 2,
    U = 3,
    Y = 4,
    Z = 5,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::T, Var::A, Var::U, Var::Y, Var::Z];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::A => "A",
            Var::U => "u",
            Var::Y => "y",
            Var::Z => "z",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "q" => Some(Var::Q),
            "t" => Some(Var::T),
            "A" | "a" => Some(Var::A),
            "u" => Some(Var::U),
            "y" => Some(Var::Y),
            "z" => Some(Var::Z),
            _ => None,
        }
    }
}

/// Exponent vector over the fixed universe.
///
/// `Ord` is graded lexicographic with indeterminate priority
/// `q > t > A > u > y > z`: total degree first, then the exponent of `q`,
/// and so on. This is the monomial order used for leading-term extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono(pub [u32; NVARS]);

impl Mono {
    pub fn one() -> Mono {
        Mono([0; NVARS])
    }

    pub fn var(v: Var, e: u32) -> Mono {
        let mut m = [0; NVARS];
        m[v as usize] = e;
        Mono(m)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v as usize]
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i] + other.0[i];
        }
        Mono(m)
    }

    /// Componentwise quotient; `None` if not divisible.
    pub fn checked_div(&self, other: &Mono) -> Option<Mono> {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Mono(m))
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i].min(other.0[i]);
        }
        Mono(m)
    }

    fn lex_cmp(&self, other: &Mono) -> Ordering {
        for i in 0..NVARS {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. No stored coefficient is zero; iteration over terms is
/// deterministic (ascending in the graded-lex monomial order).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> IntPoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        IntPoly { terms }
    }

    pub fn var(v: Var) -> IntPoly {
        IntPoly::monomial(BigInt::one(), Mono::var(v, 1))
    }

    pub fn var_pow(v: Var, e: u32) -> IntPoly {
        IntPoly::monomial(BigInt::one(), Mono::var(v, e))
    }

    pub fn monomial(c: BigInt, m: Mono) -> IntPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        IntPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, BigInt)>) -> IntPoly {
        let mut p = IntPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::one()).map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::one()))
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Mono) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Leading term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Variables actually occurring.
    pub fn vars_used(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|&v| self.uses_var(v)).collect()
    }

    pub fn map_coeffs(&self, f: impl Fn(&BigInt) -> BigInt) -> IntPoly {
        IntPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `v -> v^k` for every indeterminate, leaving coefficients
    /// alone. This is the power-sum (Adams) action on monomial alphabets.
    pub fn frobenius(&self, k: u32) -> IntPoly {
        IntPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = [0u32; NVARS];
                    for i in 0..NVARS {
                        e[i] = m.0[i] * k;
                    }
                    (Mono(e), c.clone())
                })
                .collect(),
        }
    }

    /// Exact substitution of polynomials for a subset of indeterminates.
    pub fn substitute(&self, bindings: &[(Var, IntPoly)]) -> IntPoly {
        let mut out = IntPoly::zero();
        for (m, c) in &self.terms {
            let mut term = IntPoly::constant(c.clone());
            let mut rest = *m;
            for (v, img) in bindings {
                let e = rest.0[*v as usize];
                if e > 0 {
                    rest.0[*v as usize] = 0;
                    term = &term * &img.pow(e);
                }
            }
            out += term.mul_mono(&rest);
        }
        out
    }

    /// Greatest common divisor of all coefficients (nonnegative), zero for
    /// the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::gcd(g, c.abs());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Mono::one(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    /// Divide all coefficients by an exact common factor.
    pub fn div_content(&self, g: &BigInt) -> IntPoly {
        if g.is_one() {
            return self.clone();
        }
        IntPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c / g)).collect(),
        }
    }

    /// Exact polynomial division. `None` when the division is not exact.
    pub fn checked_div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let (dm, dc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = IntPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.checked_div(dm)?;
            let (c, r) = num_integer::div_rem(rc.clone(), dc.clone());
            if !r.is_zero() {
                return None;
            }
            quot.add_term(m, c.clone());
            rem = &rem - &d.mul_mono(&m).scale(&c);
        }
        Some(quot)
    }

    /// Exact division that must succeed (used where divisibility is an
    /// invariant, e.g. Bareiss elimination).
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        self.checked_div_exact(d)
            .expect("exact polynomial division failed")
    }

    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        super::gcd::poly_gcd(self, other)
    }

    /// Render in canonical text form: terms in descending pure-lex order with
    /// priority `q > t > A > u > y > z`, e.g. `q^3 + q^2*t + q*t + t^3`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Mono> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.lex_cmp(a));
        let mut out = String::new();
        for (i, m) in keys.iter().enumerate() {
            let c = &self.terms[m];
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.total_degree() == 0 {
                factors.push(abs.to_string());
            }
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 1 {
                    factors.push(v.name().to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", v.name(), e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl AddAssign<IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: IntPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = IntPoly::zero();
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> IntPoly {
        IntPoly::var(Var::Q)
    }
    fn t() -> IntPoly {
        IntPoly::var(Var::T)
    }

    #[test]
    fn monomial_order_graded_lex() {
        // q^2 > q*t > t^2 > q > t > 1, and degree dominates
        let qt = Mono::var(Var::Q, 1).mul(&Mono::var(Var::T, 1));
        assert!(Mono::var(Var::Q, 2) > qt);
        assert!(qt > Mono::var(Var::T, 2));
        assert!(Mono::var(Var::T, 2) > Mono::var(Var::Q, 1));
        assert!(Mono::var(Var::Q, 1) > Mono::var(Var::T, 1));
        assert!(Mono::var(Var::T, 1) > Mono::one());
    }

    #[test]
    fn ring_basics() {
        let p = &(&q() + &t()) * &(&q() - &t());
        let q2t2 = &q().pow(2) - &t().pow(2);
        assert_eq!(p, q2t2);
        assert!((&p - &q2t2).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = &q().pow(2) - &(&q() * &t()); // q(q - t)
        let d = &q() - &t();
        assert_eq!(p.checked_div_exact(&d), Some(q()));
        let nd = &q() + &IntPoly::one();
        assert_eq!(p.checked_div_exact(&nd), None);
    }

    #[test]
    fn canonical_rendering() {
        // Spec example for the normative text form.
        let p = IntPoly::from_terms([
            (Mono::var(Var::Q, 3), 1.into()),
            (Mono::var(Var::Q, 2).mul(&Mono::var(Var::T, 1)), 1.into()),
            (Mono::var(Var::Q, 1).mul(&Mono::var(Var::T, 1)), 1.into()),
            (Mono::var(Var::T, 3), 1.into()),
        ]);
        assert_eq!(p.render(), "q^3 + q^2*t + q*t + t^3");
        assert_eq!(IntPoly::zero().render(), "0");
        let m = IntPoly::from_terms([
            (Mono::one(), (-1).into()),
            (Mono::var(Var::Q, 1), 2.into()),
        ]);
        assert_eq!(m.render(), "2*q - 1");
    }

    #[test]
    fn frobenius_substitutes_powers() {
        let p = &(&q() * &t()) + &IntPoly::constant(3);
        let f = p.frobenius(2);
        let expect = &(&q().pow(2) * &t().pow(2)) + &IntPoly::constant(3);
        assert_eq!(f, expect);
    }
}
