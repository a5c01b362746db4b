use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::intpoly::{IntPoly, Var};
use crate::{Error, Result};

/// Normalized quotient of sparse integer polynomials: the coefficient field
/// Q(q,t) (with the auxiliary indeterminates A, u, y, z available).
///
/// Canonical form: gcd(num, den) is 1 up to sign and integer content, and the
/// leading coefficient of the denominator (graded-lex) is positive. Equality
/// of values is structural equality of canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn int<T: Into<BigInt>>(c: T) -> RatFunc {
        RatFunc {
            num: IntPoly::constant(c),
            den: IntPoly::one(),
        }
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(IntPoly::var(v))
    }

    pub fn from_poly(p: IntPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// Build num/den, normalizing. Errors when `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: IntPoly, den: IntPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        if den.leading().map_or(false, |(_, c)| c.is_negative()) {
            num = -&num;
            den = -&den;
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The polynomial part, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&IntPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_int(&self) -> Option<BigInt> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        // a/b / (c/d) = (a/c) * (d/b) with cross-reduction; the parts are
        // pairwise coprime afterwards, so only the sign needs fixing.
        let g1 = self.num.gcd(&rhs.num);
        let g2 = rhs.den.gcd(&self.den);
        let mut num = &self.num.div_exact(&g1) * &rhs.den.div_exact(&g2);
        let mut den = &self.den.div_exact(&g2) * &rhs.num.div_exact(&g1);
        if den.leading().map_or(false, |(_, c)| c.is_negative()) {
            num = -&num;
            den = -&den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn inverse(&self) -> Result<RatFunc> {
        RatFunc::one().checked_div(self)
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = RatFunc::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Substitute `v -> v^k` in every indeterminate (power-sum action).
    pub fn frobenius(&self, k: u32) -> RatFunc {
        Self::reduced(self.num.frobenius(k), self.den.frobenius(k))
    }

    /// Exact substitution of rational functions for a subset of
    /// indeterminates; errors when the substituted denominator vanishes.
    pub fn specialize(&self, bindings: &[(Var, RatFunc)]) -> Result<RatFunc> {
        let num = substitute_poly(&self.num, bindings);
        let den = substitute_poly(&self.den, bindings);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        num.checked_div(&den)
    }

    /// Canonical text rendering: `num` when the denominator is 1, otherwise
    /// `(num)/(den)`.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }
}

/// Substitute rational functions into an integer polynomial.
fn substitute_poly(p: &IntPoly, bindings: &[(Var, RatFunc)]) -> RatFunc {
    let used: Vec<&(Var, RatFunc)> = bindings
        .iter()
        .filter(|(v, _)| p.uses_var(*v))
        .collect();
    if used.is_empty() {
        return RatFunc::from_poly(p.clone());
    }
    let mut out = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut term = RatFunc::from_poly(IntPoly::constant(c.clone()));
        for (v, img) in &used {
            let e = rest.0[*v as usize];
            if e > 0 {
                rest.0[*v as usize] = 0;
                term = &term * &img.pow(e as i64).expect("nonnegative power");
            }
        }
        term = &term * &RatFunc::from_poly(IntPoly::monomial(1.into(), rest));
        out = &out + &term;
    }
    out
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // a/b + c/d with g0 = gcd(b,d): reduces the final gcd to gcd(t, g0).
        let g0 = self.den.gcd(&rhs.den);
        if g0.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return RatFunc::reduced(num, den);
        }
        let b1 = self.den.div_exact(&g0);
        let d1 = rhs.den.div_exact(&g0);
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        if t.is_zero() {
            return RatFunc::zero();
        }
        // gcd(t, b1) = gcd(t, d1) = 1 since num/den pairs are reduced and
        // b1, d1 are coprime; the remaining common factor divides g0.
        let g1 = t.gcd(&g0);
        let num = t.div_exact(&g1);
        let den = &self.den.div_exact(&g1) * &d1;
        RatFunc { num, den }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-reduce before multiplying out.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        RatFunc { num, den }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] where the
    /// denominator is not known to be nonzero.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{field_op, FieldOp};

    fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }
    fn t() -> RatFunc {
        RatFunc::var(Var::T)
    }
    fn one() -> RatFunc {
        RatFunc::one()
    }

    #[test]
    fn field_op_examples() {
        // mul(q-t, q+t) = q^2 - t^2
        let lhs = field_op(FieldOp::Mul, &(&q() - &t()), &(&q() + &t())).unwrap();
        let rhs = &(&q() * &q()) - &(&t() * &t());
        assert_eq!(lhs, rhs);

        // div(q^2 - qt, q - t) = q
        let p = &(&q() * &q()) - &(&q() * &t());
        let d = &q() - &t();
        assert_eq!(field_op(FieldOp::Div, &p, &d).unwrap(), q());

        // 1/(1-q) + (-q)/(1-q) = 1
        let den = &one() - &q();
        let a = one().checked_div(&den).unwrap();
        let b = (&-&q()).checked_div(&den).unwrap();
        assert_eq!(field_op(FieldOp::Add, &a, &b).unwrap(), one());
    }

    #[test]
    fn division_by_zero_is_distinct_error() {
        let e = field_op(FieldOp::Div, &one(), &RatFunc::zero());
        assert_eq!(e, Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_form_denominator_sign() {
        // 1/(t - q) normalizes to (-1)/(q - t)
        let r = RatFunc::new(IntPoly::one(), (&t() - &q()).num().clone()).unwrap();
        assert_eq!(r.den().render(), "q - t");
        assert_eq!(r.num().render(), "-1");
    }

    #[test]
    fn specialize_examples() {
        // (1 - q t) with t -> 1/q gives 0
        let p = &one() - &(&q() * &t());
        let inv_q = one().checked_div(&q()).unwrap();
        let s = p.specialize(&[(Var::T, inv_q)]).unwrap();
        assert!(s.is_zero());

        // (1-t)(1-q) with t -> 0 gives 1 - q
        let p = &(&one() - &t()) * &(&one() - &q());
        let s = p.specialize(&[(Var::T, RatFunc::zero())]).unwrap();
        assert_eq!(s, &one() - &q());

        // q + t with t -> q gives 2q
        let p = &q() + &t();
        let s = p.specialize(&[(Var::T, q())]).unwrap();
        assert_eq!(s, &RatFunc::int(2) * &q());
    }

    #[test]
    fn specialize_zero_denominator_rejected() {
        let r = one().checked_div(&(&one() - &q())).unwrap();
        let e = r.specialize(&[(Var::Q, one())]);
        assert_eq!(e, Err(Error::ZeroDenominator));
    }

    #[test]
    fn normalize_idempotent() {
        let p = &(&q() * &q()) - &(&t() * &t());
        let d = &q() - &t();
        let r = p.checked_div(&d).unwrap();
        let again = RatFunc::new(r.num().clone(), r.den().clone()).unwrap();
        assert_eq!(r, again);
        assert_eq!(r, &q() + &t());
    }
}
