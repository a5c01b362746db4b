use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::intpoly::{IntPoly, Mono, Var};
use crate::{Error, Result};

/// Expansion of a (q,t)-symmetric polynomial into the two-variable Schur
/// polynomials `s_{ab}(q,t) = (q^{a+1} t^b - q^b t^{a+1})/(q - t)`.
///
/// The greedy expansion always terminates with signed integer multiplicities
/// for symmetric input, so `remainder` is structurally zero here; it is kept
/// for the reconstruction identity `sum mult*s_ab + remainder = input`.
/// Non-positivity shows up as a negative multiplicity in `pairs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurQT {
    /// Distinct, sorted pairs `(a, b, mult)` with `a >= b`.
    pub pairs: Vec<(u32, u32, BigInt)>,
    pub remainder: IntPoly,
}

impl SchurQT {
    /// True when every multiplicity is nonnegative and the remainder is zero,
    /// i.e. the input is Schur-positive in (q,t).
    pub fn is_positive(&self) -> bool {
        self.remainder.is_zero() && self.pairs.iter().all(|(_, _, m)| !m.is_negative())
    }

    pub fn reconstruct(&self) -> IntPoly {
        let mut out = self.remainder.clone();
        for (a, b, m) in &self.pairs {
            out += two_var_schur(*a, *b).scale(m);
        }
        out
    }

    /// Render e.g. `s[3] + s[1,1]`; the `(0,0)` pair renders as `1`.
    pub fn render(&self) -> String {
        if self.pairs.is_empty() && self.remainder.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut sorted = self.pairs.clone();
        sorted.sort_by(|x, y| (y.0, y.1).cmp(&(x.0, x.1)));
        for (i, (a, b, m)) in sorted.iter().enumerate() {
            let neg = m.is_negative();
            let abs = m.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let atom = if *a == 0 && *b == 0 {
                "1".to_string()
            } else if *b == 0 {
                format!("s[{}]", a)
            } else {
                format!("s[{},{}]", a, b)
            };
            if abs.is_one() {
                out.push_str(&atom);
            } else if atom == "1" {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("{}*{}", abs, atom));
            }
        }
        if !self.remainder.is_zero() {
            out.push_str(&format!(" + [{}]", self.remainder.render()));
        }
        out
    }
}

/// The two-variable Schur polynomial `s_{ab}(q,t)` for `a >= b >= 0`, as the
/// explicit monomial sum `q^a t^b + q^{a-1} t^{b+1} + ... + q^b t^a`.
pub fn two_var_schur(a: u32, b: u32) -> IntPoly {
    assert!(a >= b, "two_var_schur requires a >= b");
    let mut p = IntPoly::zero();
    for i in b..=a {
        let m = Mono::var(Var::Q, i).mul(&Mono::var(Var::T, a + b - i));
        p.add_term(m, BigInt::one());
    }
    p
}

fn is_qt_symmetric(p: &IntPoly) -> bool {
    p.terms().all(|(m, c)| {
        let mut sw = *m;
        sw.0.swap(Var::Q as usize, Var::T as usize);
        p.coeff_of(&sw) == *c
    })
}

/// Greedy expansion of a (q,t)-symmetric polynomial in the `s_{ab}(q,t)`:
/// repeatedly subtract `mult * s_ab` for the graded-lex-largest remaining
/// monomial `q^a t^b` (which has `a >= b` by symmetry). Rejects input that is
/// not symmetric under exchanging q and t, or that involves other variables.
pub fn schur_qt_expand(p: &IntPoly) -> Result<SchurQT> {
    for v in [Var::A, Var::U, Var::Y, Var::Z] {
        if p.uses_var(v) {
            return Err(Error::NotSymmetricQT);
        }
    }
    if !is_qt_symmetric(p) {
        return Err(Error::NotSymmetricQT);
    }
    let mut rest = p.clone();
    let mut pairs: Vec<(u32, u32, BigInt)> = Vec::new();
    while let Some((m, c)) = rest.leading() {
        let a = m.exp(Var::Q);
        let b = m.exp(Var::T);
        debug_assert!(a >= b, "symmetric input must have a lex-max with a >= b");
        let mult = c.clone();
        rest = &rest - &two_var_schur(a, b).scale(&mult);
        pairs.push((a, b, mult));
    }
    pairs.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
    Ok(SchurQT {
        pairs,
        remainder: IntPoly::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt_poly(terms: &[(u32, u32, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().map(|&(a, b, c)| {
            (Mono::var(Var::Q, a).mul(&Mono::var(Var::T, b)), BigInt::from(c))
        }))
    }

    #[test]
    fn expand_q_plus_t() {
        let p = qt_poly(&[(1, 0, 1), (0, 1, 1)]);
        let e = schur_qt_expand(&p).unwrap();
        assert_eq!(e.pairs, vec![(1, 0, BigInt::one())]);
        assert!(e.is_positive());
        assert_eq!(e.reconstruct(), p);
    }

    #[test]
    fn expand_p43_degree_zero_part() {
        // q^3 + q^2 t + q t^2 + t^3 + q t = s_3 + s_11
        let p = qt_poly(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)]);
        let e = schur_qt_expand(&p).unwrap();
        assert_eq!(
            e.pairs,
            vec![(1, 1, BigInt::one()), (3, 0, BigInt::one())]
        );
        assert!(e.is_positive());
        assert_eq!(e.render(), "s[3] + s[1,1]");
    }

    #[test]
    fn expand_non_positive() {
        // q^2 + t^2 = s_2 - s_11: signed expansion, flagged non-positive
        let p = qt_poly(&[(2, 0, 1), (0, 2, 1)]);
        let e = schur_qt_expand(&p).unwrap();
        assert_eq!(
            e.pairs,
            vec![(1, 1, BigInt::from(-1)), (2, 0, BigInt::one())]
        );
        assert!(!e.is_positive());
        assert_eq!(e.reconstruct(), p);
    }

    #[test]
    fn reject_asymmetric() {
        let p = qt_poly(&[(1, 0, 1)]);
        assert_eq!(schur_qt_expand(&p), Err(Error::NotSymmetricQT));
    }

    #[test]
    fn quotient_formula_matches_monomial_sum() {
        // s_ab via (q^{a+1} t^b - q^b t^{a+1})/(q-t) equals the monomial sum
        // for all a >= b <= 6.
        use crate::coeff::RatFunc;
        let q = RatFunc::var(Var::Q);
        let t = RatFunc::var(Var::T);
        for a in 0..=6u32 {
            for b in 0..=a.min(6) {
                let num = &(&q.pow(a as i64 + 1).unwrap() * &t.pow(b as i64).unwrap())
                    - &(&q.pow(b as i64).unwrap() * &t.pow(a as i64 + 1).unwrap());
                let r = num.checked_div(&(&q - &t)).unwrap();
                assert_eq!(r.as_poly().unwrap(), &two_var_schur(a, b), "a={a} b={b}");
            }
        }
    }
}
