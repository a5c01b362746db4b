//! Multivariate integer-polynomial gcd by primitive polynomial remainder
//! sequences over a recursive univariate view. Exact and dependency-free;
//! adequate for the degree ranges arising here (tens, not thousands).

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::intpoly::{IntPoly, Mono, Var};

/// A polynomial viewed as univariate in `main` with IntPoly coefficients.
struct UniView {
    main: Var,
    // coeffs[d] is the coefficient of main^d (possibly zero).
    coeffs: Vec<IntPoly>,
}

impl UniView {
    fn new(p: &IntPoly, main: Var) -> UniView {
        let deg = p.degree_in(main) as usize;
        let mut coeffs = vec![IntPoly::zero(); deg + 1];
        for (m, c) in p.terms() {
            let e = m.exp(main) as usize;
            let mut rest = *m;
            rest.0[main as usize] = 0;
            coeffs[e].add_term(rest, c.clone());
        }
        UniView { main, coeffs }
    }

    fn to_poly(&self) -> IntPoly {
        let mut out = IntPoly::zero();
        for (d, c) in self.coeffs.iter().enumerate() {
            out += c.mul_mono(&Mono::var(self.main, d as u32));
        }
        out
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn lead(&self) -> &IntPoly {
        self.coeffs.last().unwrap()
    }

    /// Content with respect to the main variable: gcd of the coefficients.
    fn content(&self) -> IntPoly {
        let mut g = IntPoly::zero();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = poly_gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_coeffs(&self, d: &IntPoly) -> UniView {
        UniView {
            main: self.main,
            coeffs: self.coeffs.iter().map(|c| {
                if c.is_zero() {
                    IntPoly::zero()
                } else {
                    c.div_exact(d)
                }
            }).collect(),
        }
    }

    fn scale_coeffs(&self, s: &IntPoly) -> UniView {
        UniView {
            main: self.main,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Pseudo-remainder in the main variable (scaled by powers of lc(d) as
    /// needed so every step stays over the integers). The sequence below
    /// removes content after each step, so the exact scaling is immaterial.
    fn prem(&self, d: &UniView) -> UniView {
        let mut r = UniView {
            main: self.main,
            coeffs: self.coeffs.clone(),
        };
        r.normalize();
        let dd = d.degree();
        let lc_d = d.lead().clone();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let lc_r = r.lead().clone();
            // r = lc_d * r - lc_r * x^shift * d
            let mut new = r.scale_coeffs(&lc_d).coeffs;
            for (i, c) in d.coeffs.iter().enumerate() {
                let prod = c * &lc_r;
                new[i + shift] = &new[i + shift] - &prod;
            }
            r = UniView {
                main: self.main,
                coeffs: new,
            };
            r.normalize();
        }
        r
    }
}

fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::gcd(a.abs(), b.abs())
}

/// Gcd of multivariate integer polynomials, normalized so its leading
/// coefficient (graded-lex) is positive. `gcd(0, p) = ±p`.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return make_positive(b.clone());
    }
    if b.is_zero() {
        return make_positive(a.clone());
    }
    if a.is_one() || b.is_one() {
        return IntPoly::one();
    }

    // Monomial content comes out cheaply first.
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = a
        .checked_div_exact(&IntPoly::monomial(BigInt::one(), ma))
        .unwrap();
    let b1 = b
        .checked_div_exact(&IntPoly::monomial(BigInt::one(), mb))
        .unwrap();

    let ca = a1.content();
    let cb = b1.content();
    let cg = int_gcd(&ca, &cb);
    let a1 = a1.div_content(&ca);
    let b1 = b1.div_content(&cb);

    let core = if a1.is_constant() || b1.is_constant() {
        IntPoly::one()
    } else if a1 == b1 {
        a1.clone()
    } else {
        let main = pick_main_var(&a1, &b1);
        match main {
            None => IntPoly::one(),
            Some(v) => {
                let ua = UniView::new(&a1, v);
                let ub = UniView::new(&b1, v);
                primitive_prs(ua, ub, v)
            }
        }
    };

    let g = core.scale(&cg).mul_mono(&mg);
    make_positive(g)
}

fn make_positive(p: IntPoly) -> IntPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -&p,
        _ => p,
    }
}

/// Choose the variable of smallest combined degree that occurs in both
/// polynomials; if none is shared the gcd of the primitive parts is 1
/// only when neither is constant in all shared vars -- handled by caller
/// picking any variable occurring in either.
fn pick_main_var(a: &IntPoly, b: &IntPoly) -> Option<Var> {
    let mut best: Option<(u32, Var)> = None;
    for v in Var::ALL {
        let da = a.degree_in(v);
        let db = b.degree_in(v);
        if da > 0 || db > 0 {
            let w = da + db;
            if best.map_or(true, |(bw, _)| w < bw) {
                best = Some((w, v));
            }
        }
    }
    best.map(|(_, v)| v)
}

fn primitive_prs(a: UniView, b: UniView, main: Var) -> IntPoly {
    // If one is free of the main variable, gcd involves only contents.
    if a.degree() == 0 {
        return poly_gcd(&a.coeffs[0], &b.content());
    }
    if b.degree() == 0 {
        return poly_gcd(&b.coeffs[0], &a.content());
    }

    let cont_a = a.content();
    let cont_b = b.content();
    let cont_g = poly_gcd(&cont_a, &cont_b);

    let mut r0 = a.div_coeffs(&cont_a);
    let mut r1 = b.div_coeffs(&cont_b);
    if r0.degree() < r1.degree() {
        std::mem::swap(&mut r0, &mut r1);
    }

    loop {
        let mut r2 = r0.prem(&r1);
        r2.normalize();
        if r2.is_zero() {
            break;
        }
        let c = r2.content();
        r0 = r1;
        r1 = r2.div_coeffs(&c);
        if r1.degree() == 0 {
            // Primitive parts are coprime in the main variable.
            return cont_g;
        }
    }

    let pp = r1.to_poly();
    let _ = main;
    &cont_g * &pp
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
    fn one() -> IntPoly {
        IntPoly::one()
    }

    #[test]
    fn gcd_common_factor() {
        // gcd(q^2 - qt, q - t) = q - t
        let a = &q().pow(2) - &(&q() * &t());
        let b = &q() - &t();
        assert_eq!(poly_gcd(&a, &b), b);
    }

    #[test]
    fn gcd_coprime() {
        let a = &one() - &q();
        let b = &one() - &t();
        assert_eq!(poly_gcd(&a, &b), one());
    }

    #[test]
    fn gcd_sign_normalization() {
        let a = &t() - &q(); // leading coeff (graded-lex: q) negative
        let g = poly_gcd(&a, &a);
        assert_eq!(g, &q() - &t());
    }

    #[test]
    fn gcd_multivariate_products() {
        // gcd((1-q)(1-t)(1+qt), (1-q)(1+qt)) = (1-q)(1+qt) up to sign;
        // the result is normalized to a positive leading coefficient.
        let f1 = &one() - &q();
        let f2 = &one() - &t();
        let f3 = &one() + &(&q() * &t());
        let a = &(&f1 * &f2) * &f3;
        let b = &f1 * &f3;
        assert_eq!(poly_gcd(&a, &b), -&b);
    }

    #[test]
    fn gcd_with_integer_content() {
        let a = (&q() - &t()).scale(&6.into());
        let b = (&q() - &t()).scale(&4.into());
        let expect = (&q() - &t()).scale(&2.into());
        assert_eq!(poly_gcd(&a, &b), expect);
    }

    #[test]
    fn gcd_deep_powers() {
        let f = &one() - &(&q() * &t());
        let a = f.pow(4);
        let b = f.pow(3);
        // (1-qt)^3 has negative leading coefficient; gcd flips the sign.
        assert_eq!(poly_gcd(&a, &b), (&-&f).pow(3));
    }
}
