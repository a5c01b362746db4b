//! Exact symbolic computation for Macdonald theory and torus-link
//! superpolynomials.
//!
//! Everything is computed over the fraction field Q(q,t) with exact sparse
//! integer-polynomial arithmetic; there is no floating point anywhere.
//! The main layers, bottom to top:
//!
//! - [`coeff`]: integer polynomials in the fixed indeterminates
//!   `q, t, A, u, y, z`, normalized rational functions, and the two-variable
//!   Schur expansion used to certify (q,t)-positivity.
//! - [`partitions`]: integer partitions, cell geometry (arm/leg/hook), the
//!   dominance order, and the (q,t) invariants `B`, `T`, `Pi`, `w`.
//! - [`symfunc`]: symmetric functions over Q(q,t) in the Schur basis, with
//!   conversions to the m/e/h/p/forgotten bases, products, scalar products,
//!   adjoints, involutions, and principal specializations.
//! - [`plethysm`]: alphabet expressions and plethystic substitution `f[A]`.
//! - [`macdonald`]: modified Macdonald polynomials, the (q,t)-Kostka matrix,
//!   and Macdonald eigenoperators (`f[B]`, `M`, nabla).
//! - [`hall`]: the positive elliptic Hall algebra operators `X^{(k,n)}`, the
//!   `D_k` series operators, pi-basis expansion, and creation families.
//! - [`knots`]: superpolynomials of torus links from hook coefficients,
//!   the t=0 evaluation, and the A-candidate checker.
//! - [`triangular`]: triangular-partition Catalan combinatorics: slope cones,
//!   area/sim statistics, and the Delta-conjecture polynomial.

pub mod coeff;
// pub mod hall;
// pub mod knots;
pub mod macdonald;
pub mod partitions;
pub mod plethysm;
pub mod symfunc;
// pub mod triangular;

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution produced a zero denominator")]
    ZeroDenominator,
    #[error("polynomial is not symmetric in q and t")]
    NotSymmetricQT,
    #[error("partitions must have equal size: |{0}| != |{1}|")]
    SizeMismatch(String, String),
    #[error("partition {0} is not contained in {1}")]
    NotContained(String, String),
    #[error("input is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal arithmetic inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
