//! Exact coefficient arithmetic: sparse multivariate integer polynomials in
//! the fixed indeterminate universe `q, t, A, u, y, z`, normalized rational
//! functions (the field Q(q,t) and friends), and the greedy two-variable
//! Schur expansion of (q,t)-symmetric polynomials.

mod gcd;
mod intpoly;
mod parse;
mod ratfunc;
mod schur_qt;

pub use intpoly::{IntPoly, Mono, Var, NVARS};
pub use parse::{parse_intpoly, parse_ratfunc};
pub use ratfunc::RatFunc;
pub use schur_qt::{schur_qt_expand, two_var_schur, SchurQT};

use crate::Result;

/// Field operation selector for [`field_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Apply a field operation on canonical forms. Division by zero is reported
/// as a distinct error.
pub fn field_op(kind: FieldOp, x: &RatFunc, y: &RatFunc) -> Result<RatFunc> {
    match kind {
        FieldOp::Add => Ok(x + y),
        FieldOp::Sub => Ok(x - y),
        FieldOp::Mul => Ok(x * y),
        FieldOp::Div => x.checked_div(y),
    }
}
