//! Modified Macdonald polynomials, the (q,t)-Kostka matrix, and the
//! Macdonald eigenoperators `f[B]`, `M`, and nabla.
//!
//! `macH(mu)` solves the defining triangularity system: the Schur
//! coefficients of `H_mu` are the unique solution of
//! `<H_mu, s_n> = 1`, `<H_mu[X(1-q)], s_lambda> = 0` for `lambda` not
//! above `mu` in dominance order, and `<H_mu[X(1-t)], s_lambda> = 0` for
//! `lambda` not above `mu'`. The elimination is fraction-free
//! (Bareiss-style) over integer polynomials; tables are memoized per degree.

pub mod cache;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coeff::{IntPoly, RatFunc, Var};
use crate::partitions::{dominance_leq, partitions_of, qt_invariants, Partition};
use crate::plethysm::{plethysm, plethysm_scalar, Alphabet};
use crate::symfunc::SymFunc;
use crate::{Error, Result};

/// Per-degree Macdonald data.
pub struct MacTable {
    pub degree: u32,
    /// Partitions of the degree in descending lexicographic order.
    pub parts: Vec<Partition>,
    /// `kostka[mu][lambda] = K~_{mu lambda}` with
    /// `H_mu = sum_lambda K~_{mu lambda} s_lambda`.
    pub kostka: Vec<Vec<RatFunc>>,
    /// `s_lambda = sum_mu inverse[lambda][mu] H_mu`.
    pub inverse: Vec<Vec<RatFunc>>,
}

impl MacTable {
    pub fn idx(&self, p: &Partition) -> usize {
        self.parts.iter().position(|q| q == p).expect("partition of the right size")
    }

    pub fn mac_h(&self, mu: &Partition) -> SymFunc {
        let i = self.idx(mu);
        let mut f = SymFunc::zero();
        for (j, c) in self.kostka[i].iter().enumerate() {
            f.add_term(self.parts[j].clone(), c.clone());
        }
        f
    }
}

/// The matrix of `f -> f[X(1-v)]` on the Schur basis at a fixed degree:
/// `s_nu[X(1-v)] = sum_lambda mat[nu][lambda] s_lambda`.
fn twist_matrix(n: u32, v: Var) -> Vec<Vec<RatFunc>> {
    let parts = partitions_of(n);
    let alph = Alphabet::mul(
        Alphabet::X,
        Alphabet::sub(Alphabet::int(1), Alphabet::var(v)),
    );
    parts
        .iter()
        .map(|nu| {
            let img = plethysm(&SymFunc::schur(nu), &alph).expect("polynomial alphabet");
            parts.iter().map(|lam| img.coeff(lam)).collect()
        })
        .collect()
}

/// Used by cache validation: the coefficient of `s_lambda` in
/// `(sum_nu row[nu] s_nu)[X(1-q)]`.
pub(crate) fn build_twist_row_check(
    parts: &[Partition],
    row: &[RatFunc],
    lam: &Partition,
) -> RatFunc {
    let alph = Alphabet::mul(
        Alphabet::X,
        Alphabet::sub(Alphabet::int(1), Alphabet::var(Var::Q)),
    );
    let mut total = RatFunc::zero();
    for (i, nu) in parts.iter().enumerate() {
        if row[i].is_zero() {
            continue;
        }
        let img = plethysm(&SymFunc::schur(nu), &alph).expect("polynomial alphabet");
        total = &total + &(&row[i] * &img.coeff(lam));
    }
    total
}

/// Fraction-free (Bareiss) row reduction of an integer-polynomial matrix,
/// returning the solution of the overdetermined consistent system
/// `rows * c = rhs`.
fn solve_bareiss(mut m: Vec<Vec<IntPoly>>, ncols: usize) -> Result<Vec<RatFunc>> {
    // m rows are augmented: ncols coefficient columns plus one rhs column.
    let nrows = m.len();
    let mut prev = IntPoly::one();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0usize;
    for col in 0..ncols {
        // choose the sparsest nonzero pivot in this column at or below rank
        let pivot_row = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].num_terms());
        let Some(pr) = pivot_row else { continue };
        m.swap(rank, pr);
        let pivot = m[rank][col].clone();
        // every row strictly below the pivot is transformed, including rows
        // with a zero in the pivot column (they pick up the pivot/prev
        // rescaling) -- this is what keeps the divisions exact.
        for r in (rank + 1)..nrows {
            let factor = m[r][col].clone();
            for c in 0..=ncols {
                let a = if factor.is_zero() {
                    &m[r][c] * &pivot
                } else {
                    &(&m[r][c] * &pivot) - &(&m[rank][c] * &factor)
                };
                m[r][c] = a.div_exact(&prev);
            }
        }
        prev = pivot;
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    // consistency: any leftover row must be all zero including rhs
    for r in rank..nrows {
        if m[r].iter().any(|e| !e.is_zero()) {
            return Err(Error::Internal(
                "macdonald system is inconsistent".into(),
            ));
        }
    }
    if pivot_of_col.iter().any(|p| p.is_none()) {
        return Err(Error::Internal(
            "macdonald system is underdetermined".into(),
        ));
    }
    // back-substitute in echelon form
    let mut sol = vec![RatFunc::zero(); ncols];
    for col in (0..ncols).rev() {
        let row = pivot_of_col[col].unwrap();
        let mut rhs = RatFunc::from_poly(m[row][ncols].clone());
        for c in (col + 1)..ncols {
            if !m[row][c].is_zero() {
                rhs = &rhs - &(&RatFunc::from_poly(m[row][c].clone()) * &sol[c]);
            }
        }
        sol[col] = rhs.checked_div(&RatFunc::from_poly(m[row][col].clone()))?;
    }
    Ok(sol)
}

fn build_table(n: u32) -> Result<MacTable> {
    let parts = partitions_of(n);
    let np = parts.len();
    let tq = twist_matrix(n, Var::Q);
    let tt = twist_matrix(n, Var::T);
    // all twist entries are polynomials
    let poly = |r: &RatFunc| -> IntPoly {
        r.as_poly().cloned().expect("twist matrices are polynomial")
    };

    let mut kostka = Vec::with_capacity(np);
    for mu in &parts {
        let mut rows: Vec<Vec<IntPoly>> = Vec::new();
        // condition (1): coefficient of s_(n) is 1
        let mut r0 = vec![IntPoly::zero(); np + 1];
        r0[0] = IntPoly::one(); // index 0 is (n) in descending lex
        r0[np] = IntPoly::one();
        rows.push(r0);
        // condition (2): <H[X(1-q)], s_lambda> = 0 unless lambda >= mu
        for (j, lam) in parts.iter().enumerate() {
            if !dominance_leq(mu, lam)? {
                let mut row = vec![IntPoly::zero(); np + 1];
                for (i, _) in parts.iter().enumerate() {
                    row[i] = poly(&tq[i][j]);
                }
                rows.push(row);
            }
        }
        // condition (3): <H[X(1-t)], s_lambda> = 0 unless lambda >= mu'
        let conj = mu.conjugate();
        for (j, lam) in parts.iter().enumerate() {
            if !dominance_leq(&conj, lam)? {
                let mut row = vec![IntPoly::zero(); np + 1];
                for (i, _) in parts.iter().enumerate() {
                    row[i] = poly(&tt[i][j]);
                }
                rows.push(row);
            }
        }
        let sol = solve_bareiss(rows, np).map_err(|e| match e {
            Error::Internal(msg) => {
                Error::Internal(format!("macH({mu}) failed: {msg}"))
            }
            other => other,
        })?;
        kostka.push(sol);
    }

    let inverse = invert_ratfunc_matrix(&kostka)?;
    Ok(MacTable {
        degree: n,
        parts,
        kostka,
        inverse,
    })
}

/// Straightforward Gauss-Jordan inverse over the rational-function field.
fn invert_ratfunc_matrix(m: &[Vec<RatFunc>]) -> Result<Vec<Vec<RatFunc>>> {
    let n = m.len();
    let mut a: Vec<Vec<RatFunc>> = m.to_vec();
    let mut inv: Vec<Vec<RatFunc>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pr = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Internal("singular Kostka matrix".into()))?;
        a.swap(col, pr);
        inv.swap(col, pr);
        let piv = a[col][col].clone();
        for j in 0..n {
            a[col][j] = a[col][j].checked_div(&piv)?;
            inv[col][j] = inv[col][j].checked_div(&piv)?;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
            }
        }
    }
    // inverse[lambda][mu]: s_lambda = sum_mu inverse[lambda][mu] H_mu, which
    // is the transpose-free inverse of kostka viewed as H = K s.
    Ok(inv)
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<MacTable>>>> = OnceLock::new();

fn table_store() -> &'static Mutex<HashMap<u32, Arc<MacTable>>> {
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The memoized Macdonald table for degree `n`.
pub fn mac_table(n: u32) -> Arc<MacTable> {
    if let Some(t) = table_store().lock().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(build_table(n).expect("macdonald system has a unique solution"));
    table_store()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(built)
        .clone()
}

/// Install a table computed elsewhere (e.g. loaded from the CLI cache).
/// The table must already be validated; see [`cache`].
pub fn install_table(table: MacTable) {
    table_store()
        .lock()
        .unwrap()
        .entry(table.degree)
        .or_insert_with(|| Arc::new(table));
}

/// Whether a table for degree `n` is already in memory.
pub fn table_in_memory(n: u32) -> bool {
    table_store().lock().unwrap().contains_key(&n)
}

/// The modified Macdonald polynomial `H_mu` in the Schur basis.
pub fn mac_h(mu: &Partition) -> SymFunc {
    mac_table(mu.size()).mac_h(mu)
}

/// The (q,t)-Kostka matrix at degree `n`: entry `(lambda, mu)` is
/// `K~_{lambda mu}` with `H_lambda = sum_mu K~ s_mu`; rows and columns run
/// over partitions of `n` in descending lexicographic order.
pub fn kostka_matrix(n: u32) -> Vec<Vec<RatFunc>> {
    assert!(n >= 1);
    mac_table(n).kostka.clone()
}

/// A symmetric function expanded in the `{H_mu}` basis at a fixed degree.
#[derive(Debug, Clone, PartialEq)]
pub struct MacExpansion {
    pub degree: u32,
    pub coeffs: Vec<(Partition, RatFunc)>,
}

impl MacExpansion {
    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.coeffs
            .iter()
            .find(|(p, _)| p == mu)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(RatFunc::zero)
    }

    /// Convert back to the Schur basis.
    pub fn to_symfunc(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (mu, c) in &self.coeffs {
            out = &out + &mac_h(mu).scale(c);
        }
        out
    }
}

/// Expand a homogeneous `f` of degree `n` in the Macdonald basis.
pub fn to_mac_basis(f: &SymFunc, n: u32) -> Result<MacExpansion> {
    if f.homogeneous_degree() != Some(n) && !f.is_zero() {
        return Err(Error::NotHomogeneous(n as usize));
    }
    let t = mac_table(n);
    let mut coeffs = Vec::new();
    for (mu_idx, mu) in t.parts.iter().enumerate() {
        let mut c = RatFunc::zero();
        for (lam, flam) in f.terms() {
            let lam_idx = t.idx(lam);
            c = &c + &(flam * &t.inverse[lam_idx][mu_idx]);
        }
        if !c.is_zero() {
            coeffs.push((mu.clone(), c));
        }
    }
    Ok(MacExpansion { degree: n, coeffs })
}

/// A Macdonald eigenoperator: each `H_mu` is scaled by an eigenvalue
/// computable from the (q,t) invariants of `mu`.
#[derive(Debug, Clone)]
pub enum EigenSpec {
    /// `f[B]`: eigenvalue `f[B_mu(q,t)]`.
    Delta(SymFunc),
    /// `f[B-bar]`: eigenvalue `f[B_mu(1/q,1/t)]`.
    DeltaBar(SymFunc),
    /// The scalar `M = (1-q)(1-t)`.
    ScalarM,
    /// The scalar `M-bar = (1-1/q)(1-1/t)`.
    ScalarMBar,
    /// `nabla^{+-1}`: eigenvalue `T_mu^{+-1}`.
    Nabla(i8),
}

impl EigenSpec {
    pub fn eigenvalue(&self, mu: &Partition) -> Result<RatFunc> {
        let inv = qt_invariants(mu);
        match self {
            EigenSpec::Delta(f) => {
                plethysm_scalar(f, &Alphabet::scalar(RatFunc::from_poly(inv.b)))
            }
            EigenSpec::DeltaBar(f) => {
                let qinv = RatFunc::one().checked_div(&RatFunc::var(Var::Q))?;
                let tinv = RatFunc::one().checked_div(&RatFunc::var(Var::T))?;
                let bbar = RatFunc::from_poly(inv.b)
                    .specialize(&[(Var::Q, qinv), (Var::T, tinv)])?;
                plethysm_scalar(f, &Alphabet::scalar(bbar))
            }
            EigenSpec::ScalarM => Ok(crate::plethysm::m_scalar()),
            EigenSpec::ScalarMBar => {
                let q = RatFunc::var(Var::Q);
                let t = RatFunc::var(Var::T);
                let a = &RatFunc::one() - &RatFunc::one().checked_div(&q)?;
                let b = &RatFunc::one() - &RatFunc::one().checked_div(&t)?;
                Ok(&a * &b)
            }
            EigenSpec::Nabla(power) => {
                RatFunc::from_poly(inv.t).pow(*power as i64)
            }
        }
    }
}

/// Apply a Macdonald eigenoperator degree by degree: expand in the `H`
/// basis, scale by eigenvalues, convert back.
pub fn eigen_apply(spec: &EigenSpec, f: &SymFunc) -> Result<SymFunc> {
    let mut out = SymFunc::zero();
    for (deg, comp) in f.components() {
        let exp = to_mac_basis(&comp, deg)?;
        for (mu, c) in &exp.coeffs {
            let ev = spec.eigenvalue(mu)?;
            out = &out + &mac_h(mu).scale(&(c * &ev));
        }
    }
    Ok(out)
}

/// `nabla^{+-1}`.
pub fn nabla(f: &SymFunc, power: i8) -> SymFunc {
    eigen_apply(&EigenSpec::Nabla(power), f).expect("nabla eigenvalues are monomials")
}
