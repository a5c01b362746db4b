//! Per-degree basis-conversion tables, computed once and shared read-only.
//!
//! All tables are integer matrices indexed by the partitions of `n` in
//! descending lexicographic order (`4, 31, 22, 211, 1111`). Dominance is
//! compatible with that order, which makes the Kostka matrix unitriangular
//! and invertible over the integers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::{
    horizontal_strips_add, partitions_of, vertical_strips_add, Partition,
};

/// Ribbon (border strip) additions: all `(mu, sign)` with `mu/lambda` a
/// connected border strip of size `k` and `sign = (-1)^{height-1}`.
/// This is the Murnaghan-Nakayama step for multiplying by `p_k`.
pub fn add_ribbons(lambda: &Partition, k: u32) -> Vec<(Partition, i8)> {
    if k == 0 {
        return vec![(lambda.clone(), 1)];
    }
    let l = lambda.len() + k as usize;
    let beta: Vec<u32> = (0..l)
        .map(|i| lambda.part(i) + (l - 1 - i) as u32)
        .collect();
    let mut out = Vec::new();
    for i in 0..l {
        let nb = beta[i] + k;
        if beta.contains(&nb) {
            continue;
        }
        let jumped = beta.iter().filter(|&&b| b > beta[i] && b < nb).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nbeta
            .iter()
            .enumerate()
            .map(|(r, &b)| b - (l - 1 - r) as u32)
            .collect();
        out.push((Partition::new(parts), sign));
    }
    out
}

/// Ribbon removals: all `(mu, sign)` with `lambda/mu` a border strip of
/// size `k`. This is the Murnaghan-Nakayama step for `p_k^perp`.
pub fn remove_ribbons(lambda: &Partition, k: u32) -> Vec<(Partition, i8)> {
    if k == 0 {
        return vec![(lambda.clone(), 1)];
    }
    let l = lambda.len().max(1);
    let beta: Vec<u32> = (0..l)
        .map(|i| lambda.part(i) + (l - 1 - i) as u32)
        .collect();
    let mut out = Vec::new();
    for i in 0..l {
        if beta[i] < k {
            continue;
        }
        let nb = beta[i] - k;
        if beta.contains(&nb) {
            continue;
        }
        let jumped = beta.iter().filter(|&&b| b < beta[i] && b > nb).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nbeta
            .iter()
            .enumerate()
            .map(|(r, &b)| b - (l - 1 - r) as u32)
            .collect();
        out.push((Partition::new(parts), sign));
    }
    out
}

type IMat = Vec<Vec<BigInt>>;

/// Conversion tables at a fixed degree.
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `h_mu = sum_lambda h_to_s[mu][lambda] s_lambda` (the Kostka numbers
    /// `K_{lambda mu}`).
    pub h_to_s: IMat,
    /// `e_mu = sum_lambda e_to_s[mu][lambda] s_lambda`.
    pub e_to_s: IMat,
    /// `p_mu = sum_lambda p_to_s[mu][lambda] s_lambda` (the character table).
    pub p_to_s: IMat,
    /// `m_mu = sum_lambda m_to_s[mu][lambda] s_lambda`.
    pub m_to_s: IMat,
    /// `s_lambda = sum_mu s_to_h[lambda][mu] h_mu`.
    pub s_to_h: IMat,
    /// `s_lambda = sum_mu s_to_m[lambda][mu] m_mu` (Kostka `K_{lambda mu}`).
    pub s_to_m: IMat,
    pub z: Vec<BigInt>,
}

impl DegreeTables {
    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

fn expansion_to_row(
    exp: &HashMap<Partition, BigInt>,
    index: &HashMap<Partition, usize>,
) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); index.len()];
    for (p, c) in exp {
        row[index[p]] = c.clone();
    }
    row
}

/// Multiply a Schur expansion by `h_k` / `e_k` / `p_k` over the integers.
fn mult_gen(
    exp: &HashMap<Partition, BigInt>,
    step: impl Fn(&Partition) -> Vec<(Partition, i8)>,
) -> HashMap<Partition, BigInt> {
    let mut out: HashMap<Partition, BigInt> = HashMap::new();
    for (lam, c) in exp {
        for (mu, sign) in step(lam) {
            let entry = out.entry(mu).or_insert_with(BigInt::zero);
            if sign >= 0 {
                *entry += c;
            } else {
                *entry -= c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn product_expansion(
    mu: &Partition,
    step: impl Fn(&Partition, u32) -> Vec<(Partition, i8)>,
) -> HashMap<Partition, BigInt> {
    let mut exp = HashMap::new();
    exp.insert(Partition::empty(), BigInt::one());
    for &k in mu.parts() {
        exp = mult_gen(&exp, |lam| step(lam, k));
    }
    exp
}

/// Invert a unitriangular (upper, unit-diagonal) integer matrix.
fn invert_unitriangular(u: &IMat) -> IMat {
    let n = u.len();
    let mut v = vec![vec![BigInt::zero(); n]; n];
    for j in 0..n {
        v[j][j] = BigInt::one();
        for i in (0..j).rev() {
            let mut s = BigInt::zero();
            for k in (i + 1)..=j {
                if !u[i][k].is_zero() && !v[k][j].is_zero() {
                    s += &u[i][k] * &v[k][j];
                }
            }
            v[i][j] = -s;
        }
    }
    v
}

fn build(n: u32) -> DegreeTables {
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let m = parts.len();

    let mut h_to_s = Vec::with_capacity(m);
    let mut e_to_s = Vec::with_capacity(m);
    let mut p_to_s = Vec::with_capacity(m);
    for mu in &parts {
        let h_exp = product_expansion(mu, |lam, k| {
            horizontal_strips_add(lam, k).into_iter().map(|p| (p, 1)).collect()
        });
        h_to_s.push(expansion_to_row(&h_exp, &index));
        let e_exp = product_expansion(mu, |lam, k| {
            vertical_strips_add(lam, k).into_iter().map(|p| (p, 1)).collect()
        });
        e_to_s.push(expansion_to_row(&e_exp, &index));
        let p_exp = product_expansion(mu, |lam, k| add_ribbons(lam, k));
        p_to_s.push(expansion_to_row(&p_exp, &index));
    }

    // h_mu = sum_lambda K[lambda][mu] s_lambda: as a matrix in (lambda, mu)
    // this is unitriangular for the descending-lex index order.
    let mut kostka = vec![vec![BigInt::zero(); m]; m];
    for (j, row) in h_to_s.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            kostka[i][j] = c.clone();
        }
    }
    let kostka_inv = invert_unitriangular(&kostka);

    // s_lambda = sum_mu s_to_h[lambda][mu] h_mu comes from the inverse:
    // s = K^{-1,T} applied on the h side.
    let mut s_to_h = vec![vec![BigInt::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            s_to_h[i][j] = kostka_inv[j][i].clone();
        }
    }

    // s_lambda = sum_mu K_{lambda mu} m_mu
    let mut s_to_m = vec![vec![BigInt::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            s_to_m[i][j] = kostka[i][j].clone();
        }
    }
    // m_mu = sum_lambda (K^{-1})_{mu lambda} s_lambda
    let mut m_to_s = vec![vec![BigInt::zero(); m]; m];
    for i in 0..m {
        for j in 0..m {
            m_to_s[i][j] = kostka_inv[i][j].clone();
        }
    }

    let z = parts.iter().map(|p| p.z()).collect();

    DegreeTables {
        parts,
        index,
        h_to_s,
        e_to_s,
        p_to_s,
        m_to_s,
        s_to_h,
        s_to_m,
        z,
    }
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();

/// Tables for degree `n`. Idempotent fill with atomic publication; distinct
/// degrees may be computed concurrently (a racing recomputation is allowed,
/// torn reads are not).
pub fn tables(n: u32) -> Arc<DegreeTables> {
    let lock = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = lock.lock().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(build(n));
    let mut map = lock.lock().unwrap();
    map.entry(n).or_insert(built).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn mn_ribbons_small() {
        // p_2 = s_2 - s_11
        let r = add_ribbons(&Partition::empty(), 2);
        let mut r = r;
        r.sort();
        assert_eq!(r, vec![(p(&[1, 1]), -1), (p(&[2]), 1)]);
        // removal inverts addition
        for (mu, _) in add_ribbons(&p(&[2, 1]), 3) {
            assert!(remove_ribbons(&mu, 3).iter().any(|(nu, _)| *nu == p(&[2, 1])));
        }
    }

    #[test]
    fn kostka_n3() {
        let t = tables(3);
        // h_21 = s_3 + s_21, h_111 = s_3 + 2 s_21 + s_111
        let i21 = t.idx(&p(&[2, 1]));
        let i3 = t.idx(&p(&[3]));
        let i111 = t.idx(&p(&[1, 1, 1]));
        assert_eq!(t.h_to_s[i21][i3], BigInt::one());
        assert_eq!(t.h_to_s[i21][i21], BigInt::one());
        assert_eq!(t.h_to_s[i21][i111], BigInt::zero());
        assert_eq!(t.h_to_s[i111][i21], BigInt::from(2));
    }

    #[test]
    fn characters_n3() {
        let t = tables(3);
        // p_111 = s_3 + 2 s_21 + s_111; p_3 = s_3 - s_21 + s_111
        let i3 = t.idx(&p(&[3]));
        let i21 = t.idx(&p(&[2, 1]));
        let i111 = t.idx(&p(&[1, 1, 1]));
        assert_eq!(t.p_to_s[i111][i21], BigInt::from(2));
        assert_eq!(t.p_to_s[i3][i21], BigInt::from(-1));
        assert_eq!(t.p_to_s[i3][i111], BigInt::from(1));
    }

    #[test]
    fn inverse_matrices_really_invert() {
        for n in 1..=7u32 {
            let t = tables(n);
            let m = t.parts.len();
            // sum_mu s_to_h[lambda][mu] * h_to_s[mu][nu] = delta(lambda, nu)
            for i in 0..m {
                for j in 0..m {
                    let mut s = BigInt::zero();
                    for k in 0..m {
                        s += &t.s_to_h[i][k] * &t.h_to_s[k][j];
                    }
                    assert_eq!(s == BigInt::one(), i == j);
                    if i != j {
                        assert!(s.is_zero());
                    }
                }
            }
        }
    }
}
