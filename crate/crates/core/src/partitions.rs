//! Integer partitions, their cell geometry, the dominance order, and the
//! (q,t) partition invariants of Macdonald theory.
//!
//! Cells are 0-based cartesian pairs `(column, row)`, so the cell set of
//! `mu` is `{(i,j) : j < len(mu), i < mu[j]}`. This is the convention that
//! feeds the cell enumerator `B_mu = sum q^i t^j` directly.

use std::fmt;

use num_bigint::BigInt;

use crate::coeff::{IntPoly, Mono, Var};
use crate::{Error, Result};

/// A partition: weakly decreasing positive parts (empty = empty partition).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A cell `(column, row)`, 0-based.
pub type Cell = (u32, u32);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: vec![] }
    }

    /// Single row `(n)`; the empty partition when `n = 0`.
    pub fn row(n: u32) -> Partition {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single column `(1^n)`.
    pub fn column(n: u32) -> Partition {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    /// Hook `(a|l)` in Frobenius notation: one part `a+1` and `l` parts 1.
    pub fn hook(arm: u32, leg: u32) -> Partition {
        let mut parts = vec![arm + 1];
        parts.extend(std::iter::repeat(1).take(leg as usize));
        Partition { parts }
    }

    /// Staircase `(n-1, n-2, ..., 1)`.
    pub fn staircase(n: u32) -> Partition {
        Partition {
            parts: (1..n).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero-padded beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Is this a hook? Returns `(arm, leg)` if so. The empty partition is
    /// not a hook.
    pub fn as_hook(&self) -> Option<(u32, u32)> {
        if self.is_empty() {
            return None;
        }
        if self.parts[1..].iter().all(|&p| p == 1) {
            Some((self.parts[0] - 1, self.parts.len() as u32 - 1))
        } else {
            None
        }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.part(i))
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (j, &len) in self.parts.iter().enumerate() {
            for i in 0..len {
                out.push((i, j as u32));
            }
        }
        out
    }

    /// Transpose of the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|i| self.parts.iter().filter(|&&p| p > i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Arm of a cell: cells strictly to its right in the same row.
    pub fn arm(&self, c: Cell) -> u32 {
        self.parts[c.1 as usize] - c.0 - 1
    }

    /// Leg of a cell: cells strictly above it in the same column.
    pub fn leg(&self, c: Cell) -> u32 {
        self.parts.iter().filter(|&&p| p > c.0).count() as u32 - c.1 - 1
    }

    pub fn hook_len(&self, c: Cell) -> u32 {
        1 + self.arm(c) + self.leg(c)
    }

    /// `eta(mu) = sum over 1-based rows of (j-1) mu_j`.
    pub fn eta(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .map(|(j, &p)| j as u32 * p)
            .sum()
    }

    /// Number of cells `(i,j)` with `i > j`.
    pub fn iota(&self) -> u32 {
        self.cells().iter().filter(|&&(i, j)| i > j).count() as u32
    }

    /// Content `i - j` of a cell (column minus row).
    pub fn content(&self, c: Cell) -> i64 {
        c.0 as i64 - c.1 as i64
    }

    /// `z_mu = prod i^{m_i} m_i!` over part multiplicities.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        let mut mult = std::collections::HashMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0u32) += 1;
        }
        for (p, m) in mult {
            for _ in 0..m {
                z *= BigInt::from(p);
            }
            for k in 1..=m {
                z *= BigInt::from(k);
            }
        }
        z
    }

    /// Union of parts (multiset), re-sorted.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Row-wise sum (padding with zeros).
    pub fn row_sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::new((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Canonical text form `3,2`; the empty partition renders as `0`.
    pub fn render(&self) -> String {
        if self.is_empty() {
            "0".to_string()
        } else {
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Parse either comma-separated parts (`3,2`) or multiplicity form
    /// (`1^2 3^1`, meaning two 1s and one 3). `0` or the empty string is the
    /// empty partition.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts: Vec<u32> = Vec::new();
        if s.contains('^') {
            for chunk in s.split_whitespace() {
                let (p, m) = chunk
                    .split_once('^')
                    .ok_or_else(|| Error::Parse(format!("bad multiplicity term '{chunk}'")))?;
                let p: u32 = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part '{p}'")))?;
                let m: u32 = m
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad multiplicity '{m}'")))?;
                parts.extend(std::iter::repeat(p).take(m as usize));
            }
        } else {
            for p in s.split(',') {
                let p: u32 = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part '{p}'")))?;
                parts.push(p);
            }
        }
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Partition {
        Partition::new(parts.to_vec())
    }
}

/// Dominance order: `lambda <= mu` iff every prefix sum of `lambda` is at
/// most that of `mu`. Only defined between partitions of equal size.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.render(), mu.render()));
    }
    let n = lambda.len().max(mu.len());
    let mut sl = 0u32;
    let mut sm = 0u32;
    for i in 0..n {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl > sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-cell arm/leg/hook together with `eta(mu)`, `eta(mu')`, `iota(mu)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellStats {
    /// `(cell, arm, leg, hook)` per cell, row-major.
    pub cells: Vec<(Cell, u32, u32, u32)>,
    pub eta: u32,
    pub eta_conj: u32,
    pub iota: u32,
}

pub fn cell_stats(mu: &Partition) -> CellStats {
    let cells = mu
        .cells()
        .into_iter()
        .map(|c| (c, mu.arm(c), mu.leg(c), mu.hook_len(c)))
        .collect();
    CellStats {
        cells,
        eta: mu.eta(),
        eta_conj: mu.conjugate().eta(),
        iota: mu.iota(),
    }
}

/// The (q,t) partition invariants of Macdonald theory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QtInvariants {
    /// Cell enumerator `B_mu = sum q^i t^j`.
    pub b: IntPoly,
    /// `T_mu = q^{eta(mu')} t^{eta(mu)}`, the product of all cell weights.
    pub t: IntPoly,
    /// `Pi_mu = prod over cells != (0,0) of (1 - q^i t^j)`.
    pub pi: IntPoly,
    /// `w_mu = prod over cells of (q^a - t^{l+1})(t^l - q^{a+1})`.
    pub w: IntPoly,
}

pub fn qt_invariants(mu: &Partition) -> QtInvariants {
    let mut b = IntPoly::zero();
    let mut pi = IntPoly::one();
    let mut w = IntPoly::one();
    for c in mu.cells() {
        let (i, j) = c;
        let m = Mono::var(Var::Q, i).mul(&Mono::var(Var::T, j));
        b.add_term(m, BigInt::from(1));
        if (i, j) != (0, 0) {
            let factor = &IntPoly::one() - &IntPoly::monomial(1.into(), m);
            pi = &pi * &factor;
        }
        let a = mu.arm(c);
        let l = mu.leg(c);
        let f1 = &IntPoly::var_pow(Var::Q, a) - &IntPoly::var_pow(Var::T, l + 1);
        let f2 = &IntPoly::var_pow(Var::T, l) - &IntPoly::var_pow(Var::Q, a + 1);
        w = &(&w * &f1) * &f2;
    }
    let t = IntPoly::monomial(
        1.into(),
        Mono::var(Var::Q, mu.conjugate().eta()).mul(&Mono::var(Var::T, mu.eta())),
    );
    QtInvariants { b, t, pi, w }
}

fn push_sorted(out: &mut Vec<Partition>) {
    out.sort_by(|a, b| b.parts.cmp(&a.parts));
    out.dedup();
}

/// All `nu` obtained from `lambda` by removing a vertical strip of size `k`
/// (at most one cell per row), in descending-lex order.
pub fn vertical_strips_remove(lambda: &Partition, k: u32) -> Vec<Partition> {
    fn rec(
        lambda: &Partition,
        i: usize,
        remaining: i64,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining < 0 {
            return;
        }
        if i == lambda.len() {
            if remaining == 0 {
                out.push(Partition::new(current.clone()));
            }
            return;
        }
        let li = lambda.part(i); // >= 1 while i < len
        let cap = if i == 0 { u32::MAX } else { current[i - 1] };
        for v in [li, li - 1] {
            if v <= cap {
                current.push(v);
                rec(lambda, i + 1, remaining - (li - v) as i64, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, k as i64, &mut Vec::new(), &mut out);
    push_sorted(&mut out);
    out
}

/// All `nu` obtained from `lambda` by removing a horizontal strip of size
/// `k` (at most one cell per column): `lambda_{i+1} <= nu_i <= lambda_i`.
pub fn horizontal_strips_remove(lambda: &Partition, k: u32) -> Vec<Partition> {
    fn rec(
        lambda: &Partition,
        i: usize,
        remaining: i64,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining < 0 {
            return;
        }
        if i == lambda.len() {
            if remaining == 0 {
                out.push(Partition::new(current.clone()));
            }
            return;
        }
        let li = lambda.part(i);
        let lo = lambda.part(i + 1);
        let cap = if i == 0 { li } else { current[i - 1].min(li) };
        for v in (lo..=cap).rev() {
            current.push(v);
            rec(lambda, i + 1, remaining - (li - v) as i64, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, k as i64, &mut Vec::new(), &mut out);
    push_sorted(&mut out);
    out
}

/// All `mu` obtained from `lambda` by adding a vertical strip of size `k`
/// (at most one new cell per row).
pub fn vertical_strips_add(lambda: &Partition, k: u32) -> Vec<Partition> {
    fn rec(
        lambda: &Partition,
        i: usize,
        rows: usize,
        remaining: i64,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining < 0 {
            return;
        }
        if i == rows {
            if remaining == 0 {
                out.push(Partition::new(current.clone()));
            }
            return;
        }
        let li = lambda.part(i);
        let cap = if i == 0 { u32::MAX } else { current[i - 1] };
        for v in [li + 1, li] {
            if v <= cap {
                current.push(v);
                rec(lambda, i + 1, rows, remaining - (v - li) as i64, current, out);
                current.pop();
            }
        }
    }
    let rows = lambda.len() + k as usize;
    let mut out = Vec::new();
    rec(lambda, 0, rows, k as i64, &mut Vec::new(), &mut out);
    push_sorted(&mut out);
    out
}

/// All `mu` obtained from `lambda` by adding a horizontal strip of size `k`
/// (at most one new cell per column): `mu_{i+1} <= lambda_i <= mu_i`.
pub fn horizontal_strips_add(lambda: &Partition, k: u32) -> Vec<Partition> {
    fn rec(
        lambda: &Partition,
        i: usize,
        rows: usize,
        remaining: i64,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining < 0 {
            return;
        }
        if i == rows {
            if remaining == 0 {
                out.push(Partition::new(current.clone()));
            }
            return;
        }
        let li = lambda.part(i);
        // mu_i >= lambda_i, mu_i <= lambda_{i-1} (one new cell per column),
        // mu_i <= mu_{i-1} is implied by mu_i <= lambda_{i-1} <= mu_{i-1}.
        let hi = if i == 0 {
            li + remaining as u32
        } else {
            lambda.part(i - 1).min(li + remaining as u32)
        };
        for v in (li..=hi).rev() {
            current.push(v);
            rec(lambda, i + 1, rows, remaining - (v - li) as i64, current, out);
            current.pop();
        }
    }
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    rec(lambda, 0, rows, k as i64, &mut Vec::new(), &mut out);
    push_sorted(&mut out);
    out
}

/// Dual Pieri support: all `mu` inside `lambda` with `|lambda| - |mu| = k`
/// and `lambda/mu` a vertical strip.
pub fn vertical_strips(lambda: &Partition, k: u32) -> Vec<Partition> {
    vertical_strips_remove(lambda, k)
}

/// All partitions of `n` in descending lexicographic order
/// (e.g. `4, 31, 22, 211, 1111`).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = max.min(n);
        for p in (1..=top).rev() {
            current.push(p);
            rec(n - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All sub-partitions `mu` contained in `tau`, sorted ascending.
pub fn subpartitions_of(tau: &Partition) -> Vec<Partition> {
    fn rec(tau: &Partition, i: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        // stopping here truncates the partition at i rows
        out.push(Partition::new(current.clone()));
        if i == tau.len() {
            return;
        }
        let cap = if i == 0 {
            tau.part(0)
        } else {
            current[i - 1].min(tau.part(i))
        };
        for v in 1..=cap {
            current.push(v);
            rec(tau, i + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(tau, 0, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // brute-force transpose of the cell set agrees
        let mu = p(&[4, 2, 1, 1]);
        let transposed: std::collections::BTreeSet<Cell> =
            mu.cells().into_iter().map(|(i, j)| (j, i)).collect();
        let conj = mu.conjugate();
        let conj_cells: std::collections::BTreeSet<Cell> = conj.cells().into_iter().collect();
        assert_eq!(transposed, conj_cells);
        // (4,2,1,1) happens to be self-conjugate
        assert_eq!(conj, mu);
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=12 {
            for mu in partitions_of(n) {
                assert_eq!(mu.conjugate().conjugate(), mu);
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[3, 2, 1]), &p(&[4, 1, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 3]), &p(&[4, 1, 1])).unwrap());
        assert!(!dominance_leq(&p(&[4, 1, 1]), &p(&[3, 3])).unwrap());
        assert!(dominance_leq(&p(&[1, 1, 1, 1, 1, 1]), &p(&[6])).unwrap());
        assert!(dominance_leq(&p(&[3, 2]), &p(&[3, 2])).unwrap());
        assert!(dominance_leq(&Partition::empty(), &Partition::empty()).unwrap());
        assert!(dominance_leq(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn dominance_is_partial_order_on_6() {
        let ps = partitions_of(6);
        for a in &ps {
            assert!(dominance_leq(a, a).unwrap());
            for b in &ps {
                let ab = dominance_leq(a, b).unwrap();
                let ba = dominance_leq(b, a).unwrap();
                if ab && ba {
                    assert_eq!(a, b);
                }
                for c in &ps {
                    if ab && dominance_leq(b, c).unwrap() {
                        assert!(dominance_leq(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_hasse_diagram_n6() {
        // Cover relations of the dominance order on partitions of 6.
        let ps = partitions_of(6);
        let mut covers = Vec::new();
        for a in &ps {
            for b in &ps {
                if a != b && dominance_leq(a, b).unwrap() {
                    let intermediate = ps.iter().any(|c| {
                        c != a
                            && c != b
                            && dominance_leq(a, c).unwrap()
                            && dominance_leq(c, b).unwrap()
                    });
                    if !intermediate {
                        covers.push((a.render(), b.render()));
                    }
                }
            }
        }
        covers.sort();
        let mut expect = vec![
            ("1,1,1,1,1,1", "2,1,1,1,1"),
            ("2,1,1,1,1", "2,2,1,1"),
            ("2,2,1,1", "2,2,2"),
            ("2,2,1,1", "3,1,1,1"),
            ("2,2,2", "3,2,1"),
            ("3,1,1,1", "3,2,1"),
            ("3,2,1", "3,3"),
            ("3,2,1", "4,1,1"),
            ("3,3", "4,2"),
            ("4,1,1", "4,2"),
            ("4,2", "5,1"),
            ("5,1", "6"),
        ]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect::<Vec<_>>();
        expect.sort();
        assert_eq!(covers, expect);
    }

    #[test]
    fn cell_stats_examples() {
        let mu = p(&[3, 2]);
        assert_eq!(mu.arm((0, 0)), 2);
        assert_eq!(mu.leg((0, 0)), 1);
        assert_eq!(mu.hook_len((0, 0)), 4);
        let st = cell_stats(&mu);
        assert_eq!((st.eta_conj, st.eta), (4, 2));
        // the cells of 32 are (0,0) (1,0) (2,0) (0,1) (1,1)
        let si: u32 = mu.cells().iter().map(|c| c.0).sum();
        let sj: u32 = mu.cells().iter().map(|c| c.1).sum();
        assert_eq!((si, sj), (4, 2));
        assert_eq!(p(&[2]).iota(), 1);
    }

    #[test]
    fn eta_vector_identity_and_t_mu() {
        for n in 0..=10 {
            for mu in partitions_of(n) {
                let si: u32 = mu.cells().iter().map(|c| c.0).sum();
                let sj: u32 = mu.cells().iter().map(|c| c.1).sum();
                assert_eq!(si, mu.conjugate().eta());
                assert_eq!(sj, mu.eta());
                // T_mu equals the product of the cell weights q^i t^j
                let inv = qt_invariants(&mu);
                let mut t = IntPoly::one();
                for (i, j) in mu.cells() {
                    t = &t
                        * &IntPoly::monomial(
                            1.into(),
                            Mono::var(Var::Q, i).mul(&Mono::var(Var::T, j)),
                        );
                }
                assert_eq!(inv.t, t);
            }
        }
    }

    #[test]
    fn hooks_of_conjugate_match() {
        for n in 0..=10 {
            for mu in partitions_of(n) {
                let mut h1: Vec<u32> = mu.cells().iter().map(|&c| mu.hook_len(c)).collect();
                let conj = mu.conjugate();
                let mut h2: Vec<u32> = conj.cells().iter().map(|&c| conj.hook_len(c)).collect();
                h1.sort_unstable();
                h2.sort_unstable();
                assert_eq!(h1, h2);
            }
        }
    }

    #[test]
    fn qt_invariants_32() {
        use crate::coeff::parse_intpoly;
        let inv = qt_invariants(&p(&[3, 2]));
        assert_eq!(inv.b, parse_intpoly("1 + q + q^2 + t + q*t").unwrap());
        let pi = parse_intpoly("(1 - q)*(1 - q^2)*(1 - t)*(1 - q*t)").unwrap();
        assert_eq!(inv.pi, pi);
        assert_eq!(inv.t, parse_intpoly("q^4*t^2").unwrap());
    }

    #[test]
    fn vertical_strip_examples() {
        // removing a vertical strip of size 3 from 4211 can yield 32
        let vs = vertical_strips(&p(&[4, 2, 1, 1]), 3);
        assert!(vs.contains(&p(&[3, 2])));
        assert_eq!(vertical_strips(&p(&[2]), 1), vec![p(&[1])]);
        assert_eq!(vertical_strips(&p(&[2, 1]), 2), vec![p(&[1])]);
    }

    #[test]
    fn strips_brute_force_cross_check() {
        // independent oracle: enumerate all contained partitions and filter
        for lambda in [p(&[4, 2, 1, 1]), p(&[3, 3, 2]), p(&[5])] {
            for k in 0..=3u32 {
                let mut expect_v = Vec::new();
                let mut expect_h = Vec::new();
                for mu in subpartitions_of(&lambda) {
                    if lambda.size() - mu.size() != k {
                        continue;
                    }
                    let vertical =
                        (0..lambda.len()).all(|i| lambda.part(i) - mu.part(i) <= 1);
                    let horizontal =
                        (0..lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i));
                    if vertical {
                        expect_v.push(mu.clone());
                    }
                    if horizontal {
                        expect_h.push(mu.clone());
                    }
                }
                expect_v.sort_by(|a, b| b.parts().cmp(a.parts()));
                expect_h.sort_by(|a, b| b.parts().cmp(a.parts()));
                assert_eq!(vertical_strips_remove(&lambda, k), expect_v, "v {lambda} {k}");
                assert_eq!(
                    horizontal_strips_remove(&lambda, k),
                    expect_h,
                    "h {lambda} {k}"
                );
            }
        }
    }

    #[test]
    fn add_strips_are_inverse_of_remove() {
        for lambda in [p(&[2, 1]), p(&[3, 2]), p(&[2, 2, 1]), Partition::empty()] {
            for k in 1..=3u32 {
                let added = vertical_strips_add(&lambda, k);
                assert!(!added.is_empty());
                for mu in added {
                    assert_eq!(mu.size(), lambda.size() + k);
                    assert!(vertical_strips_remove(&mu, k).contains(&lambda));
                }
                for mu in horizontal_strips_add(&lambda, k) {
                    assert!(horizontal_strips_remove(&mu, k).contains(&lambda));
                }
            }
        }
        assert_eq!(
            vertical_strips_add(&p(&[1]), 1),
            vec![p(&[2]), p(&[1, 1])]
        );
        assert_eq!(
            horizontal_strips_add(&p(&[1]), 1),
            vec![p(&[2]), p(&[1, 1])]
        );
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(Partition::parse("3,2").unwrap(), p(&[3, 2]));
        assert_eq!(Partition::parse("1^2 3^1").unwrap(), p(&[3, 1, 1]));
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert_eq!(p(&[3, 2]).render(), "3,2");
        assert_eq!(Partition::empty().render(), "0");
    }

    #[test]
    fn partitions_of_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let names: Vec<String> = partitions_of(4).iter().map(|p| p.render()).collect();
        assert_eq!(names, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn subpartitions_catalan() {
        // the staircase (n-1,...,1) has Catalan(n) subpartitions
        let catalan = [1u32, 1, 2, 5, 14, 42, 132];
        for n in 0..=6u32 {
            let tau = Partition::staircase(n);
            assert_eq!(subpartitions_of(&tau).len() as u32, catalan[n as usize]);
        }
    }
}
