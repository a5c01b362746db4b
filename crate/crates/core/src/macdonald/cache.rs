//! Text cache format for Macdonald tables: header `QTKNOTS-CACHE v1`, then
//! one line per `(mu, lambda, coefficient)` in canonical text. The loader
//! validates by re-checking the normalization condition `<H_mu, s_n> = 1`
//! and one dominance condition per `mu`; corrupt or mismatched content is
//! reported as an error so callers can ignore the file and recompute.

use std::collections::HashMap;

use super::{build_twist_row_check, MacTable};
use crate::coeff::{parse_ratfunc, RatFunc};
use crate::partitions::{dominance_leq, partitions_of, Partition};
use crate::{Error, Result};

pub const HEADER: &str = "QTKNOTS-CACHE v1";

/// Serialize a table; one line per nonzero Kostka entry.
pub fn serialize(table: &MacTable) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(&format!("macH n={}\n", table.degree));
    for (i, mu) in table.parts.iter().enumerate() {
        for (j, lam) in table.parts.iter().enumerate() {
            let c = &table.kostka[i][j];
            if !c.is_zero() {
                out.push_str(&format!("{} ; {} ; {}\n", mu.render(), lam.render(), c.render()));
            }
        }
    }
    out
}

/// Parse and validate a cache file for degree `n`.
pub fn deserialize(text: &str, n: u32) -> Result<MacTable> {
    let mut lines = text.lines();
    if lines.next() != Some(HEADER) {
        return Err(Error::Parse("missing or unknown cache header".into()));
    }
    match lines.next() {
        Some(l) if l.trim() == format!("macH n={n}") => {}
        other => {
            return Err(Error::Parse(format!(
                "cache degree line mismatch: {other:?}"
            )))
        }
    }
    let parts = partitions_of(n);
    let index: HashMap<&Partition, usize> =
        parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let np = parts.len();
    let mut kostka = vec![vec![RatFunc::zero(); np]; np];
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(';');
        let (mu, lam, coeff) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), Some(c)) => (a.trim(), b.trim(), c.trim()),
            _ => return Err(Error::Parse(format!("malformed cache line '{line}'"))),
        };
        let mu = Partition::parse(mu)?;
        let lam = Partition::parse(lam)?;
        let c = parse_ratfunc(coeff)?;
        let (i, j) = match (index.get(&mu), index.get(&lam)) {
            (Some(&i), Some(&j)) => (i, j),
            _ => {
                return Err(Error::Parse(format!(
                    "cache line partition of wrong size: '{line}'"
                )))
            }
        };
        kostka[i][j] = c;
    }

    // validation: condition (1) and one dominance condition per mu
    for (i, mu) in parts.iter().enumerate() {
        if !kostka[i][0].is_one() {
            return Err(Error::Parse(format!(
                "cache validation failed: <H_{mu}, s_{n}> != 1"
            )));
        }
        if let Some(lam) = parts.iter().find(|lam| !dominance_leq(mu, lam).unwrap()) {
            let v = build_twist_row_check(&parts, &kostka[i], lam);
            if !v.is_zero() {
                return Err(Error::Parse(format!(
                    "cache validation failed: dominance condition for H_{mu} at s_{lam}"
                )));
            }
        }
    }

    let inverse = super::invert_ratfunc_matrix(&kostka)?;
    Ok(MacTable {
        degree: n,
        parts,
        kostka,
        inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::mac_table;

    #[test]
    fn round_trip() {
        let t = mac_table(3);
        let text = serialize(&t);
        assert!(text.starts_with(HEADER));
        let back = deserialize(&text, 3).unwrap();
        assert_eq!(back.kostka, t.kostka);
    }

    #[test]
    fn corrupt_cache_rejected() {
        let t = mac_table(2);
        let text = serialize(&t);
        // flip a coefficient: condition (1) breaks
        let bad = text.replace("2 ; 2 ; 1", "2 ; 2 ; 5");
        assert!(deserialize(&bad, 2).is_err());
        // wrong header
        assert!(deserialize("QTKNOTS-CACHE v0\nmacH n=2\n", 2).is_err());
        // wrong degree
        assert!(deserialize(&text, 3).is_err());
    }
}
