//! Decomposition tables: the text layout `C(k,n) = V[..]^m ...`, the
//! reference tables shipped with the crate, and table generation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::character::IrredDecomposition;
use crate::error::{Error, Result};
use crate::forest_rep::{decompose_ckn, Method};
use crate::partition::Partition;

/// Largest `n` accepted in a table line.
pub const MAX_TABLE_N: usize = 64;

const REFERENCE: &str = include_str!("../data/tables.txt");

/// Decompositions keyed by `(n, k)`.
pub type Tables = BTreeMap<(usize, usize), IrredDecomposition>;

/// One table line, `C(k,n) = V[4]^3 V[3,1]^6 ...`; blank lines and lines
/// starting with `#` give `None`. `0` stands for the empty decomposition.
pub fn parse_table_line(line: &str) -> Result<Option<(usize, usize, IrredDecomposition)>> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let (head, body) = line
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("expected '=' in table line {line:?}")))?;
    let (k, n) = parse_head(head.trim())?;
    let body = body.trim();
    let mut mults: BTreeMap<Partition, BigUint> = BTreeMap::new();
    if body != "0" {
        for token in body.split_whitespace() {
            let (lambda, m) = parse_term(token)?;
            if lambda.weight() != n {
                return Err(Error::SizeMismatch(n, lambda.weight()));
            }
            if mults.insert(lambda, m).is_some() {
                return Err(Error::Parse(format!("repeated term {token:?}")));
            }
        }
        if mults.is_empty() {
            return Err(Error::Parse(format!("empty right-hand side in {line:?}")));
        }
    }
    Ok(Some((n, k, IrredDecomposition::new(n, mults)?)))
}

fn parse_head(head: &str) -> Result<(usize, usize)> {
    let inner = head
        .strip_prefix("C(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected C(k,n), got {head:?}")))?;
    let (k, n) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected C(k,n), got {head:?}")))?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad index {s:?}: {e}")));
    let (k, n) = (num(k)?, num(n)?);
    if n == 0 || n > MAX_TABLE_N || k >= n {
        return Err(Error::Parse(format!("C({k},{n}) is out of range")));
    }
    Ok((k, n))
}

fn parse_term(token: &str) -> Result<(Partition, BigUint)> {
    let rest = token
        .strip_prefix('V')
        .ok_or_else(|| Error::Parse(format!("expected V[..], got {token:?}")))?;
    let (lambda, exponent) = match rest.split_once('^') {
        Some((l, e)) => (l, Some(e)),
        None => (rest, None),
    };
    let lambda: Partition = lambda.parse()?;
    let m = match exponent {
        None => BigUint::from(1u32),
        Some(e) if !e.is_empty() && e.bytes().all(|b| b.is_ascii_digit()) => {
            e.parse().map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?
        }
        Some(_) => return Err(Error::Parse(format!("bad exponent in {token:?}"))),
    };
    if m == BigUint::from(0u32) {
        return Err(Error::Parse(format!("zero exponent in {token:?}")));
    }
    Ok((lambda, m))
}

/// Parses a whole table file; repeated `(k,n)` lines are an error.
pub fn parse_tables(text: &str) -> Result<Tables> {
    let mut out = Tables::new();
    for (i, line) in text.lines().enumerate() {
        if let Some((n, k, d)) = parse_table_line(line).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))? {
            if out.insert((n, k), d).is_some() {
                return Err(Error::Parse(format!("line {}: C({k},{n}) appears twice", i + 1)));
            }
        }
    }
    Ok(out)
}

/// The reference decompositions for `n = 3..6`.
pub fn reference_tables() -> Tables {
    parse_tables(REFERENCE).expect("bundled tables parse")
}

pub fn format_table_line(n: usize, k: usize, d: &IrredDecomposition) -> String {
    format!("C({k},{n}) = {d}")
}

/// All strata of `C_n`, one line each.
pub fn compute_table(n: usize, method: Method) -> Result<Vec<IrredDecomposition>> {
    (0..n).map(|k| decompose_ckn(n, k, method)).collect()
}

pub fn format_table(n: usize, rows: &[IrredDecomposition]) -> String {
    let mut out = String::new();
    for (k, d) in rows.iter().enumerate() {
        let _ = writeln!(out, "{}", format_table_line(n, k, d));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_file_is_complete() {
        let t = reference_tables();
        assert_eq!(t.len(), 3 + 4 + 5 + 6);
        let c46 = &t[&(6, 4)];
        assert_eq!(c46.get(&"[3,2,1]".parse().unwrap()), BigUint::from(142u32));
        // each line has the right total dimension |C_{k,n}|
        for ((n, k), d) in &t {
            assert_eq!(d.degree(), crate::transform::count_nilpotent(*n, *k), "C({k},{n})");
        }
    }

    #[test]
    fn line_round_trip() {
        let line = "C(2,4) = V[4]^3 V[3,1]^6 V[2,2]^5 V[2,1,1]^5 V[1,1,1,1]^2";
        let (n, k, d) = parse_table_line(line).unwrap().unwrap();
        assert_eq!((n, k), (4, 2));
        assert_eq!(format_table_line(n, k, &d), line);
        assert_eq!(parse_table_line("  # comment").unwrap(), None);
        assert_eq!(parse_table_line("C(0,2) = 0").unwrap().unwrap().2, IrredDecomposition::new(2, []).unwrap());
    }

    #[test]
    fn bad_lines() {
        for bad in [
            "C(2,4)",
            "C(4,4) = V[4]",
            "C(1,4) = V[3]",
            "C(1,4) = V[4] V[4]",
            "C(1,4) = V[4]^0",
            "C(1,4) = V[4]^x",
            "C(1,4) = W[4]",
            "C(1,4) =",
            "D(1,4) = V[4]",
            "C(1,99) = V[99]",
        ] {
            assert!(parse_table_line(bad).is_err(), "{bad:?}");
        }
        assert!(parse_tables("C(0,3) = V[3]\nC(0,3) = V[3]").is_err());
    }

    #[test]
    fn computed_n3_and_n4_match() {
        let t = reference_tables();
        for n in 3..=4 {
            for method in [Method::FixedPoint, Method::Plethysm] {
                let rows = compute_table(n, method).unwrap();
                for (k, d) in rows.iter().enumerate() {
                    assert_eq!(d, &t[&(n, k)], "C({k},{n}) {method:?}");
                }
            }
        }
        let text = format_table(3, &compute_table(3, Method::Plethysm).unwrap());
        assert_eq!(text, "C(0,3) = V[3]\nC(1,3) = V[3] V[2,1]^2 V[1,1,1]\nC(2,3) = V[3]^2 V[2,1]^3 V[1,1,1]\n");
    }
}
