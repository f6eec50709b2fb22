//! Transitive groups `nTm` (`n ≤ 15`, `n ≠ 12`) with `H¹(G, [J_{G/H}]^fl) ≠ 0`.
//!
//! For every other `nTm` in that range the Hasse norm principle holds for all
//! extensions with that Galois group.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intlat::AbInvariants;
use crate::permgrp::prime_factors;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Entry {
    pub label: &'static str,
    pub structure: &'static str,
    pub nonzero_invariants: AbInvariants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "invariants", rename_all = "kebab-case")]
pub enum Table1Status {
    HoldsAlways,
    Obstructed(AbInvariants),
    Unknown,
}

const ROWS: &[(&str, &str, u64, usize)] = &[
    ("4T2", "V4", 2, 1),
    ("4T4", "A4", 2, 1),
    ("6T4", "A4", 2, 1),
    ("6T12", "A5", 2, 1),
    ("8T2", "C4 x C2", 2, 1),
    ("8T3", "(C2)^3", 2, 3),
    ("8T4", "D4", 2, 1),
    ("8T9", "D4 x C2", 2, 1),
    ("8T11", "(C4 x C2) : C2", 2, 1),
    ("8T13", "A4 x C2", 2, 1),
    ("8T14", "S4", 2, 1),
    ("8T15", "C8 : V4", 2, 1),
    ("8T19", "(C2)^3 : C4", 2, 1),
    ("8T21", "(C2)^3 : C4", 2, 1),
    ("8T22", "(C2)^3 : V4", 2, 1),
    ("8T31", "((C2)^4 : C2) : C2", 2, 1),
    ("8T32", "((C2)^3 : V4) : C3", 2, 1),
    ("8T37", "PSL(3,2)", 2, 1),
    ("8T38", "(((C2)^4 : C2) : C2) : C3", 2, 1),
    ("9T2", "(C3)^2", 3, 1),
    ("9T5", "(C3)^2 : C2", 3, 1),
    ("9T7", "(C3)^2 : C3", 3, 1),
    ("9T9", "(C3)^2 : C4", 3, 1),
    ("9T11", "(C3)^2 : C6", 3, 1),
    ("9T14", "(C3)^2 : Q8", 3, 1),
    ("9T23", "((C3)^2 : Q8) : C3", 3, 1),
    ("10T7", "A5", 2, 1),
    ("10T26", "PSL(2,9)", 2, 1),
    ("10T32", "S6", 2, 1),
    ("14T30", "PSL(2,13)", 2, 1),
    ("15T9", "(C5)^2 : C3", 5, 1),
    ("15T14", "(C5)^2 : S3", 5, 1),
];

pub fn table1_entries() -> Vec<Table1Entry> {
    ROWS.iter()
        .map(|&(label, structure, p, k)| Table1Entry {
            label,
            structure,
            nonzero_invariants: AbInvariants(vec![p; k]),
        })
        .collect()
}

/// Splits `"nTm"` into `(n, m)`.
pub fn parse_label(label: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("expected a label of the form nTm, got {label:?}"));
    let (n, m) = label.trim().split_once('T').ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    let m: usize = m.parse().map_err(|_| bad())?;
    if n == 0 || m == 0 {
        return Err(bad());
    }
    Ok((n, m))
}

pub fn table1_lookup(label: &str) -> Result<Table1Status> {
    let (n, m) = parse_label(label)?;
    if n == 1 || prime_factors(n as u64) == [n as u64] {
        return Ok(Table1Status::HoldsAlways);
    }
    if n == 12 || n > 15 {
        return Ok(Table1Status::Unknown);
    }
    let canonical = format!("{n}T{m}");
    Ok(ROWS
        .iter()
        .find(|r| r.0 == canonical)
        .map(|&(_, _, p, k)| Table1Status::Obstructed(AbInvariants(vec![p; k])))
        .unwrap_or(Table1Status::HoldsAlways))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        assert_eq!(table1_lookup("4T2").unwrap(), Table1Status::Obstructed(AbInvariants(vec![2])));
        assert_eq!(table1_lookup("8T3").unwrap(), Table1Status::Obstructed(AbInvariants(vec![2, 2, 2])));
        assert_eq!(table1_lookup("7T3").unwrap(), Table1Status::HoldsAlways);
        assert_eq!(table1_lookup("6T1").unwrap(), Table1Status::HoldsAlways);
        assert_eq!(table1_lookup("12T31").unwrap(), Table1Status::Unknown);
        assert_eq!(table1_lookup("16T1").unwrap(), Table1Status::Unknown);
        assert!(matches!(table1_lookup("4x2"), Err(Error::Parse(_))));
        assert!(matches!(table1_lookup("T2"), Err(Error::Parse(_))));
    }

    #[test]
    fn rows_are_distinct() {
        let e = table1_entries();
        assert_eq!(e.len(), 32);
        let mut labels: Vec<_> = e.iter().map(|x| x.label).collect();
        labels.dedup();
        assert_eq!(labels.len(), 32);
    }
}
