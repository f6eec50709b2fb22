//! Short structure names for small groups.
//!
//! Abelian groups are named from their invariant factors. Non-abelian groups
//! are looked up by order, element-order statistics and derived length of
//! the first step; unknown ones fall back to their order.

use std::collections::BTreeMap;

use super::{FinAbStructure, PermGroup};

/// `(name, order, |[G,G]|, [(element order, count)])`
type Signature = (&'static str, usize, usize, &'static [(u64, usize)]);

const KNOWN: &[Signature] = &[
    ("S3", 6, 3, &[(1, 1), (2, 3), (3, 2)]),
    ("D8", 8, 2, &[(1, 1), (2, 5), (4, 2)]),
    ("Q8", 8, 2, &[(1, 1), (2, 1), (4, 6)]),
    ("D10", 10, 5, &[(1, 1), (2, 5), (5, 4)]),
    ("A4", 12, 4, &[(1, 1), (2, 3), (3, 8)]),
    ("D12", 12, 3, &[(1, 1), (2, 7), (3, 2), (6, 2)]),
    ("C3 : C4", 12, 3, &[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)]),
    ("C2 x D8", 16, 2, &[(1, 1), (2, 11), (4, 4)]),
    ("C5 : C4", 20, 5, &[(1, 1), (2, 5), (4, 10), (5, 4)]),
    ("S4", 24, 12, &[(1, 1), (2, 9), (3, 8), (4, 6)]),
    ("SL(2,3)", 24, 8, &[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]),
    ("C2 x A4", 24, 4, &[(1, 1), (2, 7), (3, 8), (6, 8)]),
    ("C5 x D10", 50, 5, &[(1, 1), (2, 5), (5, 24), (10, 20)]),
    ("(C5 x C5) : C2", 50, 25, &[(1, 1), (2, 25), (5, 24)]),
    ("A5", 60, 60, &[(1, 1), (2, 15), (3, 20), (5, 24)]),
    ("(C5 x C5) : C3", 75, 25, &[(1, 1), (3, 50), (5, 24)]),
    ("(C5 x C5) : S3", 150, 75, &[(1, 1), (2, 15), (3, 50), (5, 24), (6, 0), (10, 60)]),
    ("PSL(3,2)", 168, 168, &[(1, 1), (2, 21), (3, 56), (4, 42), (7, 48)]),
    ("A6", 360, 360, &[(1, 1), (2, 45), (3, 80), (4, 90), (5, 144)]),
];

impl PermGroup {
    /// Element orders with multiplicities.
    pub fn order_statistics(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for g in self.elements() {
            *out.entry(g.order()).or_insert(0) += 1;
        }
        out
    }

    /// A short name such as `C2 x C2`, `A4` or `(C5 x C5) : C3`.
    pub fn structure_name(&self) -> String {
        if self.order() == 1 {
            return "1".into();
        }
        if self.is_abelian() {
            let inv = FinAbStructure::new(self).invariants().clone();
            return inv
                .as_slice()
                .iter()
                .rev()
                .map(|d| format!("C{d}"))
                .collect::<Vec<_>>()
                .join(" x ");
        }
        let stats = self.order_statistics();
        let derived = self.derived_subgroup().order();
        for &(name, order, d, hist) in KNOWN {
            if order == self.order()
                && d == derived
                && hist
                    .iter()
                    .filter(|(_, c)| *c > 0)
                    .map(|&(o, c)| (o, c))
                    .eq(stats.iter().map(|(&o, &c)| (o, c)))
            {
                return name.into();
            }
        }
        format!("<group of order {}>", self.order())
    }
}
