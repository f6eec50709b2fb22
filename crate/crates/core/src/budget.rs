//! Size limits for the expensive algorithms.
//!
//! Every limit is configuration rather than a constant; operations that
//! refuse an input report which field was exceeded.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Hard cap on materialized group elements.
    pub max_elements: usize,
    /// Largest group order accepted by subgroup-lattice enumeration.
    pub max_subgroup_order: usize,
    /// Cap on `(|K|−1)²·rank`, the number of degree-2 bar cochain coordinates.
    pub h2_unknowns: u128,
    /// Cap on `(|G|−1)^{n+1}` for `Hⁿ(G, ℤ)` via the bar complex.
    pub hn_cochains: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_elements: 1_000_000,
            max_subgroup_order: 400,
            h2_unknowns: 200_000,
            hn_cochains: 50_625,
        }
    }
}

impl Budget {
    /// Scales every limit by the same factor (the CLI `--budget` knob).
    pub fn scaled(self, factor: u64) -> Self {
        let f = factor.max(1);
        Budget {
            max_elements: self.max_elements.saturating_mul(f as usize),
            max_subgroup_order: self.max_subgroup_order.saturating_mul(f as usize),
            h2_unknowns: self.h2_unknowns.saturating_mul(f as u128),
            hn_cochains: self.hn_cochains.saturating_mul(f as u128),
        }
    }

    pub(crate) fn check(what: &str, budget: &'static str, needed: u128, limit: u128) -> Result<()> {
        if needed > limit {
            Err(Error::Budget {
                what: what.to_string(),
                budget,
                needed,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
