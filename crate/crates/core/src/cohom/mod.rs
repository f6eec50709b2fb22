//! Cohomology of G-lattices.
//!
//! `H¹` is computed from cocycle values on generators, `H²` and `Hⁿ(G, ℤ)`
//! from the normalized bar complex, and the Tate groups `Ĥ⁻¹`, `Ĥ⁰` directly
//! from the norm map. Quantifiers over subgroups (flabbiness, coflabbiness)
//! run over conjugacy class representatives only: conjugate subgroups have
//! isomorphic cohomology with coefficients in a G-lattice.

mod bar;
mod h1;
mod tate;

use std::fmt;

use serde::Serialize;

use crate::intlat::{AbInvariants, Int};

pub use bar::{
    bar_cohomology, coboundary, h2, hn_trivial_z, res_kernel_hn_z, restrict_cochain, sha2omega,
    BarCohomology,
};
pub use h1::{extend_cocycle, h1, h1_with, H1Method};
pub use tate::{is_coflabby, is_flabby, tate_h0, tate_hminus1};

/// A cohomology group in Smith form.
///
/// Equality compares invariants only; representatives are a by-product.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyGroup {
    pub invariants: AbInvariants,
    /// What the representative vectors are coordinates of.
    pub ambient: String,
    pub ambient_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<Int>>>,
}

impl CohomologyGroup {
    pub fn new(invariants: AbInvariants, ambient: impl Into<String>, ambient_dim: usize) -> Self {
        CohomologyGroup {
            invariants,
            ambient: ambient.into(),
            ambient_dim,
            representatives: None,
        }
    }

    pub fn with_representatives(mut self, reps: Vec<Vec<Int>>) -> Self {
        self.representatives = Some(reps);
        self
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_trivial()
    }

    pub fn order(&self) -> u64 {
        self.invariants.order()
    }
}

impl PartialEq for CohomologyGroup {
    fn eq(&self, other: &Self) -> bool {
        self.invariants == other.invariants
    }
}

impl Eq for CohomologyGroup {}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.invariants.fmt(f)
    }
}
