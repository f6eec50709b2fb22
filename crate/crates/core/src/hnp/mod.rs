//! The first obstruction to the Hasse norm principle for `K/k` with Galois
//! closure `L/k`, `G = Gal(L/k)`, `H = Gal(L/K)`.
//!
//! `Obs₁ = Ker ψ₁ / φ₁(Ker ψ₂)` where `ψ₁: H^ab → G^ab` is induced by the
//! inclusion and `ψ₂, φ₁` run over the local pieces `H_w = H ∩ x G_v x⁻¹`
//! indexed by the double cosets `H\G/G_v`. All groups live inside `H^ab`,
//! written in its Smith coordinates, and are compared as subgroups.

mod obstruction;
mod report;
mod survey;
mod table1;

use serde::{Serialize, Serializer};

use crate::intlat::{fin_ab, AbInvariants, Int, IntMat};

pub use obstruction::{
    first_obstruction_dnr, first_obstruction_dr, first_obstruction_n, FirstObstructionN,
    Obstruction,
};
pub use report::{report, DrEntry, GroupSummary, HnpReport, ObstructionSummary, ReportInput};
pub use survey::{hnp_survey, HnpSurvey};
pub use table1::{parse_label, table1_entries, table1_lookup, Table1Entry, Table1Status};

/// A subgroup of a finite abelian group `⊕ ℤ/a_i`.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionPart {
    pub invariants: AbInvariants,
    pub ambient: AbInvariants,
    /// Canonical generators in the ambient Smith coordinates.
    #[serde(serialize_with = "rows")]
    pub coords: IntMat,
}

fn rows<S: Serializer>(m: &IntMat, s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<Vec<Int>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    v.serialize(s)
}

impl ObstructionPart {
    /// The subgroup generated by `gens` (rows in ambient coordinates).
    pub fn from_generators(ambient: &AbInvariants, gens: &IntMat) -> Self {
        let k = ambient.len();
        if k == 0 {
            return ObstructionPart {
                invariants: AbInvariants::trivial(),
                ambient: ambient.clone(),
                coords: IntMat::zeros(0, 0),
            };
        }
        let gens = if gens.rows() == 0 {
            IntMat::zeros(0, k)
        } else {
            gens.clone()
        };
        ObstructionPart {
            invariants: fin_ab::subgroup_invariants(ambient, &gens),
            ambient: ambient.clone(),
            coords: fin_ab::canonical_coords(ambient, &gens),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_trivial()
    }

    /// Subgroup inclusion in the common ambient group.
    pub fn is_subgroup_of(&self, other: &ObstructionPart) -> bool {
        debug_assert_eq!(self.ambient, other.ambient);
        self.ambient.is_empty() || fin_ab::subgroup_le(&self.ambient, &self.coords, &other.coords)
    }

    /// Subgroup equality; coordinates are canonical so this is row equality.
    pub fn same_subgroup(&self, other: &ObstructionPart) -> bool {
        self.ambient == other.ambient && self.coords == other.coords
    }

    /// `self + other`
    pub fn join(&self, other: &ObstructionPart) -> ObstructionPart {
        if self.ambient.is_empty() {
            return self.clone();
        }
        ObstructionPart::from_generators(&self.ambient, &fin_ab::join(&self.coords, &other.coords))
    }
}

impl PartialEq for ObstructionPart {
    fn eq(&self, other: &Self) -> bool {
        self.same_subgroup(other)
    }
}

impl Eq for ObstructionPart {}
