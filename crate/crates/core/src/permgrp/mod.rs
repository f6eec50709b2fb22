//! Finite permutation groups with every element materialized.
//!
//! Conventions follow the usual computer-algebra ones: products compose left
//! to right, `g^x = x⁻¹gx` and `[a, b] = a⁻¹b⁻¹ab`. A lexicographic total
//! order on permutations fixes every representative choice.

mod abelian;
mod describe;
mod cosets;
mod group;
mod hom;
mod perm;
mod subgroups;

pub use abelian::FinAbStructure;
pub use cosets::{coset_action, double_coset_elements, double_cosets, right_coset_labels, CosetAction};
pub use group::PermGroup;
pub use hom::GroupHom;
pub use perm::{commutator, Perm};
pub use subgroups::{prime_factors, SubgroupLattice};
