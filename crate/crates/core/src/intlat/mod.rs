//! Exact integer linear algebra: normal forms, sublattices of ℤⁿ and finite
//! abelian quotients.
//!
//! Row vectors throughout. A matrix `A` maps `x ↦ x·A`, lattices are row
//! spans, and kernels are left kernels.

mod int;
mod lattice;
mod mat;
mod normal_form;
mod quotient;
mod sparse;

pub use int::Int;
pub use lattice::{
    echelon_coords, integer_kernel, lattice_contains, lattice_intersection, saturation, solve_left,
};
pub use mat::IntMat;
pub use normal_form::{hnf, hnf_basis, snf, snf_diagonal, HermiteForm, HnfBuilder, SnfDecomposition};
pub use quotient::{coords_in_quotient, fin_ab, quotient_invariants, AbInvariants, AbelianQuotient};
pub use sparse::{CokernelWitness, SparseRow};
