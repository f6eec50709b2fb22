//! Cohomological invariants of norm-one tori.
//!
//! The crate is layered bottom-up: [`intlat`] (exact integer linear algebra),
//! [`permgrp`] (materialized permutation groups), [`glat`] (integral
//! representations), [`cohom`] (group cohomology of lattices), [`flabby`]
//! (flabby resolutions), [`hnp`] (Hasse norm principle obstructions) and
//! [`catalog`] (named groups and input files).

pub mod budget;
pub mod catalog;
pub mod cohom;
pub mod error;
pub mod flabby;
pub mod glat;
pub mod hnp;
pub mod intlat;
pub mod permgrp;

pub use budget::Budget;
pub use error::{Error, Result};
