//! Plumbing graphs for the boundary of the Milnor fiber of a non-isolated
//! surface singularity, built from a decorated dual graph Γ_C, together with
//! a reduced plumbing calculus and the homological invariants read off the graphs.

pub mod algorithm;
pub mod arith;
pub mod builders;
pub mod calculus;
pub mod covering;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod hj;
pub mod invariants;

pub use error::{Error, Result};
