//! Reduced oriented plumbing calculus: moves, a reduction strategy, and
//! invariants for comparing graphs.

mod iso;
mod normal;
mod ops;
mod reduce;
mod signature;

pub use iso::{compare, isomorphic, Comparison, ISO_LIMIT};
pub use normal::{chain_normal_form, closed};
pub use ops::{r0a, r1_blowdown, r3_absorb, r5_handle, r6_naive, r8_annulus};
pub use reduce::{reduce, reduce_step, reduce_traced, reduce_with, ReduceOptions, Rule, Step};
pub use signature::{invariant_signature, InvariantSignature};
