//! Divisors, cyclotomic products, intersection matrices and the closed-form
//! invariants of ∂F and its pieces.

mod cyclo;
mod divisor;
mod formulas;
mod matrix;
mod orbifold;

pub use cyclo::CycloPoly;
pub use divisor::{lambda_div, omega_d, vertical_cycle, xi_d, BiDivisor, RootOfUnity};
pub use formulas::{
    charpoly, charpoly_boundary, div_j, div_phi, div_prime_j, p_h_cover, rank_report, rank_report_from,
    BoundaryCharpoly, BoundaryStatus, CharpolyKind, PhVariant, RankReport,
};
pub use matrix::{det, intersection_data, rank, smith_diagonal, to_big, IntersectionData, Matrix};
pub use orbifold::{orbifold_euler, OrbifoldEuler};

/// Exact coefficients c₀..c_deg.
pub fn cyclo_expand(p: &CycloPoly) -> crate::Result<Vec<num_bigint::BigInt>> {
    p.expand()
}
