//! Dense linear algebra over any [`crate::Scalar`]: Gaussian elimination
//! and a two-phase simplex method.

mod gauss;
mod simplex;

pub use gauss::solve_linear;
pub use simplex::{lp_min_nonneg, LpOutcome};
