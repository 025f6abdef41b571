//! Coalgebraic product constructions for labelled Markov chains and finite
//! automata, their least-fixed-point semantics, and a small laboratory for
//! natural transformations between finitely supported monoid-valued
//! functors.
//!
//! Everything numeric is generic over [`Scalar`]. [`Rational`] is the exact
//! instantiation used for every reported answer; the `*F64` aliases exist
//! for quick approximate runs.

pub mod corpus;
pub mod linalg;
pub mod models;
pub mod natlaws;
pub mod product;
pub mod rng;
mod scalar;
pub mod semantics;

pub use num_rational::BigRational;
pub use scalar::{parse_rational, Scalar};

/// Exact arbitrary-precision rational in lowest terms.
pub type Rational = BigRational;

pub type Mc = models::LabelledMc<Rational>;
pub type McF64 = models::LabelledMc<f64>;
pub type Product = product::WeightedProduct<Rational>;
pub type ProductF64 = product::WeightedProduct<f64>;
pub type RewardChain = product::RewardMc<Rational>;
pub type Value = semantics::ExtValue<Rational>;
pub type ValueF64 = semantics::ExtValue<f64>;
pub type Traces = semantics::TraceSubdist<Rational>;

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
