//! Least-fixed-point semantics.
//!
//! * depth-bounded trace, language and run-count oracles,
//! * the modalities `τ` and inference maps `q`,
//! * Kleene iteration and an exact solver for product values on `[0, ∞]`.
//!
//! Bounded values are stored sparsely: only words with nonzero entries.

mod bounded;
mod domain;
mod modality;
mod solve;

pub use bounded::{
    dfa_bounded_language, mc_bounded_traces, mc_bounded_traces_all, mfa_bounded_multiset, mfa_bounded_multiset_all,
    nfa_bounded_language,
};
pub use domain::{ExtValue, Language, TraceMultiset, TraceSubdist, Word};
pub use modality::{infer_q_expected, infer_q_prob, tau_dfa, tau_mc, tau_mfa, tau_nfa, tau_product};
pub use solve::{
    product_value_exact, product_value_iterate, product_values_exact, product_values_iterate, pruned_max_row_sum,
};

use thiserror::Error;

/// Default depth of the bounded oracles.
pub const DEFAULT_ORACLE_DEPTH: usize = 12;
/// Default number of Kleene iterations.
pub const DEFAULT_ITERATE_STEPS: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemanticsError {
    #[error("unknown state index {0}")]
    UnknownState(usize),
}
