//! Products of a labelled chain with a DFA or an MFA, and the reduction of
//! a product to a chain with multiplicative rewards.
//!
//! There is deliberately no chain × NFA product: no distributive law makes
//! such a product compute acceptance probabilities (see
//! [`crate::natlaws::no_go_witness`]). NFAs are determinised first.

mod build;
mod law;
mod reward;

pub use build::{mc_dfa_product, mc_mfa_product, pair_name, ProductError, ProductOptions, WeightedProduct};
pub use law::{mc_dfa_law, mc_mfa_law};
pub use reward::{expected_reward_iterate, normalize_to_reward_mc, RewardMc};
