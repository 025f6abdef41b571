//! Commutative monoids, the functor `F_A`, natural transformations
//! `F_A ⇒ F_B`, and the executable correctness criterion.

mod criterion;
mod enumerate;
mod facts;
mod family;
mod functor;
mod monoid;
mod naturality;

pub use criterion::{
    check_criterion, nfa_candidate_law, no_go_witness, random_dfa_step, random_language, random_mc_step,
    random_mfa_step, random_multiset, random_nfa_step, random_subdist, run_law, sigma_one_check, tau_weighted,
    CriterionFailure, CriterionReport, Law, NoGoReport, WitnessError, SAMPLE_ALPHABET, SAMPLE_DEPTH,
};
pub use enumerate::{
    admissible_case2_tables, enumerate_nat_trans, extract_case1, extract_cyclic, pair_table_of, Enumeration,
    ExtractError, MAX_CANDIDATES,
};
pub use facts::{multisets_to_distributions, powerset_to_distributions, NonExistence};
pub use family::{
    cyclic_admissible, cyclic_shape, make_case1, make_case2, make_normalized, make_scaled, multiset_to_subdist,
    Case1Family, CyclicFamily, FamilyKind, NatError, NatFamily, NormalizedFamily, RawFamily, ScalarParam, ScaledFamily,
    ZeroFamily,
};
pub use functor::{all_maps, all_tuples, fa_apply, FaElement};
pub use monoid::{scalar_pool, AddScalars, CommMonoid, FinMonoid, GeneratorShape, MonoidError, MulScalars, Naturals};
pub use naturality::{
    check_naturality, equal_inputs_equal_outputs, zero_preserved, Harness, NaturalityReport, NaturalitySquare,
};
