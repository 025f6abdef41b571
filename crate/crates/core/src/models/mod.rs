//! Labelled Markov chains and the specification automata (DFA, NFA, MFA),
//! plus determinization, the NFA-to-MFA embedding and ambiguity checking.

mod alphabet;
mod ambiguity;
mod automata;
mod determinize;
mod mc;
mod step;

pub use alphabet::{Alphabet, Letter, StateNames};
pub use ambiguity::{check_unambiguous, AmbiguityReport};
pub use automata::{Dfa, Mfa, MfaRow, Nfa, NfaRow, SpecAutomaton};
pub use determinize::{determinize, embed_nfa_as_mfa, subset_name};
pub use mc::{validate_mc, LabelledMc, McRule, ValidationReport, Violation};
pub use step::{DfaStep, McStep, MfaStep, NfaStep, WeightedStep};

use thiserror::Error;

/// Reserved name of the terminal target ✓ in every serialized map.
pub const CHECK: &str = "CHECK";

/// Successor key: a declared state or the terminal target ✓.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    State(usize),
    Check,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("{0} names must not be empty")]
    EmptyName(&'static str),
    #[error("duplicate letter {0:?}")]
    DuplicateLetter(String),
    #[error("duplicate state {0:?}")]
    DuplicateState(String),
    #[error("state name {0:?} is reserved for the terminal target")]
    ReservedName(String),
    #[error("unknown state {name:?} in {context}")]
    UnknownState { name: String, context: String },
    #[error("unknown letter {name:?} in {context}")]
    UnknownLetter { name: String, context: String },
    #[error("state {0:?} has no label")]
    MissingLabel(String),
    #[error("missing transition for state {state:?} on letter {letter:?}")]
    MissingTransition { state: String, letter: String },
    #[error("transition for state {state:?} on letter {letter:?} given twice")]
    DuplicateTransition { state: String, letter: String },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },
}
