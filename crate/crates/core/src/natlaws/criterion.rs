//! The correctness criterion `q ∘ (τ_S × τ_R) = τ_{S⊗R} ∘ F(q) ∘ λ`,
//! evaluated exactly on finite inputs, and the witness that no law makes
//! it hold for chains against NFAs.

use std::fmt;

use thiserror::Error;

use super::scalar_pool;
use crate::models::{DfaStep, Letter, McStep, MfaStep, NfaStep, WeightedStep};
use crate::product::{mc_dfa_law, mc_mfa_law};
use crate::rng::Lcg;
use crate::semantics::{
    infer_q_expected, infer_q_prob, tau_dfa, tau_mc, tau_mfa, tau_nfa, Language, TraceMultiset, TraceSubdist, Word,
};
use crate::Scalar;

/// Maximum word length in sampled semantic values.
pub const SAMPLE_DEPTH: usize = 4;
/// Letters in sampled inputs.
pub const SAMPLE_ALPHABET: usize = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionFailure<S> {
    pub index: usize,
    pub left: S,
    pub right: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionReport<S> {
    pub samples: usize,
    pub passed: usize,
    pub first_failure: Option<CriterionFailure<S>>,
}

impl<S> CriterionReport<S> {
    pub fn all_passed(&self) -> bool {
        self.passed == self.samples
    }
}

/// `τ` on the product: `check + Σ w·v`.
pub fn tau_weighted<S: Scalar>(step: &WeightedStep<S, S>) -> S {
    step.succ.iter().fold(step.check.clone(), |acc, (v, w)| acc + w.clone() * v.clone())
}

/// Evaluates both sides on every input. `X` and `Y` are the semantic
/// domains of the two systems, so `τ_S`, `τ_R` return them directly.
pub fn check_criterion<S, X, Y, R>(
    law: impl Fn(&McStep<X, S>, &R) -> WeightedStep<(X, Y), S>,
    tau_s: impl Fn(&McStep<X, S>) -> X,
    tau_r: impl Fn(&R) -> Y,
    tau_sr: impl Fn(&WeightedStep<S, S>) -> S,
    q: impl Fn(&X, &Y) -> S,
    inputs: &[(McStep<X, S>, R)],
) -> CriterionReport<S>
where
    S: Scalar,
{
    let mut passed = 0;
    let mut first_failure = None;
    for (index, (s, r)) in inputs.iter().enumerate() {
        let left = q(&tau_s(s), &tau_r(r));
        let right = tau_sr(&law(s, r).pushforward(|(x, y)| q(x, y)));
        if left == right {
            passed += 1;
        } else if first_failure.is_none() {
            first_failure = Some(CriterionFailure { index, left, right });
        }
    }
    CriterionReport { samples: inputs.len(), passed, first_failure }
}

/// Draws a pool value no larger than `budget`, or zero.
fn pool_within<S: Scalar>(rng: &mut Lcg, budget: &S) -> S {
    let pool = scalar_pool::<S>();
    let v = rng.pick(&pool).clone();
    if v <= *budget {
        v
    } else {
        S::zero()
    }
}

fn random_word(rng: &mut Lcg) -> Word {
    let len = rng.range(1, SAMPLE_DEPTH);
    (0..len).map(|_| rng.below(SAMPLE_ALPHABET)).collect()
}

/// A trace subdistribution with at most three words of length ≤ 4.
pub fn random_subdist<S: Scalar>(rng: &mut Lcg) -> TraceSubdist<S> {
    let mut out = TraceSubdist::new();
    let mut budget = S::one();
    for _ in 0..rng.range(0, 3) {
        let w = random_word(rng);
        let p = pool_within(rng, &budget);
        budget = budget - p.clone();
        out.add(w, p);
    }
    out
}

pub fn random_language(rng: &mut Lcg) -> Language {
    (0..rng.range(0, 3)).map(|_| random_word(rng)).collect()
}

pub fn random_multiset(rng: &mut Lcg) -> TraceMultiset {
    (0..rng.range(0, 3)).map(|_| (random_word(rng), rng.range(1, 2) as u64)).collect()
}

/// A chain step over trace values. With `residual`, the ✓-weight is the
/// mass missing from the successors.
pub fn random_mc_step<S: Scalar>(rng: &mut Lcg, residual: bool) -> McStep<TraceSubdist<S>, S> {
    let letter = rng.below(SAMPLE_ALPHABET);
    let mut budget = S::one();
    let mut succ = Vec::new();
    for _ in 0..rng.range(0, 2) {
        let p = pool_within(rng, &budget);
        budget = budget - p.clone();
        succ.push((random_subdist(rng), p));
    }
    let check = if residual { budget } else { pool_within(rng, &budget) };
    McStep { letter, succ, check }
}

pub fn random_dfa_step(rng: &mut Lcg) -> DfaStep<Language> {
    DfaStep { next: (0..SAMPLE_ALPHABET).map(|_| (random_language(rng), rng.chance(1, 2))).collect() }
}

pub fn random_nfa_step(rng: &mut Lcg) -> NfaStep<Language> {
    NfaStep {
        next: (0..SAMPLE_ALPHABET)
            .map(|_| ((0..rng.range(0, 2)).map(|_| random_language(rng)).collect(), rng.chance(1, 2)))
            .collect(),
    }
}

pub fn random_mfa_step(rng: &mut Lcg) -> MfaStep<TraceMultiset> {
    MfaStep {
        next: (0..SAMPLE_ALPHABET)
            .map(|_| {
                let targets = (0..rng.range(0, 2)).map(|_| (random_multiset(rng), rng.range(0, 2) as u64)).collect();
                (targets, rng.range(0, 2) as u64)
            })
            .collect(),
    }
}

/// The only law left once naturality is imposed on the NFA side: the
/// ✓-weight `(1 − Σσ)·[✓ ∈ δ(a)]` and nothing on pairs.
pub fn nfa_candidate_law<X, Y, S: Scalar>(mc: &McStep<X, S>, nfa: &NfaStep<Y>) -> WeightedStep<(X, Y), S> {
    let residual = mc.succ.iter().fold(S::one(), |acc, (_, p)| acc - p.clone());
    let check = if nfa.next[mc.letter].1 { residual } else { S::zero() };
    WeightedStep { succ: Vec::new(), check }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    Mfa,
    Dfa,
    /// The chain × MFA law with `1` added to the ✓-weight.
    PerturbedMfa,
    NfaCandidate,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Mfa => "mfa",
            Law::Dfa => "dfa",
            Law::PerturbedMfa => "mfa-perturbed",
            Law::NfaCandidate => "nfa-candidate",
        })
    }
}

/// Runs the criterion for `law` on `samples` inputs drawn from `seed`.
pub fn run_law<S: Scalar>(law: Law, samples: usize, seed: u64) -> CriterionReport<S> {
    let mut rng = Lcg::new(seed);
    let tau_s = |s: &McStep<TraceSubdist<S>, S>| tau_mc(s, |x| x);
    match law {
        Law::Mfa | Law::PerturbedMfa => {
            let inputs: Vec<_> =
                (0..samples).map(|_| (random_mc_step(&mut rng, false), random_mfa_step(&mut rng))).collect();
            let perturb = law == Law::PerturbedMfa;
            check_criterion(
                |s, r| {
                    let mut out = mc_mfa_law(s, r);
                    if perturb {
                        out.check = out.check + S::one();
                    }
                    out
                },
                tau_s,
                |r: &MfaStep<TraceMultiset>| tau_mfa(r, |y| y),
                tau_weighted,
                infer_q_expected,
                &inputs,
            )
        }
        Law::Dfa => {
            let inputs: Vec<_> =
                (0..samples).map(|_| (random_mc_step(&mut rng, false), random_dfa_step(&mut rng))).collect();
            check_criterion(
                mc_dfa_law,
                tau_s,
                |r: &DfaStep<Language>| tau_dfa(r, |y| y),
                tau_weighted,
                infer_q_prob,
                &inputs,
            )
        }
        Law::NfaCandidate => {
            let inputs: Vec<_> =
                (0..samples).map(|_| (random_mc_step(&mut rng, true), random_nfa_step(&mut rng))).collect();
            check_criterion(
                nfa_candidate_law,
                tau_s,
                |r: &NfaStep<Language>| tau_nfa(r, |y| y),
                tau_weighted,
                infer_q_prob,
                &inputs,
            )
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("r = {0} must lie in (0, 1]")]
    OutOfRange(String),
    #[error("letter {0} is outside an alphabet of size {1}")]
    UnknownLetter(Letter, usize),
    #[error("the word must be non-empty")]
    EmptyWord,
}

/// Both sides of the criterion on one constructed input.
#[derive(Clone, Debug, PartialEq)]
pub struct NoGoReport<S> {
    pub r: S,
    pub left: S,
    pub right: S,
}

impl<S: Scalar> NoGoReport<S> {
    pub fn contradiction(&self) -> bool {
        self.left != self.right
    }
}

fn validate<S: Scalar>(r: &S, a: Letter, alphabet: usize) -> Result<(), WitnessError> {
    if !r.is_positive() || *r > S::one() {
        return Err(WitnessError::OutOfRange(r.to_string()));
    }
    if a >= alphabet {
        return Err(WitnessError::UnknownLetter(a, alphabet));
    }
    Ok(())
}

fn evaluate<S: Scalar>(sigma: &McStep<TraceSubdist<S>, S>, delta: &NfaStep<Language>, r: S) -> NoGoReport<S> {
    let left = infer_q_prob(&tau_mc(sigma, |x| x), &tau_nfa(delta, |y| y));
    let right = tau_weighted(&nfa_candidate_law(sigma, delta).pushforward(|(x, y)| infer_q_prob(x, y)));
    NoGoReport { r, left, right }
}

/// Chain step with mass `r` on the point distribution at `w` (✓-weight
/// `1 − r`) against an NFA step sending every letter to `{{w}}` without ✓:
/// the left side is `r`, the forced law gives `0`.
pub fn no_go_witness<S: Scalar>(r: S, a: Letter, w: &[Letter], alphabet: usize) -> Result<NoGoReport<S>, WitnessError> {
    validate(&r, a, alphabet)?;
    if w.is_empty() {
        return Err(WitnessError::EmptyWord);
    }
    if let Some(&bad) = w.iter().find(|&&l| l >= alphabet) {
        return Err(WitnessError::UnknownLetter(bad, alphabet));
    }
    let sigma =
        McStep { letter: a, succ: vec![(TraceSubdist::dirac(w.to_vec()), r.clone())], check: S::one() - r.clone() };
    let only_w: Language = [w.to_vec()].into_iter().collect();
    let delta = NfaStep { next: vec![(vec![only_w], false); alphabet] };
    Ok(evaluate(&sigma, &delta, r))
}

/// Chain step with mass `r` on the zero subdistribution against an NFA
/// step with empty successor languages and ✓-bits `checks`: both sides are
/// `(1 − r)·[✓ ∈ δ(a)]`.
pub fn sigma_one_check<S: Scalar>(r: S, a: Letter, checks: &[bool]) -> Result<NoGoReport<S>, WitnessError> {
    validate(&r, a, checks.len())?;
    let sigma = McStep { letter: a, succ: vec![(TraceSubdist::new(), r.clone())], check: S::one() - r.clone() };
    let delta = NfaStep { next: checks.iter().map(|&c| (vec![Language::new()], c)).collect() };
    Ok(evaluate(&sigma, &delta, r))
}
