//! Depth-bounded semantics: `depth` Kleene iterations of `Φ` from `⊥`,
//! each one a single application of the matching modality at every state.
//! After `k` rounds the value at a state is exact on all words of length
//! at most `k` and empty beyond.

use super::modality::{tau_dfa, tau_mc, tau_mfa, tau_nfa};
use super::{Language, SemanticsError, TraceMultiset, TraceSubdist};
use crate::models::{Dfa, LabelledMc, Mfa, Nfa};
use crate::Scalar;

fn iterate<T: Clone>(n: usize, depth: usize, bottom: T, mut phi: impl FnMut(&[T], usize) -> T) -> Vec<T> {
    let mut v = vec![bottom; n];
    for _ in 0..depth {
        v = (0..n).map(|s| phi(&v, s)).collect();
    }
    v
}

fn check_state(s: usize, n: usize) -> Result<(), SemanticsError> {
    if s < n {
        Ok(())
    } else {
        Err(SemanticsError::UnknownState(s))
    }
}

/// Values at every state after `depth` rounds.
pub fn mc_bounded_traces_all<S: Scalar>(mc: &LabelledMc<S>, depth: usize) -> Vec<TraceSubdist<S>> {
    let steps: Vec<_> = (0..mc.num_states()).map(|x| mc.step(x)).collect();
    iterate(mc.num_states(), depth, TraceSubdist::new(), |v, x| tau_mc(&steps[x], |&x2| &v[x2]))
}

pub fn mc_bounded_traces<S: Scalar>(
    mc: &LabelledMc<S>,
    x: usize,
    depth: usize,
) -> Result<TraceSubdist<S>, SemanticsError> {
    check_state(x, mc.num_states())?;
    Ok(mc_bounded_traces_all(mc, depth).swap_remove(x))
}

pub fn dfa_bounded_language(dfa: &Dfa, y: usize, depth: usize) -> Result<Language, SemanticsError> {
    check_state(y, dfa.num_states())?;
    let steps: Vec<_> = (0..dfa.num_states()).map(|s| dfa.step(s)).collect();
    let v = iterate(dfa.num_states(), depth, Language::new(), |v, s| tau_dfa(&steps[s], |&t| &v[t]));
    Ok(v.into_iter().nth(y).expect("checked"))
}

pub fn nfa_bounded_language(nfa: &Nfa, y: usize, depth: usize) -> Result<Language, SemanticsError> {
    check_state(y, nfa.num_states())?;
    let steps: Vec<_> = (0..nfa.num_states()).map(|s| nfa.step(s)).collect();
    let v = iterate(nfa.num_states(), depth, Language::new(), |v, s| tau_nfa(&steps[s], |&t| &v[t]));
    Ok(v.into_iter().nth(y).expect("checked"))
}

pub fn mfa_bounded_multiset_all(mfa: &Mfa, depth: usize) -> Vec<TraceMultiset> {
    let steps: Vec<_> = (0..mfa.num_states()).map(|s| mfa.step(s)).collect();
    iterate(mfa.num_states(), depth, TraceMultiset::new(), |v, s| tau_mfa(&steps[s], |&t| &v[t]))
}

pub fn mfa_bounded_multiset(mfa: &Mfa, y: usize, depth: usize) -> Result<TraceMultiset, SemanticsError> {
    check_state(y, mfa.num_states())?;
    Ok(mfa_bounded_multiset_all(mfa, depth).swap_remove(y))
}
