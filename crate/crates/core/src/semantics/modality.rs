//! Modalities `τ: F Ω → Ω` and inference maps `q`.
//!
//! Each modality takes a one-step behaviour over an arbitrary carrier and a
//! valuation of that carrier in the semantic domain, so `τ ∘ F(u)` is
//! evaluated without materialising `F(u)`.

use super::{ExtValue, Language, TraceMultiset, TraceSubdist};
use crate::models::{DfaStep, McStep, MfaStep, NfaStep, WeightedStep};
use crate::Scalar;

fn prefixed(letter: usize, word: &[usize]) -> Vec<usize> {
    let mut w = Vec::with_capacity(word.len() + 1);
    w.push(letter);
    w.extend_from_slice(word);
    w
}

/// Chain modality: `τ(σ, a)(a) = σ(✓)` and `τ(σ, a)(a·w) = Σ_μ σ(μ)·μ(w)`.
pub fn tau_mc<'u, X, S: Scalar>(
    step: &'u McStep<X, S>,
    value: impl Fn(&'u X) -> &'u TraceSubdist<S>,
) -> TraceSubdist<S> {
    let a = step.letter;
    let mut out = TraceSubdist::new();
    out.add(vec![a], step.check.clone());
    for (x, p) in &step.succ {
        if p.is_zero() {
            continue;
        }
        for (w, v) in value(x).iter() {
            out.add(prefixed(a, w), p.clone() * v.clone());
        }
    }
    out
}

/// DFA modality: `{a | π₂ δ(a)} ∪ {a·w | w ∈ π₁ δ(a)}`.
pub fn tau_dfa<'u, Y>(step: &'u DfaStep<Y>, value: impl Fn(&'u Y) -> &'u Language) -> Language {
    let mut out = Language::new();
    for (a, (next, accept)) in step.next.iter().enumerate() {
        if *accept {
            out.insert(vec![a]);
        }
        for w in value(next).words() {
            out.insert(prefixed(a, w));
        }
    }
    out
}

/// NFA modality: `{a | ✓ ∈ δ(a)} ∪ {a·w | L ∈ δ(a), w ∈ L}`.
pub fn tau_nfa<'u, Y>(step: &'u NfaStep<Y>, value: impl Fn(&'u Y) -> &'u Language) -> Language {
    let mut out = Language::new();
    for (a, (targets, check)) in step.next.iter().enumerate() {
        if *check {
            out.insert(vec![a]);
        }
        for y in targets {
            for w in value(y).words() {
                out.insert(prefixed(a, w));
            }
        }
    }
    out
}

/// MFA modality: `τ(δ)(a) = δ(a)(✓)` and `τ(δ)(a·w) = Σ_μ δ(a)(μ)·μ(w)`.
pub fn tau_mfa<'u, Y>(step: &'u MfaStep<Y>, value: impl Fn(&'u Y) -> &'u TraceMultiset) -> TraceMultiset {
    let mut out = TraceMultiset::new();
    for (a, (targets, check)) in step.next.iter().enumerate() {
        out.add(vec![a], *check);
        for (y, m) in targets {
            if *m == 0 {
                continue;
            }
            for (w, k) in value(y).iter() {
                out.add(prefixed(a, w), m.checked_mul(*k).expect("run count overflow"));
            }
        }
    }
    out
}

/// Product modality on `[0, ∞]`: `σ(✓) + Σ_r r·σ(r)`.
pub fn tau_product<Z, S: Scalar>(step: &WeightedStep<Z, S>, value: impl Fn(&Z) -> ExtValue<S>) -> ExtValue<S> {
    step.succ.iter().fold(ExtValue::Finite(step.check.clone()), |acc, (z, w)| acc + value(z).scale(w))
}

/// Acceptance probability `q(σ, L) = Σ_{w ∈ L} σ(w)`.
pub fn infer_q_prob<S: Scalar>(sigma: &TraceSubdist<S>, lang: &Language) -> S {
    if sigma.len() <= lang.len() {
        sigma.iter().filter(|(w, _)| lang.contains(w)).fold(S::zero(), |acc, (_, p)| acc + p.clone())
    } else {
        lang.words().fold(S::zero(), |acc, w| acc + sigma.get(w))
    }
}

/// Expected number of accepting runs `q(σ, μ) = Σ_w μ(w)·σ(w)`.
pub fn infer_q_expected<S: Scalar>(sigma: &TraceSubdist<S>, mu: &TraceMultiset) -> S {
    sigma.iter().fold(S::zero(), |acc, (w, p)| {
        let k = mu.get(w);
        if k == 0 {
            acc
        } else {
            acc + S::from_nat(k) * p.clone()
        }
    })
}
