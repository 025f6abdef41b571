//! The two distributive laws, generic over both carriers so they can be
//! applied to concrete states and to semantic values alike.

use crate::models::{DfaStep, McStep, MfaStep, WeightedStep};
use crate::Scalar;

/// Chain × DFA: follow the DFA on the chain's letter; the ✓-mass survives
/// only on an accepting output.
pub fn mc_dfa_law<X: Clone, Y: Clone, S: Scalar>(mc: &McStep<X, S>, dfa: &DfaStep<Y>) -> WeightedStep<(X, Y), S> {
    let (next, accept) = &dfa.next[mc.letter];
    WeightedStep {
        succ: mc
            .succ
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(x, p)| ((x.clone(), next.clone()), p.clone()))
            .collect(),
        check: if *accept { mc.check.clone() } else { S::zero() },
    }
}

/// Chain × MFA: weight `δ(a)(y)·σ(x)` to every pair, `δ(a)(✓)·σ(✓)` to ✓.
pub fn mc_mfa_law<X: Clone, Y: Clone, S: Scalar>(mc: &McStep<X, S>, mfa: &MfaStep<Y>) -> WeightedStep<(X, Y), S> {
    let (targets, check) = &mfa.next[mc.letter];
    let mut succ = Vec::new();
    for (x, p) in mc.succ.iter().filter(|(_, p)| !p.is_zero()) {
        for (y, m) in targets.iter().filter(|(_, m)| *m > 0) {
            succ.push(((x.clone(), y.clone()), S::from_nat(*m) * p.clone()));
        }
    }
    WeightedStep { succ, check: S::from_nat(*check) * mc.check.clone() }
}
