//! One-step behaviours: the values `F X` of the functors the coalgebras use.
//!
//! Each struct is generic over its carrier so the same distributive law can
//! run on concrete state spaces (building a product) and on semantic domains
//! (checking the correctness criterion).

use super::Letter;

/// `D≤1(X + ✓) × A`: emitted letter, sub-probabilities to successors and
/// the mass of terminating now.
#[derive(Clone, Debug, PartialEq)]
pub struct McStep<X, S> {
    pub letter: Letter,
    pub succ: Vec<(X, S)>,
    pub check: S,
}

/// `(Y × 𝔹)^A`, indexed by letter: next state and the acceptance output.
#[derive(Clone, Debug, PartialEq)]
pub struct DfaStep<Y> {
    pub next: Vec<(Y, bool)>,
}

/// `P_f(Y + ✓)^A`, indexed by letter: successor set and whether ✓ is in it.
#[derive(Clone, Debug, PartialEq)]
pub struct NfaStep<Y> {
    pub next: Vec<(Vec<Y>, bool)>,
}

/// `M(Y + ✓)^A`, indexed by letter: successor multiplicities and the
/// multiplicity of ✓.
#[derive(Clone, Debug, PartialEq)]
pub struct MfaStep<Y> {
    pub next: Vec<(Vec<(Y, u64)>, u64)>,
}

/// `R⁺(Z) × ℝ≥0`: nonnegative weights to successors plus a weight to ✓.
/// The codomain of both product distributive laws.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedStep<Z, S> {
    pub succ: Vec<(Z, S)>,
    pub check: S,
}

impl<X, S: Clone> McStep<X, S> {
    /// Functor action on the carrier. Entries are kept apart; the
    /// modalities only ever sum over them.
    pub fn map<X2>(&self, mut f: impl FnMut(&X) -> X2) -> McStep<X2, S> {
        McStep {
            letter: self.letter,
            succ: self.succ.iter().map(|(x, p)| (f(x), p.clone())).collect(),
            check: self.check.clone(),
        }
    }
}

impl<Z, S: crate::Scalar> WeightedStep<Z, S> {
    /// Functor action: pushes weights forward along `f`, merging entries
    /// whose images coincide.
    pub fn pushforward<Z2: PartialEq>(&self, mut f: impl FnMut(&Z) -> Z2) -> WeightedStep<Z2, S> {
        let mut succ: Vec<(Z2, S)> = Vec::new();
        for (z, w) in &self.succ {
            let image = f(z);
            match succ.iter_mut().find(|(k, _)| *k == image) {
                Some((_, acc)) => *acc = acc.clone() + w.clone(),
                None => succ.push((image, w.clone())),
            }
        }
        WeightedStep { succ, check: self.check.clone() }
    }

    pub fn total(&self) -> S {
        self.succ.iter().fold(self.check.clone(), |acc, (_, w)| acc + w.clone())
    }
}
