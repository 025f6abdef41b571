use std::fmt;

use super::{Alphabet, Letter, McStep, ModelError, StateNames, Target, CHECK};
use crate::Scalar;

/// Finite labelled Markov chain `X → D≤1(X + ✓) × A`.
///
/// Construction only checks structure (names resolve). Numeric invariants
/// are reported by [`validate_mc`] so that malformed inputs can be shown
/// to the user instead of being silently rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct LabelledMc<S> {
    alphabet: Alphabet,
    states: StateNames,
    label: Vec<Letter>,
    succ: Vec<Vec<(Target, S)>>,
}

impl<S: Scalar> LabelledMc<S> {
    /// Builds from index-based rows. Duplicate targets in a row are summed
    /// and zero entries dropped.
    pub fn from_rows(
        alphabet: Alphabet,
        states: StateNames,
        label: Vec<Letter>,
        succ: Vec<Vec<(Target, S)>>,
    ) -> Result<Self, ModelError> {
        let n = states.len();
        if label.len() != n {
            let missing = states.name(label.len().min(n.saturating_sub(1))).to_string();
            return Err(ModelError::MissingLabel(missing));
        }
        if succ.len() != n {
            return Err(ModelError::RowCount { expected: n, found: succ.len() });
        }
        for (x, &l) in label.iter().enumerate() {
            if l >= alphabet.len() {
                return Err(ModelError::UnknownLetter {
                    name: l.to_string(),
                    context: format!("label of {}", states.name(x)),
                });
            }
        }
        let mut rows = Vec::with_capacity(n);
        for (x, row) in succ.into_iter().enumerate() {
            let mut merged: Vec<(Target, S)> = Vec::new();
            for (t, p) in row {
                if let Target::State(i) = t {
                    if i >= n {
                        return Err(ModelError::UnknownState {
                            name: i.to_string(),
                            context: format!("successor of {}", states.name(x)),
                        });
                    }
                }
                match merged.iter_mut().find(|(k, _)| *k == t) {
                    Some((_, acc)) => *acc = acc.clone() + p,
                    None => merged.push((t, p)),
                }
            }
            merged.retain(|(_, p)| !p.is_zero());
            merged.sort_by_key(|(t, _)| *t);
            rows.push(merged);
        }
        Ok(LabelledMc { alphabet, states, label, succ: rows })
    }

    /// Builds from names. `trans` entries are `(source, target, probability)`
    /// with `"CHECK"` naming the terminal target.
    pub fn from_names<'a>(
        alphabet: Alphabet,
        states: StateNames,
        labels: impl IntoIterator<Item = (&'a str, &'a str)>,
        trans: impl IntoIterator<Item = (&'a str, &'a str, S)>,
    ) -> Result<Self, ModelError> {
        let mut label: Vec<Option<Letter>> = vec![None; states.len()];
        for (s, l) in labels {
            let x = states.require(s, "label")?;
            let a = alphabet
                .letter(l)
                .ok_or_else(|| ModelError::UnknownLetter { name: l.to_string(), context: format!("label of {s}") })?;
            label[x] = Some(a);
        }
        let label = label
            .into_iter()
            .enumerate()
            .map(|(x, l)| l.ok_or_else(|| ModelError::MissingLabel(states.name(x).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut succ = vec![Vec::new(); states.len()];
        for (s, t, p) in trans {
            let x = states.require(s, "transition source")?;
            let target = if t == CHECK {
                Target::Check
            } else {
                Target::State(states.require(t, &format!("successor of {s}"))?)
            };
            succ[x].push((target, p));
        }
        Self::from_rows(alphabet, states, label, succ)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &StateNames {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn label(&self, x: usize) -> Letter {
        self.label[x]
    }

    /// Nonzero successor entries of `x`, sorted by target.
    pub fn successors(&self, x: usize) -> &[(Target, S)] {
        &self.succ[x]
    }

    pub fn prob(&self, x: usize, t: Target) -> S {
        self.succ[x].iter().find(|(k, _)| *k == t).map(|(_, p)| p.clone()).unwrap_or_else(S::zero)
    }

    pub fn mass(&self, x: usize) -> S {
        self.succ[x].iter().fold(S::zero(), |acc, (_, p)| acc + p.clone())
    }

    /// The coalgebra map `c(x)`.
    pub fn step(&self, x: usize) -> McStep<usize, S> {
        let mut succ = Vec::new();
        let mut check = S::zero();
        for (t, p) in &self.succ[x] {
            match t {
                Target::State(y) => succ.push((*y, p.clone())),
                Target::Check => check = p.clone(),
            }
        }
        McStep { letter: self.label[x], succ, check }
    }

    /// Copy with one edge weight replaced (or added).
    pub fn with_edge(&self, x: usize, t: Target, p: S) -> Self {
        let mut out = self.clone();
        out.succ[x].retain(|(k, _)| *k != t);
        if !p.is_zero() {
            out.succ[x].push((t, p));
            out.succ[x].sort_by_key(|(k, _)| *k);
        }
        out
    }

    /// Converts the scalar type, e.g. to `f64` for fast approximate runs.
    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LabelledMc<T> {
        LabelledMc {
            alphabet: self.alphabet.clone(),
            states: self.states.clone(),
            label: self.label.clone(),
            succ: self.succ.iter().map(|row| row.iter().map(|(t, p)| (*t, f(p))).collect()).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum McRule {
    NegativeProbability,
    MassExceedsOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub state: String,
    pub rule: McRule,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks substochasticity of every row. Label totality and key validity
/// are enforced when the chain is built, so only numeric rules remain.
pub fn validate_mc<S: Scalar>(mc: &LabelledMc<S>) -> ValidationReport {
    let mut violations = Vec::new();
    for x in 0..mc.num_states() {
        let name = mc.states().name(x);
        for (t, p) in mc.successors(x) {
            if p.is_negative() {
                let target = match t {
                    Target::State(y) => mc.states().name(*y),
                    Target::Check => CHECK,
                };
                violations.push(Violation {
                    state: name.to_string(),
                    rule: McRule::NegativeProbability,
                    message: format!("negative probability {p} at {name} -> {target}"),
                });
            }
        }
        let mass = mc.mass(x);
        if mass > S::one() {
            violations.push(Violation {
                state: name.to_string(),
                rule: McRule::MassExceedsOne,
                message: format!("mass exceeds 1 at {name} (total {mass})"),
            });
        }
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn one_state(trans: Vec<(&str, Rational)>) -> LabelledMc<Rational> {
        LabelledMc::from_names(
            Alphabet::new(["a"]).unwrap(),
            StateNames::new(["x"]).unwrap(),
            [("x", "a")],
            trans.into_iter().map(|(t, p)| ("x", t, p)),
        )
        .unwrap()
    }

    #[test]
    fn geometric_chain_is_valid() {
        let mc = one_state(vec![("CHECK", q(1, 3)), ("x", q(2, 3))]);
        assert!(validate_mc(&mc).is_ok());
        assert_eq!(mc.mass(0), q(1, 1));
    }

    #[test]
    fn excess_mass_is_reported() {
        let mc = one_state(vec![("CHECK", q(1, 2)), ("x", q(2, 3))]);
        let report = validate_mc(&mc);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].rule, McRule::MassExceedsOne);
        assert!(report.violations[0].message.starts_with("mass exceeds 1 at x"));
    }

    #[test]
    fn negative_probability_is_reported() {
        let mc = one_state(vec![("CHECK", q(-1, 2))]);
        let report = validate_mc(&mc);
        assert_eq!(report.violations[0].rule, McRule::NegativeProbability);
        assert!(report.violations[0].message.contains("negative probability"));
    }

    #[test]
    fn deadlock_mass_is_legal() {
        let mc = one_state(vec![("x", q(1, 4))]);
        assert!(validate_mc(&mc).is_ok());
    }

    #[test]
    fn structural_errors_name_the_state() {
        let err = LabelledMc::<Rational>::from_names(
            Alphabet::new(["a"]).unwrap(),
            StateNames::new(["x", "z"]).unwrap(),
            [("x", "a")],
            [],
        )
        .unwrap_err();
        assert_eq!(err, ModelError::MissingLabel("z".into()));
        let err = LabelledMc::from_names(
            Alphabet::new(["a"]).unwrap(),
            StateNames::new(["x"]).unwrap(),
            [("x", "a")],
            [("x", "nowhere", q(1, 2))],
        )
        .unwrap_err();
        assert!(matches!(err, ModelError::UnknownState { .. }));
        let err = LabelledMc::<Rational>::from_names(
            Alphabet::new(["a"]).unwrap(),
            StateNames::new(["x"]).unwrap(),
            [("x", "b")],
            [],
        )
        .unwrap_err();
        assert!(matches!(err, ModelError::UnknownLetter { .. }));
    }

    #[test]
    fn duplicate_edges_are_summed() {
        let mc = one_state(vec![("x", q(1, 4)), ("x", q(1, 4))]);
        assert_eq!(mc.prob(0, Target::State(0)), q(1, 2));
    }
}
