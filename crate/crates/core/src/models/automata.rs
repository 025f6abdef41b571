use std::collections::{BTreeMap, BTreeSet};

use super::{Alphabet, DfaStep, Letter, MfaStep, ModelError, NfaStep, StateNames, CHECK};

/// Deterministic automaton with Mealy-style acceptance: each transition
/// carries the next state and an accept bit for "the word ends here".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    states: StateNames,
    delta: Vec<Vec<(usize, bool)>>,
}

/// Successor set of an NFA state on one letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NfaRow {
    pub targets: BTreeSet<usize>,
    pub check: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    states: StateNames,
    delta: Vec<Vec<NfaRow>>,
}

/// Successor multiset of an MFA state on one letter. Zero multiplicities
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MfaRow {
    pub targets: BTreeMap<usize, u64>,
    pub check: u64,
}

/// Multiset finite automaton: a weighted automaton over `(ℕ, +, ×)` whose
/// semantics counts accepting runs per word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mfa {
    alphabet: Alphabet,
    states: StateNames,
    delta: Vec<Vec<MfaRow>>,
}

/// Any of the specification automata a chain can be checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecAutomaton {
    Dfa(Dfa),
    Nfa(Nfa),
    Mfa(Mfa),
}

impl SpecAutomaton {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            SpecAutomaton::Dfa(d) => d.alphabet(),
            SpecAutomaton::Nfa(n) => n.alphabet(),
            SpecAutomaton::Mfa(m) => m.alphabet(),
        }
    }

    pub fn states(&self) -> &StateNames {
        match self {
            SpecAutomaton::Dfa(d) => d.states(),
            SpecAutomaton::Nfa(n) => n.states(),
            SpecAutomaton::Mfa(m) => m.states(),
        }
    }
}

fn letter_of(alphabet: &Alphabet, name: &str, context: &str) -> Result<Letter, ModelError> {
    alphabet
        .letter(name)
        .ok_or_else(|| ModelError::UnknownLetter { name: name.to_string(), context: context.to_string() })
}

impl Dfa {
    pub fn from_rows(
        alphabet: Alphabet,
        states: StateNames,
        delta: Vec<Vec<(usize, bool)>>,
    ) -> Result<Self, ModelError> {
        if delta.len() != states.len() {
            return Err(ModelError::RowCount { expected: states.len(), found: delta.len() });
        }
        for (y, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                let letter = alphabet.name(row.len().min(alphabet.len() - 1)).to_string();
                return Err(ModelError::MissingTransition { state: states.name(y).to_string(), letter });
            }
            if let Some((bad, _)) = row.iter().find(|(t, _)| *t >= states.len()) {
                return Err(ModelError::UnknownState {
                    name: bad.to_string(),
                    context: format!("transition of {}", states.name(y)),
                });
            }
        }
        Ok(Dfa { alphabet, states, delta })
    }

    /// `delta` entries are `(state, letter, next, accept)`; every state and
    /// letter pair must appear exactly once.
    pub fn from_names<'a>(
        alphabet: Alphabet,
        states: StateNames,
        delta: impl IntoIterator<Item = (&'a str, &'a str, &'a str, bool)>,
    ) -> Result<Self, ModelError> {
        let mut table: Vec<Vec<Option<(usize, bool)>>> = vec![vec![None; alphabet.len()]; states.len()];
        for (s, l, t, acc) in delta {
            let y = states.require(s, "transition source")?;
            let a = letter_of(&alphabet, l, &format!("transition of {s}"))?;
            let next = states.require(t, &format!("transition of {s} on {l}"))?;
            if table[y][a].replace((next, acc)).is_some() {
                return Err(ModelError::DuplicateTransition { state: s.to_string(), letter: l.to_string() });
            }
        }
        let mut rows = Vec::with_capacity(states.len());
        for (y, row) in table.into_iter().enumerate() {
            let row = row
                .into_iter()
                .enumerate()
                .map(|(a, e)| {
                    e.ok_or_else(|| ModelError::MissingTransition {
                        state: states.name(y).to_string(),
                        letter: alphabet.name(a).to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Self::from_rows(alphabet, states, rows)
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

    pub fn transition(&self, y: usize, a: Letter) -> (usize, bool) {
        self.delta[y][a]
    }

    pub fn step(&self, y: usize) -> DfaStep<usize> {
        DfaStep { next: self.delta[y].clone() }
    }

    /// The same automaton read as an NFA: `{next} ∪ {✓ | accept}`.
    pub fn to_nfa(&self) -> Nfa {
        let delta = self
            .delta
            .iter()
            .map(|row| row.iter().map(|&(next, acc)| NfaRow { targets: BTreeSet::from([next]), check: acc }).collect())
            .collect();
        Nfa { alphabet: self.alphabet.clone(), states: self.states.clone(), delta }
    }
}

impl Nfa {
    pub fn from_rows(alphabet: Alphabet, states: StateNames, delta: Vec<Vec<NfaRow>>) -> Result<Self, ModelError> {
        if delta.len() != states.len() {
            return Err(ModelError::RowCount { expected: states.len(), found: delta.len() });
        }
        for (y, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(ModelError::RowCount { expected: alphabet.len(), found: row.len() });
            }
            if let Some(bad) = row.iter().flat_map(|r| r.targets.iter()).find(|&&t| t >= states.len()) {
                return Err(ModelError::UnknownState {
                    name: bad.to_string(),
                    context: format!("transition of {}", states.name(y)),
                });
            }
        }
        Ok(Nfa { alphabet, states, delta })
    }

    /// `delta` entries are `(state, letter, target)` with `"CHECK"` for ✓.
    /// Absent pairs have the empty successor set.
    pub fn from_names<'a>(
        alphabet: Alphabet,
        states: StateNames,
        delta: impl IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    ) -> Result<Self, ModelError> {
        let mut rows = vec![vec![NfaRow::default(); alphabet.len()]; states.len()];
        for (s, l, t) in delta {
            let y = states.require(s, "transition source")?;
            let a = letter_of(&alphabet, l, &format!("transition of {s}"))?;
            if t == CHECK {
                rows[y][a].check = true;
            } else {
                let z = states.require(t, &format!("transition of {s} on {l}"))?;
                rows[y][a].targets.insert(z);
            }
        }
        Self::from_rows(alphabet, states, rows)
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

    pub fn row(&self, y: usize, a: Letter) -> &NfaRow {
        &self.delta[y][a]
    }

    pub fn step(&self, y: usize) -> NfaStep<usize> {
        NfaStep { next: self.delta[y].iter().map(|r| (r.targets.iter().copied().collect(), r.check)).collect() }
    }

    /// Every successor set has at most one state: the NFA is a DFA with a
    /// partial transition function.
    pub fn is_deterministic(&self) -> bool {
        self.delta.iter().flatten().all(|r| r.targets.len() <= 1)
    }
}

impl Mfa {
    pub fn from_rows(alphabet: Alphabet, states: StateNames, delta: Vec<Vec<MfaRow>>) -> Result<Self, ModelError> {
        if delta.len() != states.len() {
            return Err(ModelError::RowCount { expected: states.len(), found: delta.len() });
        }
        let mut delta = delta;
        for (y, row) in delta.iter_mut().enumerate() {
            if row.len() != alphabet.len() {
                return Err(ModelError::RowCount { expected: alphabet.len(), found: row.len() });
            }
            for r in row.iter_mut() {
                if let Some(bad) = r.targets.keys().find(|&&t| t >= states.len()) {
                    return Err(ModelError::UnknownState {
                        name: bad.to_string(),
                        context: format!("transition of {}", states.name(y)),
                    });
                }
                r.targets.retain(|_, m| *m > 0);
            }
        }
        Ok(Mfa { alphabet, states, delta })
    }

    /// `delta` entries are `(state, letter, target, multiplicity)`;
    /// repeated entries add up.
    pub fn from_names<'a>(
        alphabet: Alphabet,
        states: StateNames,
        delta: impl IntoIterator<Item = (&'a str, &'a str, &'a str, u64)>,
    ) -> Result<Self, ModelError> {
        let mut rows: Vec<Vec<MfaRow>> = vec![vec![MfaRow::default(); alphabet.len()]; states.len()];
        for (s, l, t, m) in delta {
            let y = states.require(s, "transition source")?;
            let a = letter_of(&alphabet, l, &format!("transition of {s}"))?;
            if t == CHECK {
                rows[y][a].check += m;
            } else {
                let z = states.require(t, &format!("transition of {s} on {l}"))?;
                *rows[y][a].targets.entry(z).or_insert(0) += m;
            }
        }
        Self::from_rows(alphabet, states, rows)
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

    pub fn row(&self, y: usize, a: Letter) -> &MfaRow {
        &self.delta[y][a]
    }

    pub fn step(&self, y: usize) -> MfaStep<usize> {
        MfaStep {
            next: self.delta[y].iter().map(|r| (r.targets.iter().map(|(&z, &m)| (z, m)).collect(), r.check)).collect(),
        }
    }

    /// Every multiplicity multiplied by `k`.
    pub fn scaled(&self, k: u64) -> Mfa {
        let delta = self
            .delta
            .iter()
            .map(|row| {
                row.iter()
                    .map(|r| MfaRow {
                        targets: r.targets.iter().filter(|_| k > 0).map(|(&z, &m)| (z, m * k)).collect(),
                        check: r.check * k,
                    })
                    .collect()
            })
            .collect();
        Mfa { alphabet: self.alphabet.clone(), states: self.states.clone(), delta }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn dfa_must_be_total() {
        let err = Dfa::from_names(ab(), StateNames::new(["y"]).unwrap(), [("y", "a", "y", true)]).unwrap_err();
        assert_eq!(err, ModelError::MissingTransition { state: "y".into(), letter: "b".into() });
    }

    #[test]
    fn dfa_rejects_duplicate_entries() {
        let err = Dfa::from_names(
            ab(),
            StateNames::new(["y"]).unwrap(),
            [("y", "a", "y", true), ("y", "a", "y", false), ("y", "b", "y", true)],
        )
        .unwrap_err();
        assert!(matches!(err, ModelError::DuplicateTransition { .. }));
    }

    #[test]
    fn dfa_reads_as_deterministic_nfa() {
        let dfa = Dfa::from_names(
            ab(),
            StateNames::new(["p", "q"]).unwrap(),
            [("p", "a", "q", false), ("p", "b", "p", true), ("q", "a", "q", true), ("q", "b", "p", false)],
        )
        .unwrap();
        let nfa = dfa.to_nfa();
        assert!(nfa.is_deterministic());
        assert_eq!(nfa.row(0, 1), &NfaRow { targets: BTreeSet::from([0]), check: true });
        assert_eq!(nfa.row(0, 0), &NfaRow { targets: BTreeSet::from([1]), check: false });
    }

    #[test]
    fn missing_nfa_entries_are_empty() {
        let nfa = Nfa::from_names(ab(), StateNames::new(["y"]).unwrap(), [("y", "a", "CHECK")]).unwrap();
        assert_eq!(nfa.row(0, 1), &NfaRow::default());
        assert!(nfa.row(0, 0).check);
    }

    #[test]
    fn mfa_multiplicities_add_and_scale() {
        let mfa = Mfa::from_names(
            ab(),
            StateNames::new(["y"]).unwrap(),
            [("y", "a", "y", 1), ("y", "a", "y", 2), ("y", "a", "CHECK", 1), ("y", "b", "y", 0)],
        )
        .unwrap();
        assert_eq!(mfa.row(0, 0).targets[&0], 3);
        assert!(mfa.row(0, 1).targets.is_empty());
        let tripled = mfa.scaled(3);
        assert_eq!(tripled.row(0, 0).targets[&0], 9);
        assert_eq!(tripled.row(0, 0).check, 3);
        assert!(mfa.scaled(0).row(0, 0).targets.is_empty());
    }
}
