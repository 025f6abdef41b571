use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Dfa, Mfa, MfaRow, Nfa, StateNames};

/// Name of the DFA state standing for a set of NFA states, e.g. `{y1,y2}`.
pub fn subset_name(nfa: &Nfa, subset: &BTreeSet<usize>) -> String {
    let inner: Vec<&str> = subset.iter().map(|&y| nfa.states().name(y)).collect();
    format!("{{{}}}", inner.join(","))
}

/// Subset construction over the reachable subsets.
///
/// Exploration starts from the singletons of `initial`, or of every state
/// when `None`. A transition accepts iff ✓ is in the union of the NFA
/// successor sets; the empty subset appears as a rejecting sink when some
/// transition leads to it.
pub fn determinize(nfa: &Nfa, initial: Option<&[usize]>) -> Dfa {
    let starts: Vec<usize> = match initial {
        Some(ys) => ys.to_vec(),
        None => (0..nfa.num_states()).collect(),
    };
    let mut ids: HashMap<BTreeSet<usize>, usize> = HashMap::new();
    let mut subsets: Vec<BTreeSet<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern = |set: BTreeSet<usize>, subsets: &mut Vec<BTreeSet<usize>>, queue: &mut VecDeque<usize>| {
        *ids.entry(set.clone()).or_insert_with(|| {
            subsets.push(set);
            queue.push_back(subsets.len() - 1);
            subsets.len() - 1
        })
    };
    for y in starts {
        intern(BTreeSet::from([y]), &mut subsets, &mut queue);
    }
    let mut delta: Vec<Vec<(usize, bool)>> = Vec::new();
    while let Some(id) = queue.pop_front() {
        let set = subsets[id].clone();
        let mut row = Vec::with_capacity(nfa.alphabet().len());
        for a in 0..nfa.alphabet().len() {
            let mut next = BTreeSet::new();
            let mut accept = false;
            for &y in &set {
                let r = nfa.row(y, a);
                next.extend(r.targets.iter().copied());
                accept |= r.check;
            }
            row.push((intern(next, &mut subsets, &mut queue), accept));
        }
        if delta.len() <= id {
            delta.resize(id + 1, Vec::new());
        }
        delta[id] = row;
    }
    let names =
        StateNames::new(subsets.iter().map(|s| subset_name(nfa, s))).expect("distinct subsets have distinct names");
    Dfa::from_rows(nfa.alphabet().clone(), names, delta).expect("subset construction is total")
}

/// Multiplicity 1 on every NFA successor (and on ✓ when present).
pub fn embed_nfa_as_mfa(nfa: &Nfa) -> Mfa {
    let delta = (0..nfa.num_states())
        .map(|y| {
            (0..nfa.alphabet().len())
                .map(|a| {
                    let r = nfa.row(y, a);
                    MfaRow { targets: r.targets.iter().map(|&z| (z, 1)).collect(), check: u64::from(r.check) }
                })
                .collect()
        })
        .collect();
    Mfa::from_rows(nfa.alphabet().clone(), nfa.states().clone(), delta).expect("same shape as the NFA")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{Alphabet, NfaRow};
    use crate::semantics::{dfa_bounded_language, nfa_bounded_language};

    pub(crate) fn two_state_nfa() -> Nfa {
        Nfa::from_names(
            Alphabet::new(["a"]).unwrap(),
            StateNames::new(["y1", "y2"]).unwrap(),
            [("y1", "a", "y1"), ("y1", "a", "y2"), ("y1", "a", "CHECK"), ("y2", "a", "y2"), ("y2", "a", "CHECK")],
        )
        .unwrap()
    }

    fn languages_agree(nfa: &Nfa, y: usize, depth: usize) {
        let dfa = determinize(nfa, Some(&[y]));
        let start = dfa.states().get(&subset_name(nfa, &BTreeSet::from([y]))).unwrap();
        assert_eq!(nfa_bounded_language(nfa, y, depth).unwrap(), dfa_bounded_language(&dfa, start, depth).unwrap());
    }

    #[test]
    fn self_loop_with_exit_gives_one_accepting_state() {
        let nfa = Nfa::from_names(
            Alphabet::new(["a"]).unwrap(),
            StateNames::new(["y"]).unwrap(),
            [("y", "a", "y"), ("y", "a", "CHECK")],
        )
        .unwrap();
        let dfa = determinize(&nfa, None);
        assert_eq!(dfa.num_states(), 1);
        assert_eq!(dfa.states().name(0), "{y}");
        assert_eq!(dfa.transition(0, 0), (0, true));
        languages_agree(&nfa, 0, 6);
    }

    #[test]
    fn deterministic_nfa_is_preserved() {
        let nfa = Nfa::from_names(
            Alphabet::new(["a", "b"]).unwrap(),
            StateNames::new(["p", "q"]).unwrap(),
            [("p", "a", "q"), ("p", "b", "p"), ("q", "a", "p"), ("q", "b", "q"), ("q", "b", "CHECK")],
        )
        .unwrap();
        let dfa = determinize(&nfa, Some(&[0]));
        assert_eq!(dfa.num_states(), 2);
        for (y, name) in [(0, "{p}"), (1, "{q}")] {
            let d = dfa.states().get(name).unwrap();
            for a in 0..2 {
                let r = nfa.row(y, a);
                let (next, acc) = dfa.transition(d, a);
                assert_eq!(acc, r.check);
                let expected = subset_name(&nfa, &r.targets);
                assert_eq!(dfa.states().name(next), expected);
            }
        }
        languages_agree(&nfa, 0, 6);
    }

    #[test]
    fn literal_reading_accepts_exactly_a_plus() {
        let nfa = two_state_nfa();
        let dfa = determinize(&nfa, Some(&[0]));
        assert_eq!(dfa.num_states(), 2);
        assert_eq!(dfa.states().names(), &["{y1}".to_string(), "{y1,y2}".to_string()]);
        let lang = dfa_bounded_language(&dfa, 0, 4).unwrap();
        let expected: Vec<Vec<usize>> = (1..=4).map(|n| vec![0; n]).collect();
        assert_eq!(lang.words().cloned().collect::<Vec<_>>(), expected);
        languages_agree(&nfa, 0, 6);
        languages_agree(&nfa, 1, 6);
    }

    #[test]
    fn empty_subset_becomes_rejecting_sink() {
        let nfa =
            Nfa::from_names(Alphabet::new(["a", "b"]).unwrap(), StateNames::new(["y"]).unwrap(), [("y", "a", "CHECK")])
                .unwrap();
        let dfa = determinize(&nfa, None);
        let sink = dfa.states().get("{}").unwrap();
        assert_eq!(dfa.transition(sink, 0), (sink, false));
        assert_eq!(dfa.transition(0, 0), (sink, true));
    }

    #[test]
    fn embedding_puts_multiplicity_one_everywhere() {
        let nfa = two_state_nfa();
        let mfa = embed_nfa_as_mfa(&nfa);
        assert_eq!(mfa.row(0, 0).targets, [(0, 1), (1, 1)].into_iter().collect());
        assert_eq!(mfa.row(0, 0).check, 1);
        assert_eq!(mfa.row(1, 0).targets, [(1, 1)].into_iter().collect());
        let empty = Nfa::from_rows(
            Alphabet::new(["a"]).unwrap(),
            StateNames::new(["y"]).unwrap(),
            vec![vec![NfaRow::default()]],
        )
        .unwrap();
        let m = embed_nfa_as_mfa(&empty);
        assert!(m.row(0, 0).targets.is_empty());
        assert_eq!(m.row(0, 0).check, 0);
    }
}
