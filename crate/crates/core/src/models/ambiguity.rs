use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use super::{Letter, Nfa};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbiguityReport {
    pub unambiguous: bool,
    /// Start state and shortest word with two distinct accepting runs, when
    /// one exists of length at most the requested depth.
    pub witness: Option<(usize, Vec<Letter>)>,
}

/// Node of the self-product: two run prefixes ending in `p` and `q`,
/// `split` once they have differed somewhere.
type PairNode = (usize, usize, bool);

/// Decides whether every start state has at most one accepting run per
/// word, by breadth-first search over the self-product of the NFA.
///
/// The decision is exact and unbounded; `depth` only limits the length of
/// the reported witness.
pub fn check_unambiguous(nfa: &Nfa, initial: Option<&[usize]>, depth: usize) -> AmbiguityReport {
    let starts: Vec<usize> = match initial {
        Some(ys) => ys.to_vec(),
        None => (0..nfa.num_states()).collect(),
    };
    let mut best: Option<(usize, Vec<Letter>)> = None;
    let mut ambiguous = false;
    for y in starts {
        if let Some(word) = shortest_ambiguous_word(nfa, y) {
            ambiguous = true;
            if word.len() <= depth && best.as_ref().is_none_or(|(_, w)| word.len() < w.len()) {
                best = Some((y, word));
            }
        }
    }
    AmbiguityReport { unambiguous: !ambiguous, witness: best }
}

fn shortest_ambiguous_word(nfa: &Nfa, start: usize) -> Option<Vec<Letter>> {
    let root: PairNode = (start, start, false);
    let mut parent: HashMap<PairNode, Option<(PairNode, Letter)>> = HashMap::from([(root, None)]);
    let mut queue = VecDeque::from([root]);
    let rebuild = |parent: &HashMap<PairNode, Option<(PairNode, Letter)>>, mut node: PairNode| {
        let mut word = Vec::new();
        while let Some(Some((prev, a))) = parent.get(&node) {
            word.push(*a);
            node = *prev;
        }
        word.reverse();
        word
    };
    while let Some(node @ (p, q, split)) = queue.pop_front() {
        for a in 0..nfa.alphabet().len() {
            let (rp, rq) = (nfa.row(p, a), nfa.row(q, a));
            if split && rp.check && rq.check {
                let mut word = rebuild(&parent, node);
                word.push(a);
                return Some(word);
            }
            for &p2 in &rp.targets {
                for &q2 in &rq.targets {
                    let next = (p2.min(q2), p2.max(q2), split || p2 != q2);
                    if let Entry::Vacant(e) = parent.entry(next) {
                        e.insert(Some((node, a)));
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    None
}
