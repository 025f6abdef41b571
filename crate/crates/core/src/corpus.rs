//! Small fixed models and seeded random instances used by tests, the
//! acceptance suite and the command-line tool.

use std::collections::{BTreeMap, BTreeSet};

use crate::models::{check_unambiguous, Alphabet, Mfa, MfaRow, Nfa, NfaRow, StateNames, Target};
use crate::product::{mc_mfa_product, ProductOptions, WeightedProduct};
use crate::rng::Lcg;
use crate::semantics::pruned_max_row_sum;
use crate::{ratio, Mc, Rational};

fn names(prefix: &str, n: usize) -> StateNames {
    StateNames::new((0..n).map(|i| format!("{prefix}{i}"))).expect("distinct")
}

pub fn alphabet_ab() -> Alphabet {
    Alphabet::new(["a", "b"]).expect("distinct")
}

/// One state `x` labelled `a`: terminate with 1/3, loop with 2/3.
pub fn geometric_chain() -> Mc {
    Mc::from_names(
        Alphabet::new(["a"]).expect("one letter"),
        StateNames::new(["x"]).expect("one state"),
        [("x", "a")],
        [("x", "CHECK", ratio(1, 3)), ("x", "x", ratio(2, 3))],
    )
    .expect("well-formed")
}

/// `y1 –a→ {y1, y2, ✓}`, `y2 –a→ {y2, ✓}`: the word `aⁿ` has `n` accepting
/// runs from `y1`.
pub fn run_counter_nfa() -> Nfa {
    Nfa::from_names(
        Alphabet::new(["a"]).expect("one letter"),
        StateNames::new(["y1", "y2"]).expect("two states"),
        [("y1", "a", "y1"), ("y1", "a", "y2"), ("y1", "a", "CHECK"), ("y2", "a", "y2"), ("y2", "a", "CHECK")],
    )
    .expect("well-formed")
}

pub fn run_counter_mfa() -> Mfa {
    crate::models::embed_nfa_as_mfa(&run_counter_nfa())
}

/// Loop 1/2, terminate 1/2 against a spec with three runs through the loop
/// and one to ✓: the product loop weighs 3/2.
pub fn divergent_pair() -> (Mc, Mfa) {
    let mc = Mc::from_names(
        Alphabet::new(["a"]).expect("one letter"),
        StateNames::new(["x"]).expect("one state"),
        [("x", "a")],
        [("x", "CHECK", ratio(1, 2)), ("x", "x", ratio(1, 2))],
    )
    .expect("well-formed");
    let mfa = Mfa::from_names(
        Alphabet::new(["a"]).expect("one letter"),
        StateNames::new(["y"]).expect("one state"),
        [("y", "a", "y", 3), ("y", "a", "CHECK", 1)],
    )
    .expect("well-formed");
    (mc, mfa)
}

/// A chain with up to `max_states` states over `{a, b}`. Each state has one
/// to three targets (✓ included) with integer weights 1–3, plus an optional
/// unit of deficit, normalised by their sum.
pub fn random_chain(rng: &mut Lcg, max_states: usize) -> Mc {
    let n = rng.range(1, max_states);
    let label = (0..n).map(|_| rng.below(2)).collect();
    let succ = (0..n)
        .map(|_| {
            let mut weights: BTreeMap<Target, i64> = BTreeMap::new();
            for _ in 0..rng.range(1, 3) {
                let t = rng.below(n + 1);
                let target = if t == n { Target::Check } else { Target::State(t) };
                *weights.entry(target).or_default() += rng.range(1, 3) as i64;
            }
            let total: i64 = weights.values().sum::<i64>() + rng.range(0, 1) as i64;
            weights.into_iter().map(|(t, w)| (t, ratio(w, total))).collect()
        })
        .collect();
    Mc::from_rows(alphabet_ab(), names("x", n), label, succ).expect("well-formed")
}

/// An MFA with up to `max_states` states over `{a, b}` and multiplicities
/// at most `max_mult`; each target appears with probability 1/2.
pub fn random_mfa(rng: &mut Lcg, max_states: usize, max_mult: u64) -> Mfa {
    let m = rng.range(1, max_states);
    let delta = (0..m)
        .map(|_| {
            (0..2)
                .map(|_| {
                    let mut targets = BTreeMap::new();
                    for y in 0..m {
                        if rng.chance(1, 2) {
                            targets.insert(y, rng.range(1, max_mult as usize) as u64);
                        }
                    }
                    let check = if rng.chance(1, 2) { rng.range(1, max_mult as usize) as u64 } else { 0 };
                    MfaRow { targets, check }
                })
                .collect()
        })
        .collect();
    Mfa::from_rows(alphabet_ab(), names("y", m), delta).expect("well-formed")
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub mc: Mc,
    pub mfa: Mfa,
    /// `(chain state, MFA state)`.
    pub init: (usize, usize),
    pub product: WeightedProduct<Rational>,
    /// Index of `init` in `product`.
    pub start: usize,
}

fn instance(mc: Mc, mfa: Mfa, init: (usize, usize)) -> Instance {
    let product = mc_mfa_product(&mc, &mfa, &ProductOptions::from_initial(&[init])).expect("shared alphabet");
    let start = product.find(mc.states().name(init.0), mfa.states().name(init.1)).expect("initial pair is built");
    Instance { mc, mfa, init, product, start }
}

/// The first `count` random pairs (≤ 5 chain states, ≤ 3 MFA states,
/// multiplicities ≤ 2) whose pruned product from `(x0, y0)` is non-empty
/// with every inter-state row sum at most 9/10.
pub fn convergent_corpus(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = Lcg::new(seed);
    let bound = ratio(9, 10);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mc = random_chain(&mut rng, 5);
        let mfa = random_mfa(&mut rng, 3, 2);
        let inst = instance(mc, mfa, (0, 0));
        match pruned_max_row_sum(&inst.product, inst.start).expect("valid start") {
            Some(max) if max <= bound => out.push(inst),
            _ => {}
        }
    }
    out
}

/// Random pairs where `(x0, y0)` carries a product self-loop of weight
/// `2p > 1` and terminates with positive weight.
pub fn divergent_corpus(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = Lcg::new(seed);
    (0..count)
        .map(|_| {
            let base = random_chain(&mut rng, 5);
            let mfa = random_mfa(&mut rng, 3, 2);
            let n = base.num_states();
            let (num, den) = *rng.pick(&[(2i64, 3i64), (3, 4), (4, 5), (3, 5)]);
            let mut label: Vec<usize> = (0..n).map(|x| base.label(x)).collect();
            let a = rng.below(2);
            label[0] = a;
            let mut succ: Vec<Vec<(Target, Rational)>> = (0..n).map(|x| base.successors(x).to_vec()).collect();
            succ[0] = vec![(Target::State(0), ratio(num, den)), (Target::Check, ratio(den - num, den))];
            let mc = Mc::from_rows(alphabet_ab(), base.states().clone(), label, succ).expect("well-formed");
            let mut delta: Vec<Vec<MfaRow>> =
                (0..mfa.num_states()).map(|y| (0..2).map(|l| mfa.row(y, l).clone()).collect()).collect();
            delta[0][a] = MfaRow { targets: BTreeMap::from([(0, 2)]), check: 1 };
            let mfa = Mfa::from_rows(alphabet_ab(), mfa.states().clone(), delta).expect("well-formed");
            instance(mc, mfa, (0, 0))
        })
        .collect()
}

/// Handwritten unambiguous NFAs over `{a, b}` with their start state.
pub fn handwritten_unambiguous() -> Vec<(Nfa, usize)> {
    let ab = alphabet_ab;
    let build = |states: &[&str], delta: &[(&str, &str, &str)]| {
        Nfa::from_names(ab(), StateNames::new(states.iter().copied()).expect("distinct"), delta.iter().copied())
            .expect("well-formed")
    };
    vec![
        // words ending in a
        (build(&["q"], &[("q", "a", "q"), ("q", "b", "q"), ("q", "a", "CHECK")]), 0),
        // exactly one b
        (
            build(
                &["p", "q"],
                &[("p", "a", "p"), ("p", "b", "q"), ("p", "b", "CHECK"), ("q", "a", "q"), ("q", "a", "CHECK")],
            ),
            0,
        ),
        // a⁺
        (build(&["p"], &[("p", "a", "p"), ("p", "a", "CHECK")]), 0),
        // second-to-last letter is b
        (
            build(
                &["p", "q"],
                &[("p", "a", "p"), ("p", "b", "p"), ("p", "b", "q"), ("q", "a", "CHECK"), ("q", "b", "CHECK")],
            ),
            0,
        ),
    ]
}

/// A random NFA with up to three states over `{a, b}`.
pub fn random_nfa(rng: &mut Lcg) -> Nfa {
    let m = rng.range(1, 3);
    let delta = (0..m)
        .map(|_| {
            (0..2)
                .map(|_| NfaRow {
                    targets: (0..m).filter(|_| rng.chance(1, 2)).collect::<BTreeSet<_>>(),
                    check: rng.chance(1, 2),
                })
                .collect()
        })
        .collect();
    Nfa::from_rows(alphabet_ab(), names("y", m), delta).expect("well-formed")
}

/// The handwritten NFAs followed by seeded random ones that are
/// unambiguous from state 0, `count` in total.
pub fn unambiguous_nfas(seed: u64, count: usize) -> Vec<(Nfa, usize)> {
    let mut out = handwritten_unambiguous();
    out.truncate(count);
    let mut rng = Lcg::new(seed);
    while out.len() < count {
        let nfa = random_nfa(&mut rng);
        if check_unambiguous(&nfa, Some(&[0]), 0).unambiguous {
            out.push((nfa, 0));
        }
    }
    out
}

/// A weighted product on `states` pair states, arranged as a chain of
/// strongly connected blocks of at most four states. Every block has row
/// sums below 1 and leaks into the next block and ✓.
pub fn scaling_product(seed: u64, states: usize) -> WeightedProduct<Rational> {
    let mut rng = Lcg::new(seed);
    let mut blocks = Vec::new();
    let mut start = 0;
    while start < states {
        let len = rng.range(1, 4).min(states - start);
        blocks.push(start..start + len);
        start += len;
    }
    let mut rows = vec![Vec::new(); states];
    for (b, block) in blocks.iter().enumerate() {
        let next = blocks.get(b + 1).map(|r| r.start);
        for s in block.clone() {
            let den = 8;
            // a cycle through the block keeps it strongly connected
            let cyc = if s + 1 < block.end { s + 1 } else { block.start };
            let mut used = 0;
            let mut push = |t: Target, w: i64, used: &mut i64| {
                rows[s].push((t, ratio(w, den)));
                *used += w;
            };
            push(Target::State(cyc), rng.range(1, 3) as i64, &mut used);
            if block.len() > 2 && rng.chance(1, 2) {
                push(Target::State(block.start + rng.below(block.len())), 1, &mut used);
            }
            if let Some(nx) = next {
                push(Target::State(nx + rng.below(blocks[b + 1].len())), rng.range(1, 2) as i64, &mut used);
            }
            push(Target::Check, rng.range(1, 2) as i64, &mut used);
        }
    }
    let pairs = (0..states).map(|s| (format!("x{s}"), format!("y{}", s % 5))).collect();
    WeightedProduct::from_parts(alphabet_ab(), pairs, rows).expect("well-formed")
}
