use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use super::law::{mc_dfa_law, mc_mfa_law};
use crate::models::{Alphabet, Dfa, LabelledMc, Mfa, ModelError, Target, WeightedStep};
use crate::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error(transparent)]
    Alphabet(#[from] ModelError),
    #[error("product exceeds {limit} states")]
    TooLarge { limit: usize },
    #[error("unknown initial pair ({0}, {1})")]
    UnknownInitial(usize, usize),
    #[error("invalid product: {0}")]
    Malformed(String),
}

/// Which pairs to build and how many are allowed.
#[derive(Clone, Debug)]
pub struct ProductOptions {
    /// Restrict to pairs reachable from these; `None` builds every pair.
    pub initial: Option<Vec<(usize, usize)>>,
    pub max_states: usize,
}

impl Default for ProductOptions {
    fn default() -> Self {
        ProductOptions { initial: None, max_states: 100_000 }
    }
}

impl ProductOptions {
    pub fn from_initial(initial: &[(usize, usize)]) -> Self {
        ProductOptions { initial: Some(initial.to_vec()), ..Self::default() }
    }
}

/// Finite coalgebra `Z → R⁺(Z + ✓)` on pair states. Row sums may exceed 1.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedProduct<S> {
    alphabet: Alphabet,
    pairs: Vec<(String, String)>,
    index: HashMap<(String, String), usize>,
    rows: Vec<Vec<(Target, S)>>,
}

pub fn pair_name(pair: &(String, String)) -> String {
    format!("({},{})", pair.0, pair.1)
}

impl<S: Scalar> WeightedProduct<S> {
    /// Assembles a product from named pairs and rows, as read back from a
    /// file. Rows are merged and zero entries dropped.
    pub fn from_parts(
        alphabet: Alphabet,
        pairs: Vec<(String, String)>,
        rows: Vec<Vec<(Target, S)>>,
    ) -> Result<Self, ProductError> {
        if rows.len() != pairs.len() {
            return Err(ProductError::Malformed(format!("{} pairs but {} rows", pairs.len(), rows.len())));
        }
        let mut index = HashMap::new();
        for (i, p) in pairs.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(ProductError::Malformed(format!("duplicate pair {}", pair_name(p))));
            }
        }
        let mut clean = Vec::with_capacity(rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            let mut merged: Vec<(Target, S)> = Vec::new();
            for (t, w) in row {
                if let Target::State(j) = t {
                    if j >= pairs.len() {
                        return Err(ProductError::Malformed(format!(
                            "edge from {} to unknown index {j}",
                            pair_name(&pairs[i])
                        )));
                    }
                }
                if w.is_negative() {
                    return Err(ProductError::Malformed(format!("negative weight at {}", pair_name(&pairs[i]))));
                }
                match merged.iter_mut().find(|(k, _)| *k == t) {
                    Some((_, acc)) => *acc = acc.clone() + w,
                    None => merged.push((t, w)),
                }
            }
            merged.retain(|(_, w)| !w.is_zero());
            merged.sort_by_key(|(t, _)| *t);
            clean.push(merged);
        }
        Ok(WeightedProduct { alphabet, pairs, index, rows: clean })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, s: usize) -> &(String, String) {
        &self.pairs[s]
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn state_name(&self, s: usize) -> String {
        pair_name(&self.pairs[s])
    }

    pub fn find(&self, mc_state: &str, spec_state: &str) -> Option<usize> {
        self.index.get(&(mc_state.to_string(), spec_state.to_string())).copied()
    }

    /// Nonzero entries of the row of `s`, sorted by target.
    pub fn row(&self, s: usize) -> &[(Target, S)] {
        &self.rows[s]
    }

    pub fn weight(&self, s: usize, t: Target) -> S {
        self.rows[s].iter().find(|(k, _)| *k == t).map(|(_, w)| w.clone()).unwrap_or_else(S::zero)
    }

    pub fn row_sum(&self, s: usize) -> S {
        self.rows[s].iter().fold(S::zero(), |acc, (_, w)| acc + w.clone())
    }

    pub fn step(&self, s: usize) -> WeightedStep<usize, S> {
        let mut succ = Vec::new();
        let mut check = S::zero();
        for (t, w) in &self.rows[s] {
            match t {
                Target::State(j) => succ.push((*j, w.clone())),
                Target::Check => check = w.clone(),
            }
        }
        WeightedStep { succ, check }
    }

    /// Every weight multiplied by `k`.
    pub fn scaled(&self, k: &S) -> Self {
        let mut out = self.clone();
        for row in &mut out.rows {
            for (_, w) in row.iter_mut() {
                *w = w.clone() * k.clone();
            }
            row.retain(|(_, w)| !w.is_zero());
        }
        out
    }
}

/// Shared driver: interns pairs breadth-first and applies `law` to each.
fn build<S: Scalar>(
    mc: &LabelledMc<S>,
    spec_names: &crate::models::StateNames,
    options: &ProductOptions,
    law: impl Fn(usize, usize) -> WeightedStep<(usize, usize), S>,
) -> Result<WeightedProduct<S>, ProductError> {
    let (nx, ny) = (mc.num_states(), spec_names.len());
    let starts: Vec<(usize, usize)> = match &options.initial {
        Some(init) => {
            for &(x, y) in init {
                if x >= nx || y >= ny {
                    return Err(ProductError::UnknownInitial(x, y));
                }
            }
            init.clone()
        }
        None => {
            if nx.saturating_mul(ny) > options.max_states {
                return Err(ProductError::TooLarge { limit: options.max_states });
            }
            (0..nx).flat_map(|x| (0..ny).map(move |y| (x, y))).collect()
        }
    };
    let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut queue = VecDeque::new();
    for p in starts {
        if let Entry::Vacant(e) = ids.entry(p) {
            e.insert(order.len());
            order.push(p);
            queue.push_back(p);
        }
    }
    let mut rows: Vec<Vec<(Target, S)>> = Vec::new();
    while let Some((x, y)) = queue.pop_front() {
        let step = law(x, y);
        let mut row = Vec::with_capacity(step.succ.len() + 1);
        for (pair, w) in step.succ {
            let id = match ids.get(&pair) {
                Some(&id) => id,
                None => {
                    if order.len() >= options.max_states {
                        return Err(ProductError::TooLarge { limit: options.max_states });
                    }
                    ids.insert(pair, order.len());
                    order.push(pair);
                    queue.push_back(pair);
                    order.len() - 1
                }
            };
            row.push((Target::State(id), w));
        }
        row.push((Target::Check, step.check));
        rows.push(row);
    }
    let pairs = order.iter().map(|&(x, y)| (mc.states().name(x).to_string(), spec_names.name(y).to_string())).collect();
    WeightedProduct::from_parts(mc.alphabet().clone(), pairs, rows)
}

/// The product of a chain and a DFA over the same letters.
pub fn mc_dfa_product<S: Scalar>(
    mc: &LabelledMc<S>,
    dfa: &Dfa,
    options: &ProductOptions,
) -> Result<WeightedProduct<S>, ProductError> {
    let tr = mc.alphabet().translation_to(dfa.alphabet())?;
    let mc_steps: Vec<_> = (0..mc.num_states())
        .map(|x| {
            let mut s = mc.step(x);
            s.letter = tr[s.letter];
            s
        })
        .collect();
    let dfa_steps: Vec<_> = (0..dfa.num_states()).map(|y| dfa.step(y)).collect();
    build(mc, dfa.states(), options, |x, y| mc_dfa_law(&mc_steps[x], &dfa_steps[y]))
}

/// The product of a chain and an MFA over the same letters.
pub fn mc_mfa_product<S: Scalar>(
    mc: &LabelledMc<S>,
    mfa: &Mfa,
    options: &ProductOptions,
) -> Result<WeightedProduct<S>, ProductError> {
    let tr = mc.alphabet().translation_to(mfa.alphabet())?;
    let mc_steps: Vec<_> = (0..mc.num_states())
        .map(|x| {
            let mut s = mc.step(x);
            s.letter = tr[s.letter];
            s
        })
        .collect();
    let mfa_steps: Vec<_> = (0..mfa.num_states()).map(|y| mfa.step(y)).collect();
    build(mc, mfa.states(), options, |x, y| mc_mfa_law(&mc_steps[x], &mfa_steps[y]))
}
