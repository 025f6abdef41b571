use std::cmp::Ordering;
use std::collections::{btree_map, BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};

use crate::models::Letter;
use crate::Scalar;

/// A non-empty sequence of letters.
pub type Word = Vec<Letter>;

/// Finite-support truncation of a subdistribution over words.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceSubdist<S> {
    entries: BTreeMap<Word, S>,
}

impl<S: Scalar> Default for TraceSubdist<S> {
    fn default() -> Self {
        TraceSubdist { entries: BTreeMap::new() }
    }
}

impl<S: Scalar> TraceSubdist<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Dirac mass 1 on `word`.
    pub fn dirac(word: Word) -> Self {
        let mut d = Self::new();
        d.add(word, S::one());
        d
    }

    /// Adds `p` to the entry of `word`; zero entries are never stored.
    pub fn add(&mut self, word: Word, p: S) {
        if p.is_zero() {
            return;
        }
        match self.entries.entry(word) {
            btree_map::Entry::Vacant(v) => {
                v.insert(p);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + p;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn get(&self, word: &[Letter]) -> S {
        self.entries.get(word).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mass(&self) -> S {
        self.entries.values().fold(S::zero(), |acc, p| acc + p.clone())
    }

    /// Entries of length at most `depth`.
    pub fn truncate(&self, depth: usize) -> Self {
        TraceSubdist {
            entries: self
                .entries
                .iter()
                .filter(|(w, _)| w.len() <= depth)
                .map(|(w, p)| (w.clone(), p.clone()))
                .collect(),
        }
    }
}

impl<S: Scalar> FromIterator<(Word, S)> for TraceSubdist<S> {
    fn from_iter<I: IntoIterator<Item = (Word, S)>>(iter: I) -> Self {
        let mut d = Self::new();
        for (w, p) in iter {
            d.add(w, p);
        }
        d
    }
}

/// Finite-support truncation of a multiset of words: accepting-run counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceMultiset {
    entries: BTreeMap<Word, u64>,
}

impl TraceMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, word: Word, m: u64) {
        if m == 0 {
            return;
        }
        let e = self.entries.entry(word).or_insert(0);
        *e = e.checked_add(m).expect("run count overflow");
    }

    pub fn get(&self, word: &[Letter]) -> u64 {
        self.entries.get(word).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &u64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl FromIterator<(Word, u64)> for TraceMultiset {
    fn from_iter<I: IntoIterator<Item = (Word, u64)>>(iter: I) -> Self {
        let mut m = Self::new();
        for (w, k) in iter {
            m.add(w, k);
        }
        m
    }
}

/// Finite set of non-empty words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Language {
    words: BTreeSet<Word>,
}

impl Language {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a word; the empty word is never a member.
    pub fn insert(&mut self, word: Word) {
        if !word.is_empty() {
            self.words.insert(word);
        }
    }

    pub fn contains(&self, word: &[Letter]) -> bool {
        self.words.contains(word)
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl FromIterator<Word> for Language {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        let mut l = Self::new();
        for w in iter {
            l.insert(w);
        }
        l
    }
}

/// A nonnegative value or `∞`, with `∞ · 0 = 0 · ∞ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtValue<S> {
    Finite(S),
    Infinite,
}

impl<S: Scalar> ExtValue<S> {
    pub fn zero() -> Self {
        ExtValue::Finite(S::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtValue::Infinite)
    }

    pub fn finite(&self) -> Option<&S> {
        match self {
            ExtValue::Finite(v) => Some(v),
            ExtValue::Infinite => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtValue::Finite(v) if v.is_zero())
    }

    /// Multiplication by a finite nonnegative weight.
    pub fn scale(&self, w: &S) -> Self {
        match self {
            _ if w.is_zero() => Self::zero(),
            ExtValue::Finite(v) => ExtValue::Finite(v.clone() * w.clone()),
            ExtValue::Infinite => ExtValue::Infinite,
        }
    }
}

impl<S: Scalar> Add for ExtValue<S> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => ExtValue::Finite(a + b),
            _ => ExtValue::Infinite,
        }
    }
}

impl<S: Scalar> Mul for ExtValue<S> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        match (self, rhs) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => ExtValue::Finite(a * b),
            _ => ExtValue::Infinite,
        }
    }
}

impl<S: Scalar> PartialOrd for ExtValue<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => a.partial_cmp(b),
            (ExtValue::Finite(_), ExtValue::Infinite) => Some(Ordering::Less),
            (ExtValue::Infinite, ExtValue::Finite(_)) => Some(Ordering::Greater),
            (ExtValue::Infinite, ExtValue::Infinite) => Some(Ordering::Equal),
        }
    }
}

impl<S: Scalar> fmt::Display for ExtValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(v) => write!(f, "{v}"),
            ExtValue::Infinite => f.write_str("infinity"),
        }
    }
}
