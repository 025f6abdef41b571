use std::fmt::Debug;
use std::marker::PhantomData;

use thiserror::Error;

use crate::Scalar;

/// A commutative monoid, written additively.
pub trait CommMonoid: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn show(&self, e: &Self::Elem) -> String;

    /// Elements used to exercise naturality squares: every element of a
    /// finite monoid, a fixed bounded sample otherwise.
    fn samples(&self, bound: u64) -> Vec<Self::Elem>;

    /// `n · e` by doubling.
    fn times(&self, mut n: u64, e: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        let mut base = e.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Self::Elem>) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, e| self.add(&acc, e))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error("monoid must have at least one element")]
    Empty,
    #[error("duplicate element {0:?}")]
    Duplicate(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("operation table must be {n}x{n}")]
    TableShape { n: usize },
    #[error("{axiom} fails at ({}, {}, {})", .triple.0, .triple.1, .triple.2)]
    Axiom { axiom: &'static str, triple: (String, String, String) },
}

/// Finite commutative monoid given by its operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinMonoid {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    zero: usize,
}

/// How a finite monoid is generated by a single element, if at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorShape {
    /// Only the unit.
    Trivial,
    NotSinglyGenerated,
    /// `n` is the least `n > 1` with `n·a = a`; `group` when `(n−1)·a = 0`.
    Cyclic {
        generator: usize,
        n: u64,
        group: bool,
    },
    /// Singly generated but `n·a ≠ a` for all `n > 1`.
    Aperiodic {
        generator: usize,
    },
}

impl FinMonoid {
    /// Builds and checks closure, unit, commutativity and associativity
    /// exhaustively. The error names the first violating triple.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>, zero: usize) -> Result<Self, MonoidError> {
        let n = names.len();
        if n == 0 {
            return Err(MonoidError::Empty);
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(MonoidError::Duplicate(a.clone()));
            }
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) || zero >= n {
            return Err(MonoidError::TableShape { n });
        }
        let m = FinMonoid { names, table, zero };
        let nm = |i: usize| m.names[i].clone();
        for a in 0..n {
            if m.table[zero][a] != a || m.table[a][zero] != a {
                return Err(MonoidError::Axiom { axiom: "unit", triple: (nm(zero), nm(a), nm(m.table[zero][a])) });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if m.table[a][b] != m.table[b][a] {
                    return Err(MonoidError::Axiom {
                        axiom: "commutativity",
                        triple: (nm(a), nm(b), nm(m.table[a][b])),
                    });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m.table[m.table[a][b]][c] != m.table[a][m.table[b][c]] {
                        return Err(MonoidError::Axiom { axiom: "associativity", triple: (nm(a), nm(b), nm(c)) });
                    }
                }
            }
        }
        Ok(m)
    }

    /// Builds from element names, the table written with names, and the unit.
    pub fn from_names(elements: &[String], op: &[Vec<String>], zero: &str) -> Result<Self, MonoidError> {
        let idx =
            |s: &str| elements.iter().position(|e| e == s).ok_or_else(|| MonoidError::UnknownElement(s.to_string()));
        let table = op
            .iter()
            .map(|row| row.iter().map(|s| idx(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(elements.to_vec(), table, idx(zero)?)
    }

    fn tabulate(names: &[&str], op: impl Fn(usize, usize) -> usize, zero: usize) -> Self {
        let n = names.len();
        let table = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::new(names.iter().map(|s| s.to_string()).collect(), table, zero).expect("standard instance")
    }

    /// `({0,1}, ∨, 0)`: the monoid behind the finite powerset functor.
    pub fn boolean() -> Self {
        Self::tabulate(&["0", "1"], |a, b| a | b, 0)
    }

    /// `(ℤ_k, +, 0)`.
    pub fn cyclic(k: usize) -> Self {
        assert!(k > 0);
        let names: Vec<String> = (0..k).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::tabulate(&refs, |a, b| (a + b) % k, 0)
    }

    /// `({0,1}, max, 0)`.
    pub fn max01() -> Self {
        Self::tabulate(&["0", "1"], |a, b| a.max(b), 0)
    }

    /// `({0,1}, ×, 1)`: the finite shadow of multiplicative weights.
    pub fn mult01() -> Self {
        Self::tabulate(&["0", "1"], |a, b| a * b, 1)
    }

    /// `({0..k}, min(a+b, k), 0)`: addition saturating at `k`.
    pub fn saturating(k: usize) -> Self {
        let names: Vec<String> = (0..=k).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::tabulate(&refs, |a, b| (a + b).min(k), 0)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: usize) -> &str {
        &self.names[e]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// `k · a` for `k = 0..=len+1`, enough to see the first return to `a`.
    fn multiples(&self, a: usize) -> Vec<usize> {
        let mut out = vec![self.zero];
        for _ in 0..=self.len() {
            let last = *out.last().expect("non-empty");
            out.push(self.op(last, a));
        }
        out
    }

    pub fn shape(&self) -> GeneratorShape {
        if self.len() == 1 {
            return GeneratorShape::Trivial;
        }
        for a in (0..self.len()).filter(|&a| a != self.zero) {
            let mult = self.multiples(a);
            if (0..self.len()).all(|e| mult.contains(&e)) {
                return match (2..mult.len()).find(|&k| mult[k] == a) {
                    Some(n) => GeneratorShape::Cyclic { generator: a, n: n as u64, group: mult[n - 1] == self.zero },
                    None => GeneratorShape::Aperiodic { generator: a },
                };
            }
        }
        GeneratorShape::NotSinglyGenerated
    }

    /// `N(e)`: least `m` with `m·a = e`, for a generator `a`.
    pub fn generator_count(&self, generator: usize, e: usize) -> Option<u64> {
        self.multiples(generator).iter().position(|&m| m == e).map(|m| m as u64)
    }
}

impl CommMonoid for FinMonoid {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn add(&self, a: &usize, b: &usize) -> usize {
        self.table[*a][*b]
    }

    fn show(&self, e: &usize) -> String {
        self.names[*e].clone()
    }

    fn samples(&self, _bound: u64) -> Vec<usize> {
        (0..self.len()).collect()
    }
}

/// `(ℕ, +, 0)`, the free monoid on one generator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Naturals;

impl CommMonoid for Naturals {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        a.checked_add(*b).expect("natural overflow")
    }

    fn show(&self, e: &u64) -> String {
        e.to_string()
    }

    fn samples(&self, bound: u64) -> Vec<u64> {
        (0..=bound).collect()
    }

    fn times(&self, n: u64, e: &u64) -> u64 {
        n.checked_mul(*e).expect("natural overflow")
    }
}

/// Sample values for scalar monoids.
pub fn scalar_pool<S: Scalar>() -> Vec<S> {
    let q = |n: u64, d: u64| S::from_nat(n) / S::from_nat(d);
    vec![S::zero(), q(1, 4), q(1, 3), q(1, 2), S::one()]
}

/// `(ℝ≥0, +, 0)` on a scalar type.
#[derive(Clone, Copy, Debug, Default)]
pub struct AddScalars<S>(PhantomData<S>);

impl<S> AddScalars<S> {
    pub fn new() -> Self {
        AddScalars(PhantomData)
    }
}

impl<S: Scalar> CommMonoid for AddScalars<S> {
    type Elem = S;

    fn zero(&self) -> S {
        S::zero()
    }

    fn add(&self, a: &S, b: &S) -> S {
        a.clone() + b.clone()
    }

    fn show(&self, e: &S) -> String {
        e.to_string()
    }

    fn samples(&self, _bound: u64) -> Vec<S> {
        scalar_pool()
    }

    fn times(&self, n: u64, e: &S) -> S {
        S::from_nat(n) * e.clone()
    }
}

/// `(ℝ≥0, ×, 1)` on a scalar type.
#[derive(Clone, Copy, Debug, Default)]
pub struct MulScalars<S>(PhantomData<S>);

impl<S> MulScalars<S> {
    pub fn new() -> Self {
        MulScalars(PhantomData)
    }
}

impl<S: Scalar> CommMonoid for MulScalars<S> {
    type Elem = S;

    fn zero(&self) -> S {
        S::one()
    }

    fn add(&self, a: &S, b: &S) -> S {
        a.clone() * b.clone()
    }

    fn show(&self, e: &S) -> String {
        e.to_string()
    }

    fn samples(&self, _bound: u64) -> Vec<S> {
        let mut pool = scalar_pool::<S>();
        pool.push(S::from_nat(2));
        pool
    }
}
