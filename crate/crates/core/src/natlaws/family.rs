use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::{AddScalars, CommMonoid, FinMonoid, GeneratorShape, Naturals};
use crate::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NatError {
    #[error("parameter at 0 must be the unit, found {0}")]
    NonzeroAtZero(String),
    #[error("parameter table covers totals below {len}, needed {total}")]
    BeyondTable { total: String, len: usize },
    #[error("source monoid is not cyclic with a period: {0}")]
    WrongShape(String),
    #[error("expected {expected} parameter values, found {found}")]
    TableLength { expected: usize, found: usize },
    #[error("parameter value {value} is not admissible: {reason}")]
    Inadmissible { value: String, reason: String },
    #[error("no parameter given for {0}")]
    MissingParameter(String),
    #[error("enumeration needs set sizes of at least 3, got {0}")]
    SetSizeTooSmall(usize),
    #[error("{0} candidate tables are too many to enumerate")]
    TooManyCandidates(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Case1,
    Case2,
    Scaled,
    Normalized,
    Raw,
    Zero,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Case1 => "case1",
            FamilyKind::Case2 => "case2",
            FamilyKind::Scaled => "scaled",
            FamilyKind::Normalized => "normalized",
            FamilyKind::Raw => "raw",
            FamilyKind::Zero => "zero",
        })
    }
}

type SrcElem<F> = <<F as NatFamily>::Source as CommMonoid>::Elem;
type TgtElem<F> = <<F as NatFamily>::Target as CommMonoid>::Elem;

/// A candidate natural transformation `F_A ⇒ F_B`, evaluable at every
/// finite set `⟨n⟩`.
pub trait NatFamily: Sync {
    type Source: CommMonoid;
    type Target: CommMonoid;

    fn kind(&self) -> FamilyKind;
    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    /// The component `λ_⟨n⟩(f)` with `n = f.len()`.
    fn component(&self, f: &[SrcElem<Self>]) -> Result<Vec<TgtElem<Self>>, NatError>;

    /// Whether `f` lies in the subfunctor the family is defined on.
    /// Closed under pushforward for every implementation here.
    fn admits(&self, _f: &[SrcElem<Self>]) -> bool {
        true
    }
}

/// Free source `ℕ`: `λ(f)(x) = f(x) · b(Σ f)` with `b(0) = 0`.
#[derive(Clone, Debug)]
pub struct Case1Family<B: CommMonoid> {
    target: B,
    b: Vec<B::Elem>,
}

pub fn make_case1<B: CommMonoid>(target: B, b: Vec<B::Elem>) -> Result<Case1Family<B>, NatError> {
    if let Some(b0) = b.first() {
        if *b0 != target.zero() {
            return Err(NatError::NonzeroAtZero(target.show(b0)));
        }
    }
    Ok(Case1Family { target, b })
}

impl<B: CommMonoid> Case1Family<B> {
    pub fn parameters(&self) -> &[B::Elem] {
        &self.b
    }
}

impl<B: CommMonoid> NatFamily for Case1Family<B> {
    type Source = Naturals;
    type Target = B;

    fn kind(&self) -> FamilyKind {
        FamilyKind::Case1
    }

    fn source(&self) -> &Naturals {
        &Naturals
    }

    fn target(&self) -> &B {
        &self.target
    }

    fn component(&self, f: &[u64]) -> Result<Vec<B::Elem>, NatError> {
        let total: u64 = f.iter().sum();
        if total == 0 {
            return Ok(vec![self.target.zero(); f.len()]);
        }
        let c = usize::try_from(total)
            .ok()
            .and_then(|t| self.b.get(t))
            .ok_or(NatError::BeyondTable { total: total.to_string(), len: self.b.len() })?;
        Ok(f.iter().map(|&k| self.target.times(k, c)).collect())
    }
}

/// Multisets to subdistributions: `λ(f)(x) = f(x)/Σf · b(Σf)`, i.e. the
/// free-source family with parameter `b(n)/n`. `b` is indexed from 1 and
/// must take values in `[0, 1]`.
pub fn multiset_to_subdist<S: Scalar>(b: &[S]) -> Result<Case1Family<AddScalars<S>>, NatError> {
    let mut table = vec![S::zero()];
    for (i, v) in b.iter().enumerate() {
        if v.is_negative() || *v > S::one() {
            return Err(NatError::Inadmissible { value: v.to_string(), reason: "must lie in [0, 1]".into() });
        }
        table.push(v.clone() / S::from_nat(i as u64 + 1));
    }
    make_case1(AddScalars::new(), table)
}

/// Cyclic source: `λ(f)(x) = N(f(x)) · b([Σ N(f)])`, `[l] = l mod (n−1)`.
#[derive(Clone, Debug)]
pub struct CyclicFamily<B: CommMonoid> {
    source: Arc<FinMonoid>,
    target: B,
    n: u64,
    counts: Vec<u64>,
    b: Vec<B::Elem>,
}

/// Source data for the cyclic constructor: generator, period `n` and
/// whether `(n−1)·a = 0`.
pub fn cyclic_shape(source: &FinMonoid) -> Result<(usize, u64, bool), NatError> {
    match source.shape() {
        GeneratorShape::Cyclic { generator, n, group } => Ok((generator, n, group)),
        other => Err(NatError::WrongShape(format!("{other:?}"))),
    }
}

/// Whether `c` may appear in a cyclic parameter table for `source`:
/// `n·c = c`, and additionally `(n−1)·c = 0` when `(n−1)·a = 0`.
pub fn cyclic_admissible<B: CommMonoid>(source: &FinMonoid, target: &B, c: &B::Elem) -> Result<bool, NatError> {
    let (_, n, group) = cyclic_shape(source)?;
    let idem = target.times(n, c) == *c;
    let annihilated = !group || target.times(n - 1, c) == target.zero();
    Ok(idem && annihilated)
}

pub fn make_case2<B: CommMonoid>(source: FinMonoid, target: B, b: Vec<B::Elem>) -> Result<CyclicFamily<B>, NatError> {
    let (generator, n, group) = cyclic_shape(&source)?;
    if b.len() as u64 != n - 1 {
        return Err(NatError::TableLength { expected: (n - 1) as usize, found: b.len() });
    }
    for c in &b {
        if target.times(n, c) != *c {
            return Err(NatError::Inadmissible { value: target.show(c), reason: format!("{n}·c ≠ c") });
        }
        if group && target.times(n - 1, c) != target.zero() {
            return Err(NatError::Inadmissible { value: target.show(c), reason: format!("{}·c ≠ 0", n - 1) });
        }
    }
    let counts = (0..source.len()).map(|e| source.generator_count(generator, e).expect("generated")).collect();
    Ok(CyclicFamily { source: Arc::new(source), target, n, counts, b })
}

impl<B: CommMonoid> CyclicFamily<B> {
    pub fn parameters(&self) -> &[B::Elem] {
        &self.b
    }

    pub fn period(&self) -> u64 {
        self.n
    }
}

impl<B: CommMonoid> NatFamily for CyclicFamily<B> {
    type Source = FinMonoid;
    type Target = B;

    fn kind(&self) -> FamilyKind {
        FamilyKind::Case2
    }

    fn source(&self) -> &FinMonoid {
        &self.source
    }

    fn target(&self) -> &B {
        &self.target
    }

    fn component(&self, f: &[usize]) -> Result<Vec<B::Elem>, NatError> {
        let total: u64 = f.iter().map(|&e| self.counts[e]).sum();
        let c = &self.b[(total % (self.n - 1)) as usize];
        Ok(f.iter().map(|&e| self.target.times(self.counts[e], c)).collect())
    }
}

/// A parameter `b` on nonnegative scalars.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarParam<S> {
    Constant(S),
    /// `(argument, value)` pairs; other arguments are undefined.
    Table(Vec<(S, S)>),
}

impl<S: Scalar> ScalarParam<S> {
    fn at(&self, t: &S) -> Result<S, NatError> {
        match self {
            ScalarParam::Constant(c) => Ok(c.clone()),
            ScalarParam::Table(rows) => rows
                .iter()
                .find(|(k, _)| k == t)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| NatError::MissingParameter(t.to_string())),
        }
    }

    fn values(&self) -> Vec<(Option<&S>, &S)> {
        match self {
            ScalarParam::Constant(c) => vec![(None, c)],
            ScalarParam::Table(rows) => rows.iter().map(|(k, v)| (Some(k), v)).collect(),
        }
    }
}

/// Weights to weights: `λ(f)(x) = f(x) · b(Σ f)`.
#[derive(Clone, Debug)]
pub struct ScaledFamily<S> {
    monoid: AddScalars<S>,
    b: ScalarParam<S>,
}

/// A constant parameter is read as `b(t) = c` for `t > 0` and `b(0) = 0`.
pub fn make_scaled<S: Scalar>(b: ScalarParam<S>) -> Result<ScaledFamily<S>, NatError> {
    for (k, v) in b.values() {
        if v.is_negative() {
            return Err(NatError::Inadmissible { value: v.to_string(), reason: "must be nonnegative".into() });
        }
        if k.is_some_and(|k| k.is_zero()) && !v.is_zero() {
            return Err(NatError::NonzeroAtZero(v.to_string()));
        }
    }
    Ok(ScaledFamily { monoid: AddScalars::new(), b })
}

impl<S: Scalar> NatFamily for ScaledFamily<S> {
    type Source = AddScalars<S>;
    type Target = AddScalars<S>;

    fn kind(&self) -> FamilyKind {
        FamilyKind::Scaled
    }

    fn source(&self) -> &AddScalars<S> {
        &self.monoid
    }

    fn target(&self) -> &AddScalars<S> {
        &self.monoid
    }

    fn component(&self, f: &[S]) -> Result<Vec<S>, NatError> {
        let total = self.monoid.sum(f);
        if total.is_zero() {
            return Ok(vec![S::zero(); f.len()]);
        }
        let c = self.b.at(&total)?;
        Ok(f.iter().map(|v| v.clone() * c.clone()).collect())
    }

    fn admits(&self, f: &[S]) -> bool {
        f.iter().all(|v| !v.is_negative())
    }
}

/// Subdistributions to subdistributions:
/// `λ(f)(x) = f(x)/Σf · b(Σf)`, and `0` when `Σf = 0`.
#[derive(Clone, Debug)]
pub struct NormalizedFamily<S> {
    monoid: AddScalars<S>,
    b: ScalarParam<S>,
}

/// `b` maps `(0, 1]` into `[0, 1]`.
pub fn make_normalized<S: Scalar>(b: ScalarParam<S>) -> Result<NormalizedFamily<S>, NatError> {
    for (k, v) in b.values() {
        if v.is_negative() || *v > S::one() {
            return Err(NatError::Inadmissible { value: v.to_string(), reason: "must lie in [0, 1]".into() });
        }
        if let Some(k) = k {
            if !k.is_positive() || *k > S::one() {
                return Err(NatError::Inadmissible {
                    value: k.to_string(),
                    reason: "argument must lie in (0, 1]".into(),
                });
            }
        }
    }
    Ok(NormalizedFamily { monoid: AddScalars::new(), b })
}

impl<S: Scalar> NatFamily for NormalizedFamily<S> {
    type Source = AddScalars<S>;
    type Target = AddScalars<S>;

    fn kind(&self) -> FamilyKind {
        FamilyKind::Normalized
    }

    fn source(&self) -> &AddScalars<S> {
        &self.monoid
    }

    fn target(&self) -> &AddScalars<S> {
        &self.monoid
    }

    fn component(&self, f: &[S]) -> Result<Vec<S>, NatError> {
        let total = self.monoid.sum(f);
        if total.is_zero() {
            return Ok(vec![S::zero(); f.len()]);
        }
        let c = self.b.at(&total)?;
        Ok(f.iter().map(|v| v.clone() / total.clone() * c.clone()).collect())
    }

    fn admits(&self, f: &[S]) -> bool {
        f.iter().all(|v| !v.is_negative()) && self.monoid.sum(f) <= S::one()
    }
}

/// A family over finite monoids given by its `⟨2⟩` component.
///
/// Other components are the unique candidate extension
/// `λ(f)(x) = π₁ λ_⟨2⟩(f(x), Σ_{x' ≠ x} f(x'))`, unless overridden with an
/// explicit table. Whether the result is natural is for
/// [`super::check_naturality`] to decide.
#[derive(Clone, Debug)]
pub struct RawFamily {
    source: Arc<FinMonoid>,
    target: Arc<FinMonoid>,
    pair_table: Vec<(usize, usize)>,
    explicit: BTreeMap<usize, HashMap<Vec<usize>, Vec<usize>>>,
}

impl RawFamily {
    /// `table[u·|A| + v] = λ_⟨2⟩(u, v)`.
    pub fn from_pair_table(
        source: Arc<FinMonoid>,
        target: Arc<FinMonoid>,
        table: Vec<(usize, usize)>,
    ) -> Result<Self, NatError> {
        let expected = source.len() * source.len();
        if table.len() != expected {
            return Err(NatError::TableLength { expected, found: table.len() });
        }
        if table.iter().any(|&(p, q)| p >= target.len() || q >= target.len()) {
            return Err(NatError::Inadmissible {
                value: "table entry".into(),
                reason: "not an element of the target".into(),
            });
        }
        Ok(RawFamily { source, target, pair_table: table, explicit: BTreeMap::new() })
    }

    /// The `⟨2⟩` table `(u, v) ↦ (φ(u, v), φ(v, u))` of a function
    /// `φ: A × A → B` given as `phi[u·|A| + v]`.
    pub fn from_phi(source: Arc<FinMonoid>, target: Arc<FinMonoid>, phi: &[usize]) -> Result<Self, NatError> {
        let k = source.len();
        if phi.len() != k * k {
            return Err(NatError::TableLength { expected: k * k, found: phi.len() });
        }
        let table = (0..k * k).map(|i| (phi[i], phi[(i % k) * k + i / k])).collect();
        Self::from_pair_table(source, target, table)
    }

    /// Overrides the component at `⟨size⟩` for the listed inputs.
    pub fn with_component(mut self, size: usize, table: HashMap<Vec<usize>, Vec<usize>>) -> Self {
        self.explicit.insert(size, table);
        self
    }

    pub fn pair_table(&self) -> &[(usize, usize)] {
        &self.pair_table
    }

    fn pair(&self, u: usize, v: usize) -> (usize, usize) {
        self.pair_table[u * self.source.len() + v]
    }

    /// Renders the `⟨2⟩` table as `(u,v)->(p,q)` entries.
    pub fn describe(&self) -> Vec<String> {
        let k = self.source.len();
        (0..k * k)
            .map(|i| {
                let (p, q) = self.pair_table[i];
                format!(
                    "({},{})->({},{})",
                    self.source.name(i / k),
                    self.source.name(i % k),
                    self.target.name(p),
                    self.target.name(q)
                )
            })
            .collect()
    }
}

impl NatFamily for RawFamily {
    type Source = FinMonoid;
    type Target = FinMonoid;

    fn kind(&self) -> FamilyKind {
        FamilyKind::Raw
    }

    fn source(&self) -> &FinMonoid {
        &self.source
    }

    fn target(&self) -> &FinMonoid {
        &self.target
    }

    fn component(&self, f: &[usize]) -> Result<Vec<usize>, NatError> {
        if let Some(out) = self.explicit.get(&f.len()).and_then(|t| t.get(f)) {
            return Ok(out.clone());
        }
        if f.len() == 2 {
            let (p, q) = self.pair(f[0], f[1]);
            return Ok(vec![p, q]);
        }
        Ok((0..f.len())
            .map(|x| {
                let rest = self.source.sum(f.iter().enumerate().filter(|(i, _)| *i != x).map(|(_, e)| e));
                self.pair(f[x], rest).0
            })
            .collect())
    }
}

/// The constant-zero family.
#[derive(Clone, Debug)]
pub struct ZeroFamily<A, B> {
    pub source: A,
    pub target: B,
}

impl<A: CommMonoid, B: CommMonoid> NatFamily for ZeroFamily<A, B> {
    type Source = A;
    type Target = B;

    fn kind(&self) -> FamilyKind {
        FamilyKind::Zero
    }

    fn source(&self) -> &A {
        &self.source
    }

    fn target(&self) -> &B {
        &self.target
    }

    fn component(&self, f: &[A::Elem]) -> Result<Vec<B::Elem>, NatError> {
        Ok(vec![self.target.zero(); f.len()])
    }
}
