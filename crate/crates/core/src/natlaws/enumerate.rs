use std::sync::Arc;

use rayon::prelude::*;

use super::{
    all_tuples, check_naturality, cyclic_admissible, cyclic_shape, CommMonoid, FinMonoid, Harness, NatError, NatFamily,
    NaturalitySquare, Naturals, RawFamily,
};

/// Upper bound on the number of candidate `⟨2⟩` tables tried.
pub const MAX_CANDIDATES: u64 = 20_000_000;

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub candidates: u64,
    pub max_set: usize,
    pub families: Vec<RawFamily>,
}

/// Every natural family `F_A ⇒ F_B` up to sets of size `max_set`, as raw
/// families ordered by their `⟨2⟩` tables.
///
/// Naturality at the swap of `⟨2⟩` forces `λ(v, u)` to be the swap of
/// `λ(u, v)`, so candidates range over functions `φ: A × A → B` with
/// `λ_⟨2⟩(u, v) = (φ(u, v), φ(v, u))`.
pub fn enumerate_nat_trans(a: &FinMonoid, b: &FinMonoid, max_set: usize) -> Result<Enumeration, NatError> {
    if max_set < 3 {
        return Err(NatError::SetSizeTooSmall(max_set));
    }
    let (ka, kb) = (a.len(), b.len());
    let cells = (ka * ka) as u32;
    let candidates = (kb as u64)
        .checked_pow(cells)
        .filter(|&c| c <= MAX_CANDIDATES)
        .ok_or_else(|| NatError::TooManyCandidates(format!("{kb}^{cells}")))?;
    let (sa, sb) = (Arc::new(a.clone()), Arc::new(b.clone()));
    let harness = Harness::new(a, max_set, 0);
    let families = (0..candidates)
        .into_par_iter()
        .filter_map(|idx| {
            let mut phi = vec![0usize; ka * ka];
            let mut rest = idx;
            for cell in phi.iter_mut().rev() {
                *cell = (rest % kb as u64) as usize;
                rest /= kb as u64;
            }
            let fam = RawFamily::from_phi(sa.clone(), sb.clone(), &phi).expect("well-formed");
            match check_naturality(&fam, &harness) {
                Ok(rep) if rep.passed() => Some(fam),
                _ => None,
            }
        })
        .collect::<Vec<_>>();
    Ok(Enumeration { candidates, max_set, families })
}

/// The `⟨2⟩` table of any family between finite monoids, `(u, v)` in
/// row-major order.
pub fn pair_table_of<F>(fam: &F) -> Result<Vec<(usize, usize)>, NatError>
where
    F: NatFamily<Source = FinMonoid, Target = FinMonoid>,
{
    let k = fam.source().len();
    let mut out = Vec::with_capacity(k * k);
    for u in 0..k {
        for v in 0..k {
            let c = fam.component(&[u, v])?;
            out.push((c[0], c[1]));
        }
    }
    Ok(out)
}

/// All parameter tables accepted by [`super::make_case2`] for this pair.
pub fn admissible_case2_tables(source: &FinMonoid, target: &FinMonoid) -> Result<Vec<Vec<usize>>, NatError> {
    let (_, n, _) = cyclic_shape(source)?;
    let mut values = Vec::new();
    for c in 0..target.len() {
        if cyclic_admissible(source, target, &c)? {
            values.push(c);
        }
    }
    Ok(all_tuples(&values, (n - 1) as usize))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtractError {
    NotNatural(NaturalitySquare),
    Family(NatError),
}

impl std::fmt::Display for ExtractError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtractError::NotNatural(sq) => write!(
                f,
                "not natural: f = {:?}, g = {:?} into <{}>, lambda after push = {:?}, push after lambda = {:?}",
                sq.f, sq.g, sq.codomain, sq.via_source, sq.via_target
            ),
            ExtractError::Family(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ExtractError {}

impl From<NatError> for ExtractError {
    fn from(e: NatError) -> Self {
        ExtractError::Family(e)
    }
}

fn precheck<F: NatFamily>(fam: &F, harness: &Harness<F::Source>) -> Result<(), ExtractError> {
    let rep = check_naturality(fam, harness)?;
    match rep.counterexample {
        Some(sq) => Err(ExtractError::NotNatural(sq)),
        None => Ok(()),
    }
}

/// Recovers `b(0..=max_total)` from a family on the free source:
/// `b(n) = λ_⟨n+2⟩(1, …, 1, 0, 0)` read at the first point.
///
/// Naturality is first checked on sets of size ≤ 3 with entries ≤ 1.
pub fn extract_case1<F>(fam: &F, max_total: usize) -> Result<Vec<<F::Target as CommMonoid>::Elem>, ExtractError>
where
    F: NatFamily<Source = Naturals>,
{
    precheck(fam, &Harness::new(&Naturals, 3, 1))?;
    let mut b = vec![fam.target().zero()];
    for n in 1..=max_total {
        let mut f = vec![1u64; n];
        f.extend([0, 0]);
        b.push(fam.component(&f)?[0].clone());
    }
    Ok(b)
}

/// Recovers the table `b` on `{0, …, n−2}` from a family on a cyclic
/// source with generator `a`: with `d(k) = λ_⟨k+2⟩(a, …, a, 0, 0)` at the
/// first point, `b(m) = d([m−1] + 1)`.
///
/// Naturality is first checked exhaustively on sets of size ≤ 3.
pub fn extract_cyclic<F>(fam: &F) -> Result<Vec<<F::Target as CommMonoid>::Elem>, ExtractError>
where
    F: NatFamily<Source = FinMonoid>,
{
    let source = fam.source();
    let (generator, n, _) = cyclic_shape(source)?;
    precheck(fam, &Harness::new(source, 3, 0))?;
    let zero = source.zero_index();
    let d = |k: u64| -> Result<_, NatError> {
        let mut f = vec![generator; k as usize];
        f.extend([zero, zero]);
        Ok(fam.component(&f)?[0].clone())
    };
    (0..n - 1).map(|m| Ok(d((m + n - 2) % (n - 1) + 1)?)).collect()
}
