use super::{all_maps, all_tuples, fa_apply, CommMonoid, NatError, NatFamily};

type Elems<M> = Vec<<M as CommMonoid>::Elem>;

/// Precomputed test points: every input `f ∈ F_A(⟨n⟩)` drawn from the
/// source's sample set, and every map `⟨n⟩ → ⟨m⟩`, for `1 ≤ n, m ≤ max_set`.
pub struct Harness<A: CommMonoid> {
    max_set: usize,
    inputs: Vec<Vec<Elems<A>>>,
    maps: Vec<Vec<Vec<Vec<usize>>>>,
}

impl<A: CommMonoid> Harness<A> {
    pub fn new(source: &A, max_set: usize, sample_bound: u64) -> Self {
        let samples = source.samples(sample_bound);
        let inputs = (0..=max_set).map(|n| if n == 0 { Vec::new() } else { all_tuples(&samples, n) }).collect();
        let maps = (0..=max_set)
            .map(|n| (0..=max_set).map(|m| if n == 0 || m == 0 { Vec::new() } else { all_maps(n, m) }).collect())
            .collect();
        Harness { max_set, inputs, maps }
    }

    pub fn max_set(&self) -> usize {
        self.max_set
    }

    pub fn inputs(&self, n: usize) -> &[Elems<A>] {
        &self.inputs[n]
    }

    /// Sizes in ascending order, so small squares (including the swap on
    /// `⟨2⟩`) are tried first.
    fn squares(&self) -> impl Iterator<Item = (usize, &Vec<usize>, &Elems<A>)> + '_ {
        (1..=self.max_set).flat_map(move |n| {
            (1..=self.max_set).flat_map(move |m| {
                self.maps[n][m].iter().flat_map(move |g| self.inputs[n].iter().map(move |f| (m, g, f)))
            })
        })
    }
}

/// A failing square `λ_Y ∘ F_A(g) ≠ F_B(g) ∘ λ_X`, rendered for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalitySquare {
    pub f: Vec<String>,
    pub g: Vec<usize>,
    pub codomain: usize,
    pub via_source: Vec<String>,
    pub via_target: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalityReport {
    pub max_set: usize,
    pub squares_checked: u64,
    pub counterexample: Option<NaturalitySquare>,
}

impl NaturalityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Passing only certifies the squares that were checked.
    pub fn note(&self) -> String {
        format!(
            "bounded certification: all {} squares between sets of size <= {} commute; larger sets are not checked",
            self.squares_checked, self.max_set
        )
    }
}

fn show_all<M: CommMonoid>(m: &M, v: &[M::Elem]) -> Vec<String> {
    v.iter().map(|e| m.show(e)).collect()
}

/// Checks every square of the harness, stopping at the first failure.
/// Inputs the family does not admit are skipped.
pub fn check_naturality<F: NatFamily>(fam: &F, harness: &Harness<F::Source>) -> Result<NaturalityReport, NatError> {
    let (a, b) = (fam.source(), fam.target());
    let mut checked = 0u64;
    for (m, g, f) in harness.squares() {
        if !fam.admits(f) {
            continue;
        }
        let via_source = fam.component(&fa_apply(a, g, m, f))?;
        let via_target = fa_apply(b, g, m, &fam.component(f)?);
        checked += 1;
        if via_source != via_target {
            return Ok(NaturalityReport {
                max_set: harness.max_set,
                squares_checked: checked,
                counterexample: Some(NaturalitySquare {
                    f: show_all(a, f),
                    g: g.clone(),
                    codomain: m,
                    via_source: show_all(b, &via_source),
                    via_target: show_all(b, &via_target),
                }),
            });
        }
    }
    Ok(NaturalityReport { max_set: harness.max_set, squares_checked: checked, counterexample: None })
}

/// Equal inputs at two points give equal outputs there. Returns the
/// first offending input, rendered.
pub fn equal_inputs_equal_outputs<F: NatFamily>(
    fam: &F,
    harness: &Harness<F::Source>,
) -> Result<Option<Vec<String>>, NatError> {
    for n in 2..=harness.max_set {
        for f in harness.inputs(n).iter().filter(|f| fam.admits(f)) {
            let out = fam.component(f)?;
            for x in 0..n {
                for y in x + 1..n {
                    if f[x] == f[y] && out[x] != out[y] {
                        return Ok(Some(show_all(fam.source(), f)));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// A zero input at a point gives a zero output there.
pub fn zero_preserved<F: NatFamily>(fam: &F, harness: &Harness<F::Source>) -> Result<Option<Vec<String>>, NatError> {
    let (za, zb) = (fam.source().zero(), fam.target().zero());
    for n in 1..=harness.max_set {
        for f in harness.inputs(n).iter().filter(|f| fam.admits(f)) {
            let out = fam.component(f)?;
            if f.iter().zip(&out).any(|(i, o)| *i == za && *o != zb) {
                return Ok(Some(show_all(fam.source(), f)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::natlaws::{make_case2, FinMonoid, RawFamily, ZeroFamily};

    #[test]
    fn boolean_identity_passes() {
        let fam = make_case2(FinMonoid::boolean(), FinMonoid::boolean(), vec![1]).unwrap();
        let h = Harness::new(&FinMonoid::boolean(), 4, 0);
        let rep = check_naturality(&fam, &h).unwrap();
        assert!(rep.passed());
        assert!(rep.squares_checked > 1000);
        assert!(rep.note().starts_with("bounded certification"));
    }

    #[test]
    fn asymmetric_table_fails_on_swap() {
        let b = Arc::new(FinMonoid::boolean());
        // λ(⊤,⊤) = (⊤,⊥) treats equal inputs differently
        let table = vec![(0, 0), (0, 1), (1, 0), (1, 0)];
        let fam = RawFamily::from_pair_table(b.clone(), b.clone(), table).unwrap();
        let h = Harness::new(&*b, 4, 0);
        let rep = check_naturality(&fam, &h).unwrap();
        let sq = rep.counterexample.expect("must fail");
        assert_eq!(sq.g, vec![1, 0]);
        assert_eq!(sq.f, vec!["1", "1"]);
        assert!(equal_inputs_equal_outputs(&fam, &h).unwrap().is_some());
    }

    #[test]
    fn zero_family_passes_everywhere() {
        let fam = ZeroFamily { source: FinMonoid::cyclic(3), target: FinMonoid::boolean() };
        let h = Harness::new(&FinMonoid::cyclic(3), 3, 0);
        assert!(check_naturality(&fam, &h).unwrap().passed());
        assert!(zero_preserved(&fam, &h).unwrap().is_none());
    }
}
