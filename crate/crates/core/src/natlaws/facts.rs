//! Non-existence results, shown by building the only candidate the
//! characterization allows and exhibiting an input it sends outside the
//! target subfunctor.

use super::{make_case1, make_case2, AddScalars, CommMonoid, FinMonoid, NatFamily, Naturals};
use crate::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct NonExistence<S> {
    pub name: &'static str,
    pub forced: &'static str,
    /// Input that lies in the source subfunctor, rendered.
    pub input: Vec<String>,
    /// Total mass of the forced output on that input.
    pub output_mass: S,
    /// Mass every distribution must have.
    pub required_mass: S,
}

impl<S: Scalar> NonExistence<S> {
    pub fn holds(&self) -> bool {
        self.output_mass != self.required_mass
    }
}

/// Finite sets to distributions. On the idempotent source, admissible
/// parameter values `c` satisfy `2c = c` in `(ℝ≥0, +)`, so `c = 0`.
pub fn powerset_to_distributions<S: Scalar>() -> NonExistence<S> {
    let target = AddScalars::<S>::new();
    let mut candidates = super::scalar_pool::<S>();
    candidates.push(S::from_nat(2));
    candidates.retain(|c| target.times(2, c) == *c);
    debug_assert!(candidates.iter().all(|c| c.is_zero()));
    let fam = make_case2(FinMonoid::boolean(), target, vec![S::zero()]).expect("zero is admissible");
    let input = vec![1usize];
    let out = fam.component(&input).expect("defined");
    NonExistence {
        name: "finite powerset to distributions",
        forced: "lambda(f)(x) = 0",
        input: vec![fam.source().show(&input[0])],
        output_mass: fam.target().sum(&out),
        required_mass: S::one(),
    }
}

/// Multisets to distributions. Any parameter has `b(0) = 0`, so the empty
/// multiset is sent to the zero function.
pub fn multisets_to_distributions<S: Scalar>() -> NonExistence<S> {
    let fam = make_case1(AddScalars::<S>::new(), vec![S::zero(), S::one()]).expect("b(0) = 0");
    let input = vec![0u64];
    let out = fam.component(&input).expect("defined");
    NonExistence {
        name: "multisets to distributions",
        forced: "lambda(0) = 0",
        input: vec![Naturals.show(&input[0])],
        output_mass: fam.target().sum(&out),
        required_mass: S::one(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn both_facts_hold() {
        let p = powerset_to_distributions::<Rational>();
        assert!(p.holds());
        assert_eq!(p.output_mass, Rational::from_integer(0.into()));
        assert!(multisets_to_distributions::<Rational>().holds());
    }
}
