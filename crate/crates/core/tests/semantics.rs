use std::collections::BTreeSet;

use prodcheck_core::corpus::{convergent_corpus, random_chain, random_mfa, random_nfa, unambiguous_nfas};
use prodcheck_core::models::{determinize, embed_nfa_as_mfa, subset_name, Target};
use prodcheck_core::product::{mc_mfa_product, ProductOptions};
use prodcheck_core::rng::Lcg;
use prodcheck_core::semantics::{
    dfa_bounded_language, mfa_bounded_multiset, nfa_bounded_language, product_values_exact, product_values_iterate,
    ExtValue,
};
use prodcheck_core::{ratio, Rational};
use proptest::prelude::*;

#[test]
fn exact_values_solve_the_fixed_point_equation() {
    for inst in convergent_corpus(31, 15) {
        let p = &inst.product;
        let values = product_values_exact(p);
        for s in 0..p.num_states() {
            let ExtValue::Finite(v) = &values[s] else { panic!("convergent instance has an infinite value") };
            let mut rhs = ratio(0, 1);
            for (t, w) in p.row(s) {
                rhs += match t {
                    Target::Check => w.clone(),
                    Target::State(u) => w.clone() * values[*u].finite().expect("finite").clone(),
                };
            }
            assert_eq!(*v, rhs, "state {}", p.state_name(s));
        }
    }
}

#[test]
fn iterates_increase_towards_exact_values() {
    for inst in convergent_corpus(8, 10) {
        let exact = product_values_exact(&inst.product);
        let mut prev: Option<Vec<Rational>> = None;
        for k in [0, 1, 2, 5, 10, 20] {
            let it = product_values_iterate(&inst.product, k);
            for (s, v) in it.iter().enumerate() {
                assert!(v <= exact[s].finite().unwrap());
                if let Some(p) = &prev {
                    assert!(p[s] <= *v);
                }
            }
            prev = Some(it);
        }
    }
}

#[test]
fn run_counts_of_unambiguous_nfas_are_indicators() {
    for (nfa, y) in unambiguous_nfas(14, 10) {
        let lang = nfa_bounded_language(&nfa, y, 6).unwrap();
        let runs = mfa_bounded_multiset(&embed_nfa_as_mfa(&nfa), y, 6).unwrap();
        assert_eq!(runs.len(), lang.len());
        for (w, m) in runs.iter() {
            assert_eq!(*m, 1);
            assert!(lang.contains(w));
        }
    }
}

#[test]
fn product_restricted_to_initial_pair_is_reachable_part() {
    let mut rng = Lcg::new(40);
    for _ in 0..10 {
        let mc = random_chain(&mut rng, 4);
        let mfa = random_mfa(&mut rng, 3, 2);
        let full = mc_mfa_product(&mc, &mfa, &ProductOptions::default()).unwrap();
        let part = mc_mfa_product(&mc, &mfa, &ProductOptions::from_initial(&[(0, 0)])).unwrap();
        assert!(part.num_states() <= full.num_states());
        let full_values = product_values_exact(&full);
        let part_values = product_values_exact(&part);
        for (s, (x, y)) in part.pairs().iter().enumerate() {
            let t = full.find(x, y).expect("pair present in full product");
            assert_eq!(part_values[s], full_values[t]);
            assert_eq!(part.row_sum(s), full.row_sum(t));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn determinization_preserves_bounded_language(seed in any::<u64>()) {
        let mut rng = Lcg::new(seed);
        let nfa = random_nfa(&mut rng);
        let y = rng.below(nfa.num_states());
        let dfa = determinize(&nfa, Some(&[y]));
        let start = dfa.states().get(&subset_name(&nfa, &BTreeSet::from([y]))).unwrap();
        let expected = nfa_bounded_language(&nfa, y, 6).unwrap();
        let got = dfa_bounded_language(&dfa, start, 6).unwrap();
        let expected: BTreeSet<_> = expected.words().cloned().collect();
        let got: BTreeSet<_> = got.words().cloned().collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn convergent_values_are_at_least_the_checking_weight(seed in 0u64..500) {
        for inst in convergent_corpus(seed, 1) {
            let values = product_values_exact(&inst.product);
            for (s, v) in values.iter().enumerate() {
                let v = v.finite().unwrap();
                prop_assert!(*v >= inst.product.weight(s, Target::Check));
            }
        }
    }
}
