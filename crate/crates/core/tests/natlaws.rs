use std::sync::Arc;
use std::time::Instant;

use prodcheck_core::natlaws::*;
use prodcheck_core::{ratio, Rational};
use proptest::prelude::*;

fn tables(e: &Enumeration) -> Vec<Vec<(usize, usize)>> {
    e.families.iter().map(|f| f.pair_table().to_vec()).collect()
}

#[test]
fn finite_table_counts() {
    let (b, z3) = (FinMonoid::boolean(), FinMonoid::cyclic(3));
    assert_eq!(enumerate_nat_trans(&b, &b, 4).unwrap().families.len(), 2);
    assert_eq!(enumerate_nat_trans(&b, &z3, 4).unwrap().families.len(), 1);
    assert_eq!(enumerate_nat_trans(&b, &FinMonoid::max01(), 4).unwrap().families.len(), 2);
    assert_eq!(enumerate_nat_trans(&b, &FinMonoid::mult01(), 4).unwrap().families.len(), 2);
    let start = Instant::now();
    let e = enumerate_nat_trans(&z3, &z3, 4).unwrap();
    assert_eq!(e.candidates, 19_683);
    assert_eq!(e.families.len(), 27);
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn group_source_into_idempotent_target_is_only_zero() {
    let e = enumerate_nat_trans(&FinMonoid::cyclic(3), &FinMonoid::boolean(), 4).unwrap();
    assert_eq!(tables(&e), vec![vec![(0, 0); 9]]);
    assert_eq!(admissible_case2_tables(&FinMonoid::cyclic(3), &FinMonoid::boolean()).unwrap().len(), 1);
}

#[test]
fn enumeration_matches_cyclic_parameters() {
    let sources = [FinMonoid::boolean(), FinMonoid::cyclic(3)];
    let targets = [
        FinMonoid::boolean(),
        FinMonoid::cyclic(3),
        FinMonoid::max01(),
        FinMonoid::mult01(),
        FinMonoid::saturating(2),
        FinMonoid::cyclic(2),
    ];
    for a in &sources {
        for b in &targets {
            let mut want: Vec<_> = admissible_case2_tables(a, b)
                .unwrap()
                .into_iter()
                .map(|t| pair_table_of(&make_case2(a.clone(), b.clone(), t).unwrap()).unwrap())
                .collect();
            want.sort();
            let mut got = tables(&enumerate_nat_trans(a, b, 4).unwrap());
            got.sort();
            assert_eq!(got, want, "{:?} -> {:?}", a.names(), b.names());
        }
    }
}

#[test]
fn full_pair_tables_agree_with_swap_restricted_search() {
    // all 256 maps F(⟨2⟩) → F(⟨2⟩) over 𝔹, without the swap shortcut
    let b = Arc::new(FinMonoid::boolean());
    let harness = Harness::new(&*b, 4, 0);
    let mut natural = Vec::new();
    for idx in 0..256usize {
        let table: Vec<(usize, usize)> = (0..4).map(|c| ((idx >> (2 * c)) & 1, (idx >> (2 * c + 1)) & 1)).collect();
        let fam = RawFamily::from_pair_table(b.clone(), b.clone(), table.clone()).unwrap();
        if check_naturality(&fam, &harness).unwrap().passed() {
            natural.push(table);
        }
    }
    natural.sort();
    let mut got = tables(&enumerate_nat_trans(&b, &b, 4).unwrap());
    got.sort();
    assert_eq!(natural, got);
}

#[test]
fn determined_at_two() {
    let z3 = FinMonoid::cyclic(3);
    let e = enumerate_nat_trans(&z3, &z3, 4).unwrap();
    let harness = Harness::new(&z3, 4, 0);
    for fam in &e.families {
        let params = extract_cyclic(fam).unwrap();
        let rebuilt = make_case2(z3.clone(), z3.clone(), params).unwrap();
        for n in 1..=4 {
            for f in harness.inputs(n) {
                assert_eq!(fam.component(f).unwrap(), rebuilt.component(f).unwrap());
            }
        }
    }
}

#[test]
fn pointwise_invariants_for_all_enumerated_families() {
    for (a, b) in [
        (FinMonoid::boolean(), FinMonoid::boolean()),
        (FinMonoid::boolean(), FinMonoid::max01()),
        (FinMonoid::cyclic(3), FinMonoid::cyclic(3)),
    ] {
        let harness = Harness::new(&a, 4, 0);
        for fam in enumerate_nat_trans(&a, &b, 4).unwrap().families {
            assert!(equal_inputs_equal_outputs(&fam, &harness).unwrap().is_none());
            assert!(zero_preserved(&fam, &harness).unwrap().is_none());
        }
    }
}

#[test]
fn constructed_families_are_natural() {
    let h = Harness::new(&Naturals, 4, 2);
    let case1 = make_case1(FinMonoid::boolean(), vec![0, 1, 0, 1, 1, 0, 0, 1, 1]).unwrap();
    assert!(check_naturality(&case1, &h).unwrap().passed());
    assert!(equal_inputs_equal_outputs(&case1, &h).unwrap().is_none());
    assert!(zero_preserved(&case1, &h).unwrap().is_none());

    let sub = multiset_to_subdist(&[
        ratio(1, 1),
        ratio(1, 2),
        ratio(1, 3),
        ratio(1, 1),
        ratio(0, 1),
        ratio(1, 4),
        ratio(1, 1),
        ratio(1, 2),
    ])
    .unwrap();
    assert!(check_naturality(&sub, &h).unwrap().passed());

    let hs = Harness::new(&AddScalars::<Rational>::new(), 3, 0);
    let scaled = make_scaled(ScalarParam::Constant(ratio(3, 2))).unwrap();
    assert!(check_naturality(&scaled, &hs).unwrap().passed());
    assert!(zero_preserved(&scaled, &hs).unwrap().is_none());
    let normalized = make_normalized(ScalarParam::Constant(ratio(1, 2))).unwrap();
    assert!(check_naturality(&normalized, &hs).unwrap().passed());
    assert!(equal_inputs_equal_outputs(&normalized, &hs).unwrap().is_none());
}

#[test]
fn non_natural_candidates_are_caught() {
    let b = Arc::new(FinMonoid::boolean());
    let h = Harness::new(&*b, 4, 0);
    // nonzero output on the zero input
    let fam = RawFamily::from_pair_table(b.clone(), b.clone(), vec![(1, 1), (0, 1), (1, 0), (1, 1)]).unwrap();
    assert!(!check_naturality(&fam, &h).unwrap().passed());
    assert!(zero_preserved(&fam, &h).unwrap().is_some());
    // symmetric, zero-preserving, but not determined by the collapse
    let fam = RawFamily::from_pair_table(b.clone(), b.clone(), vec![(0, 0), (0, 1), (1, 0), (0, 0)]).unwrap();
    assert!(!check_naturality(&fam, &h).unwrap().passed());
    assert!(matches!(extract_cyclic(&fam), Err(ExtractError::NotNatural(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn case1_round_trip(tail in proptest::collection::vec(0usize..3, 8)) {
        let mut b = vec![0usize];
        b.extend(tail);
        let fam = make_case1(FinMonoid::cyclic(3), b.clone());
        // ℤ₃-valued parameters are arbitrary in the free case
        let fam = fam.unwrap();
        prop_assert_eq!(extract_case1(&fam, 8).unwrap(), b);
    }

    #[test]
    fn cyclic_round_trip(b in proptest::collection::vec(0usize..3, 3)) {
        let z3 = FinMonoid::cyclic(3);
        let fam = make_case2(z3.clone(), z3.clone(), b.clone()).unwrap();
        prop_assert_eq!(extract_cyclic(&fam).unwrap(), b);
    }

    #[test]
    fn boolean_source_round_trip(c in 0usize..2) {
        let fam = make_case2(FinMonoid::boolean(), FinMonoid::max01(), vec![c]).unwrap();
        prop_assert_eq!(extract_cyclic(&fam).unwrap(), vec![c]);
    }

    #[test]
    fn pushforward_preserves_total(f in proptest::collection::vec(0usize..4, 1..6), seed in 0usize..1000) {
        let z4 = FinMonoid::cyclic(4);
        let g: Vec<usize> = (0..f.len()).map(|i| (i * 7 + seed) % 3).collect();
        let out = fa_apply(&z4, &g, 3, &f);
        prop_assert_eq!(z4.sum(&out), z4.sum(&f));
    }
}
