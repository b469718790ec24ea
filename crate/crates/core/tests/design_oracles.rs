mod common;

use geoblock::{
    build_projective_plane, build_sts, build_symmetric, build_triple_system, complement_design,
    develop_difference_family, solve_design, symmetric_params, triple_system_params,
    verify_design, BlockDesign, Catalog, DesignFile, DesignParams, SolveOutcome,
    DEFAULT_NODE_BUDGET,
};
use proptest::prelude::*;

fn tuple(p: &DesignParams) -> (u64, u64, u64, u64, u64) {
    (p.b, p.n, p.r, p.k, p.lambda)
}

#[test]
fn triple_systems_for_every_admissible_order_up_to_40() {
    for lambda in 1..=3 {
        for n in 3..=40 {
            let Ok(p) = triple_system_params(n, lambda) else {
                assert!(build_triple_system(n, lambda).is_err());
                continue;
            };
            let d = build_triple_system(n, lambda)
                .unwrap_or_else(|e| panic!("n={n} λ={lambda}: {e}"));
            assert_eq!(common::brute_params(&d), Some(tuple(&p)), "n={n} λ={lambda}");
            assert!(verify_design(&d).all_pass());
        }
    }
}

#[test]
fn projective_planes_match_counting() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11] {
        let d = build_projective_plane(q).unwrap();
        let p = symmetric_params(q, 1).unwrap();
        assert_eq!(common::brute_params(&d), Some(tuple(&p)), "q={q}");
    }
    assert!(build_projective_plane(6).is_err());
}

#[test]
fn bundled_catalog_entries_are_designs() {
    let catalog = Catalog::bundled();
    assert!(!catalog.is_empty());
    for entry in catalog.entries() {
        assert_eq!(
            common::brute_params(&entry.design),
            Some(tuple(&entry.params)),
            "{}",
            entry.name
        );
    }
    assert!(catalog.validate().iter().all(|(_, ok)| *ok));
}

#[test]
fn symmetric_families_in_range() {
    let catalog = Catalog::bundled();
    for (n, lambda) in [(2, 2), (3, 2), (4, 2), (5, 2), (8, 2), (3, 3), (5, 3), (6, 3), (11, 3)] {
        let d = build_symmetric(n, lambda, catalog, DEFAULT_NODE_BUDGET).unwrap();
        let p = symmetric_params(n, lambda).unwrap();
        assert_eq!(common::brute_params(&d), Some(tuple(&p)), "n={n} λ={lambda}");
    }
}

#[test]
fn difference_set_development() {
    let d = develop_difference_family(13, &[vec![0, 1, 3, 9]]).unwrap();
    assert_eq!(common::brute_params(&d), Some((13, 13, 4, 4, 1)));
    let d = develop_difference_family(11, &[vec![1, 3, 4, 5, 9]]).unwrap();
    assert_eq!(common::brute_params(&d), Some((11, 11, 5, 5, 2)));
}

#[test]
fn solver_outcomes_are_reproducible() {
    let p = triple_system_params(12, 2).unwrap();
    let first = solve_design(&p, DEFAULT_NODE_BUDGET).unwrap();
    let SolveOutcome::Found(d) = &first else {
        panic!("no TS(12, 2) found");
    };
    assert_eq!(common::brute_params(d), Some(tuple(&p)));
    assert_eq!(first, solve_design(&p, DEFAULT_NODE_BUDGET).unwrap());
}

fn arb_sts() -> impl Strategy<Value = BlockDesign> {
    prop::sample::select(vec![7u64, 9, 13, 15, 19, 21, 25, 27])
        .prop_map(|n| build_sts(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn complement_twice_is_identity(d in arb_sts()) {
        let c = complement_design(&d).unwrap();
        prop_assert!(verify_design(&c).all_pass());
        prop_assert_eq!(complement_design(&c).unwrap(), d);
    }

    #[test]
    fn relabeling_preserves_parameters(
        d in arb_sts(),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..d.ground_size()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let image = d.relabel(&perm).unwrap();
        prop_assert_eq!(image.params(), d.params());
    }

    #[test]
    fn development_yields_v_blocks_per_base(
        v in 5u64..40,
        bases in prop::collection::vec(prop::collection::btree_set(0usize..40, 3), 1..4),
    ) {
        let bases: Vec<Vec<usize>> = bases
            .into_iter()
            .map(|b| b.into_iter().map(|x| x % v as usize).collect::<std::collections::BTreeSet<_>>())
            .filter(|b| b.len() == 3)
            .map(|b| b.into_iter().collect())
            .collect();
        prop_assume!(!bases.is_empty());
        let d = develop_difference_family(v, &bases).unwrap();
        prop_assert_eq!(d.block_count(), bases.len() * v as usize);
        prop_assert_eq!(d.ground_size(), v as usize);
    }

    #[test]
    fn design_file_round_trip(d in arb_sts()) {
        let text = DesignFile::to_json(&d);
        prop_assert_eq!(DesignFile::parse(&text).unwrap(), d);
    }
}
