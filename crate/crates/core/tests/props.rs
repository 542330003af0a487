//! Property tests over randomized inputs, extending the exhaustive checks to
//! sizes the enumerations cannot reach.

use num_bigint::BigInt;
use proptest::prelude::*;

use threshold_atlas::exactmath::{lagrange_interpolate, Polynomial};
use threshold_atlas::signed_permutations::{
    compartmentalize, odd_cycle_count, permutation_from_cycles, SignedPermutation,
};
use threshold_atlas::threshold_bijections::{
    pair_to_threshold_perm, standardize, threshold_perm_to_pair,
};
use threshold_atlas::threshold_graphs::{
    canonical_pair, graph_from_construction, odd_anchor_count, LabeledThresholdGraph,
};

fn signed_perm(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let magnitudes = Just((1..=n as i32).collect::<Vec<i32>>()).prop_shuffle();
            let signs = prop::collection::vec(any::<bool>(), n);
            (magnitudes, signs)
        })
        .prop_map(|(mags, signs)| {
            let entries: Vec<i32> = mags
                .into_iter()
                .zip(signs)
                .map(|(m, neg)| if neg { -m } else { m })
                .collect();
            SignedPermutation::new(entries).unwrap()
        })
}

fn int_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-100i64..=100, 1..=max_degree + 1)
        .prop_map(|coeffs| Polynomial::new(coeffs.into_iter().map(BigInt::from).collect()))
}

proptest! {
    #[test]
    fn interpolation_recovers_sampled_polynomials(p in int_poly(10)) {
        let samples = p.degree().unwrap_or(0) + 1;
        let points: Vec<(BigInt, BigInt)> = (0..samples as i64)
            .map(|x| (BigInt::from(x), p.eval(&BigInt::from(x))))
            .collect();
        prop_assert_eq!(lagrange_interpolate(&points).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in int_poly(6), b in int_poly(6), x in -50i64..=50) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn cycle_structure_round_trips(sp in signed_perm(12)) {
        let back = permutation_from_cycles(&compartmentalize(&sp)).unwrap();
        prop_assert_eq!(back, sp);
    }

    #[test]
    fn standardization_is_idempotent_and_graph_preserving(sp in signed_perm(12)) {
        prop_assume!(sp.n() >= 2);
        let tp = standardize(&sp).unwrap();
        prop_assert_eq!(standardize(tp.as_perm()).unwrap(), tp.clone());
        prop_assert_eq!(
            graph_from_construction(&sp),
            graph_from_construction(tp.as_perm())
        );
    }

    #[test]
    fn pair_code_words_round_trip(sp in signed_perm(12)) {
        prop_assume!(sp.n() >= 2);
        let tp = standardize(&sp).unwrap();
        let perm = pair_to_threshold_perm(&tp);
        prop_assert_eq!(threshold_perm_to_pair(&perm), tp.clone());

        // the two statistics agree through the graph coding
        let mut order = tp.entries().to_vec();
        if order[0] == -1 {
            order[0] = 1;
        }
        let order = SignedPermutation::new(order).unwrap();
        prop_assert_eq!(odd_anchor_count(&order).unwrap(), odd_cycle_count(perm.as_perm()));
    }

    #[test]
    fn canonical_pair_inverts_the_construction(sp in signed_perm(12)) {
        prop_assume!(sp.n() >= 2);
        let tp = standardize(&sp).unwrap();
        let graph = graph_from_construction(tp.as_perm());
        prop_assert_eq!(canonical_pair(&graph).unwrap(), tp);
    }

    #[test]
    fn graph_json_round_trips(sp in signed_perm(12)) {
        let graph = graph_from_construction(&sp);
        let text = serde_json::to_string(&graph).unwrap();
        let back: LabeledThresholdGraph = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, graph);
    }
}
