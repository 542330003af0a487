//! Cross-module invariants at their full bounds, plus frozen reference
//! rows that the unit tests do not already pin.

use num_bigint::BigInt;
use num_traits::Signed;

use threshold_atlas::arrangements::{
    charpoly_threshold_formula, region_count, region_count_identities, threshold_coefficient,
};
use threshold_atlas::exactmath::{odd_cycle_coefficient, rising_odd_product};
use threshold_atlas::partitions::threshold_perm_count;
use threshold_atlas::verify::{run_verification, REGION_COUNTS};

#[test]
fn full_verification_suite_passes() {
    let results = run_verification(6).unwrap();
    assert!(results.len() >= 12);
    for r in &results {
        assert!(
            r.outcome.is_ok(),
            "check {} failed: {}",
            r.name,
            r.outcome.as_ref().unwrap_err()
        );
    }
}

#[test]
fn odd_cycle_triangle_to_twelve() {
    for n in 0..=12usize {
        let product = rising_odd_product(n);
        let mut row_sum = BigInt::ZERO;
        for j in 0..=n {
            let a = odd_cycle_coefficient(n, j).unwrap();
            assert_eq!(product.coeff(j), a, "row {n}, column {j}");
            row_sum += a;
        }
        let mut expected = BigInt::from(2u32).pow(n as u32);
        for i in 2..=n {
            expected *= BigInt::from(i);
        }
        assert_eq!(row_sum, expected, "row {n} sums to 2^n n!");
    }
}

#[test]
fn count_formula_equals_coefficients_to_twelve() {
    for n in 2..=12usize {
        for j in 0..=n {
            assert_eq!(
                threshold_perm_count(n, j).unwrap(),
                threshold_coefficient(n, j).unwrap().abs(),
                "(n, j) = ({n}, {j})"
            );
        }
    }
}

#[test]
fn region_identities_to_fifteen() {
    for n in 2..=15usize {
        let (bell, euler) = region_count_identities(n).unwrap();
        assert_eq!(bell, euler, "n = {n}");
        assert_eq!(
            bell,
            region_count(&charpoly_threshold_formula(n).unwrap()),
            "n = {n}"
        );
    }
}

#[test]
fn frozen_characteristic_polynomials() {
    let rows: [(usize, &[i64]); 3] = [
        (7, &[-4208, 9961, -9058, 4340, -1225, 210, -21, 1]),
        (
            9,
            &[
                -586_141,
                1_422_483,
                -1_355_427,
                703_815,
                -226_380,
                47_817,
                -6_762,
                630,
                -36,
                1,
            ],
        ),
        (
            10,
            &[
                8_161_237,
                -20_068_391,
                19_546_335,
                -10_491_450,
                3_541_125,
                -801_507,
                125_265,
                -13_560,
                990,
                -45,
                1,
            ],
        ),
    ];
    for (n, coeffs) in rows {
        let chi = charpoly_threshold_formula(n).unwrap();
        assert_eq!(chi.degree(), Some(n));
        for (j, &c) in coeffs.iter().enumerate() {
            assert_eq!(chi.coeff(j), BigInt::from(c), "n = {n}, t^{j}");
        }
        assert_eq!(
            region_count(&chi),
            BigInt::from(REGION_COUNTS[n - 2]),
            "regions at n = {n}"
        );
    }
}
