//! The cross-module invariant suite behind the `verify` command.
//!
//! Each check re-derives one of the library's structural claims by an
//! independent route (exhaustive enumeration, brute-force counting, a second
//! closed form) and reports the first counterexample on failure. Bounds are
//! per check and are capped by the caller's `max_n`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arrangements::{
    charpoly_finite_field, charpoly_threshold_formula, count_points_brute_force,
    count_points_threshold_combinatorial, edge_rule_check, region_count, region_count_identities,
    threshold_coefficient, Arrangement,
};
use crate::distribution::DistributionTable;
use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, eulerian, falling_odd_product, lagrange_interpolate, odd_cycle_coefficient,
    ordered_bell, rising_odd_product, stirling1_unsigned, stirling2, Polynomial,
};
use crate::partitions::{
    enumerate_representations, involution, normal_perm_count, normal_to_special_pair,
    rep_odd_cycle_count, rep_to_partition_pair, partition_pair_to_rep, special_pair_to_normal,
    threshold_perm_count, SpecialPair,
};
use crate::signed_permutations::{
    compartmentalize, enumerate_normal, is_normal_slice, odd_cycle_count_of,
    permutation_from_cycles, visit_signed, SignedPermutation,
};
use crate::threshold_bijections::{
    is_threshold_pair, is_threshold_perm_slice, pair_entries_of_threshold_perm, standardize,
    threshold_pair_count, threshold_perm_entries_of_pair, visit_threshold_pairs, ThresholdPair,
};
use crate::threshold_graphs::{
    anchors, canonical_construction_of_pair, canonical_pair, graph_from_construction,
    is_threshold_graph, odd_anchor_count_of,
};

type CheckFn = fn(usize) -> std::result::Result<(), String>;

/// One named invariant check.
pub struct Check {
    pub name: &'static str,
    /// Largest `n` the check ever uses; the effective bound is the minimum
    /// of this and the caller's `max_n`.
    pub bound: usize,
    run: CheckFn,
}

impl Check {
    /// Runs the check up to `min(self.bound, max_n)`.
    pub fn run(&self, max_n: usize) -> std::result::Result<(), String> {
        (self.run)(self.bound.min(max_n))
    }
}

/// Outcome of one check.
pub struct CheckResult {
    pub name: &'static str,
    pub bound: usize,
    pub outcome: std::result::Result<(), String>,
}

/// Region counts of the threshold arrangement for n = 2..=10.
pub const REGION_COUNTS: [u64; 9] = [
    2, 8, 46, 332, 2874, 29024, 334_982, 4_349_492, 62_749_906,
];

pub fn all_checks() -> Vec<Check> {
    vec![
        Check { name: "odd-cycle-coefficient-triple", bound: 12, run: check_odd_cycle_triple },
        Check { name: "odd-cycle-coefficient-row-sum", bound: 12, run: check_odd_cycle_row_sum },
        Check { name: "sequences-vs-brute-force", bound: 8, run: check_sequences_brute_force },
        Check { name: "lagrange-round-trip", bound: 10, run: check_lagrange_round_trip },
        Check { name: "cycle-structure-round-trip", bound: 6, run: check_cycle_round_trip },
        Check { name: "compartment-partition", bound: 6, run: check_compartment_partition },
        Check { name: "signed-odd-cycle-distribution", bound: 7, run: check_signed_distribution },
        Check { name: "type-b-coefficients", bound: 7, run: check_type_b_coefficients },
        Check { name: "pair-perm-bijection", bound: 8, run: check_pair_perm_bijection },
        Check { name: "threshold-perm-census", bound: 8, run: check_threshold_perm_census },
        Check { name: "standardize-idempotent", bound: 6, run: check_standardize_idempotent },
        Check { name: "standardize-preserves-graph", bound: 6, run: check_standardize_graph },
        Check { name: "block-structure", bound: 6, run: check_block_structure },
        Check { name: "construction-invariance", bound: 6, run: check_construction_invariance },
        Check { name: "odd-anchor-distribution", bound: 8, run: check_odd_anchor_distribution },
        Check { name: "statistic-transport", bound: 8, run: check_statistic_transport },
        Check { name: "canonical-pair-round-trip", bound: 7, run: check_canonical_round_trip },
        Check { name: "constructions-are-threshold", bound: 6, run: check_constructions_threshold },
        Check { name: "charpoly-route-agreement", bound: 6, run: check_charpoly_routes },
        Check { name: "coefficient-sign-pattern", bound: 15, run: check_sign_pattern },
        Check { name: "zaslavsky-consistency", bound: 10, run: check_zaslavsky },
        Check { name: "region-count-identities", bound: 15, run: check_region_identities },
        Check { name: "point-count-route-agreement", bound: 5, run: check_point_count_routes },
        Check { name: "edge-rule", bound: 7, run: check_edge_rule },
        Check { name: "involution-properties", bound: 5, run: check_involution },
        Check { name: "representation-odd-cycle-constancy", bound: 5, run: check_rep_constancy },
        Check { name: "signed-count-collapse", bound: 5, run: check_signed_collapse },
        Check { name: "partition-pair-round-trip", bound: 4, run: check_partition_pair },
        Check { name: "special-pair-bijection", bound: 6, run: check_special_pair },
        Check { name: "normal-count-formula", bound: 7, run: check_normal_counts },
        Check { name: "threshold-count-agreement", bound: 12, run: check_threshold_counts },
    ]
}

/// Runs every check with its bound capped at `max_n`.
pub fn run_verification(max_n: usize) -> Result<Vec<CheckResult>> {
    if !(2..=8).contains(&max_n) {
        return Err(Error::domain(format!(
            "verification requires 2 <= max_n <= 8, got {max_n}"
        )));
    }
    Ok(all_checks()
        .into_iter()
        .map(|c| CheckResult {
            name: c.name,
            bound: c.bound.min(max_n),
            outcome: (c.run)(c.bound.min(max_n)),
        })
        .collect())
}

fn fail<T>(msg: String) -> std::result::Result<T, String> {
    Err(msg)
}

// ---- exact sequences ----------------------------------------------------

fn check_odd_cycle_triple(max_n: usize) -> std::result::Result<(), String> {
    for n in 0..=max_n {
        let product = rising_odd_product(n);
        for j in 0..=n {
            let a = odd_cycle_coefficient(n, j).map_err(|e| e.to_string())?;
            if product.coeff(j) != a {
                return fail(format!(
                    "a({n},{j}) = {a} but the rising odd product has coefficient {}",
                    product.coeff(j)
                ));
            }
            let mut by_cycles = BigInt::zero();
            for i in j..=n {
                by_cycles += stirling1_unsigned(n, i).map_err(|e| e.to_string())?
                    * binomial(i, j)
                    * BigInt::from(2u32).pow((n - i) as u32);
            }
            if by_cycles != a {
                return fail(format!(
                    "a({n},{j}) = {a} but the cycle-count sum gives {by_cycles}"
                ));
            }
        }
    }
    Ok(())
}

fn check_odd_cycle_row_sum(max_n: usize) -> std::result::Result<(), String> {
    for n in 0..=max_n {
        let mut total = BigInt::zero();
        for j in 0..=n {
            total += odd_cycle_coefficient(n, j).map_err(|e| e.to_string())?;
        }
        let expected = BigInt::from(2u32).pow(n as u32) * crate::exactmath::factorial(n);
        if total != expected {
            return fail(format!("row {n} sums to {total}, expected 2^n n! = {expected}"));
        }
    }
    Ok(())
}

fn brute_set_partitions(n: usize, k: usize) -> u64 {
    // restricted growth strings
    fn rec(pos: usize, n: usize, used: usize, k: usize) -> u64 {
        if pos == n {
            return u64::from(used == k);
        }
        let mut total = 0;
        for block in 0..=used.min(k - 1) {
            let next_used = used.max(block + 1);
            total += rec(pos + 1, n, next_used, k);
        }
        total
    }
    if n == 0 || k == 0 {
        return u64::from(n == 0 && k == 0);
    }
    rec(0, n, 0, k)
}

fn brute_ordered_partitions(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    // choose the first block as any nonempty subset, recurse on the rest
    fn rec(remaining: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        let mut sub = remaining;
        loop {
            total += rec(remaining & !sub);
            sub = (sub - 1) & remaining;
            if sub == 0 {
                break;
            }
        }
        total
    }
    rec((1 << n) - 1)
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        f(&perm);
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = perm[v];
        }
    }
    cycles
}

fn check_sequences_brute_force(max_n: usize) -> std::result::Result<(), String> {
    for n in 0..=max_n {
        for k in 0..=n {
            let fast = stirling2(n, k).map_err(|e| e.to_string())?;
            let slow = BigInt::from(brute_set_partitions(n, k));
            if fast != slow {
                return fail(format!("S({n},{k}) = {fast}, enumeration gives {slow}"));
            }
        }
        let mut by_cycles = vec![0u64; n + 1];
        let mut by_descents = vec![0u64; n.max(1)];
        for_each_permutation(n, |perm| {
            by_cycles[cycle_count(perm)] += 1;
            if n > 0 {
                let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
                by_descents[descents] += 1;
            }
        });
        for k in 0..=n {
            let fast = stirling1_unsigned(n, k).map_err(|e| e.to_string())?;
            if fast != BigInt::from(by_cycles[k]) {
                return fail(format!(
                    "c({n},{k}) = {fast}, enumeration gives {}",
                    by_cycles[k]
                ));
            }
        }
        if n >= 1 {
            for k in 0..n {
                let fast = eulerian(n, k).map_err(|e| e.to_string())?;
                if fast != BigInt::from(by_descents[k]) {
                    return fail(format!(
                        "A({n},{k}) = {fast}, enumeration gives {}",
                        by_descents[k]
                    ));
                }
            }
        }
        let fast = ordered_bell(n);
        let slow = BigInt::from(brute_ordered_partitions(n));
        if fast != slow {
            return fail(format!("ordered_bell({n}) = {fast}, enumeration gives {slow}"));
        }
    }
    Ok(())
}

fn check_lagrange_round_trip(max_degree: usize) -> std::result::Result<(), String> {
    let mut state = 0x9E3779B97F4A7C15u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) as i64 % 101) - 50
    };
    for case in 0..24 {
        let degree = case % (max_degree + 1);
        let mut coeffs: Vec<BigInt> = (0..=degree).map(|_| BigInt::from(next())).collect();
        if coeffs[degree].is_zero() {
            coeffs[degree] = BigInt::one();
        }
        let p = Polynomial::new(coeffs);
        let points: Vec<(BigInt, BigInt)> = (0..=degree as i64)
            .map(|x| (BigInt::from(x), p.eval(&BigInt::from(x))))
            .collect();
        let back = lagrange_interpolate(&points).map_err(|e| e.to_string())?;
        if back != p {
            return fail(format!("interpolation of {p} returned {back}"));
        }
    }
    Ok(())
}

// ---- signed permutations -------------------------------------------------

fn check_cycle_round_trip(max_n: usize) -> std::result::Result<(), String> {
    for n in 0..=max_n {
        let mut bad = None;
        visit_signed(n, |entries| {
            if bad.is_some() {
                return;
            }
            let sp = SignedPermutation::from_slice(entries).expect("valid");
            let back = permutation_from_cycles(&compartmentalize(&sp));
            if !matches!(back, Ok(ref b) if b.entries() == entries) {
                bad = Some(sp);
            }
        });
        if let Some(sp) = bad {
            return fail(format!("cycle round trip fails on {sp}"));
        }
    }
    Ok(())
}

fn check_compartment_partition(max_n: usize) -> std::result::Result<(), String> {
    for n in 0..=max_n {
        let mut bad = None;
        visit_signed(n, |entries| {
            if bad.is_some() {
                return;
            }
            let sp = SignedPermutation::from_slice(entries).expect("valid");
            let cs = compartmentalize(&sp);
            let negs: usize = cs.cycles().iter().map(|c| c.negative_count()).sum();
            let direct = entries.iter().filter(|&&e| e < 0).count();
            if negs != direct {
                bad = Some(format!("negative signs split badly on {sp}"));
                return;
            }
            // the closing magnitude of a compartment is below everything after it
            let mut offset = 0;
            for c in cs.cycles() {
                let end = offset + c.entries().len() - 1;
                let last = entries[end].unsigned_abs();
                if entries[end + 1..].iter().any(|e| e.unsigned_abs() < last) {
                    bad = Some(format!("compartment end {last} is not a suffix minimum in {sp}"));
                    return;
                }
                offset = end + 1;
            }
        });
        if let Some(msg) = bad {
            return fail(msg);
        }
    }
    Ok(())
}

fn check_signed_distribution(max_n: usize) -> std::result::Result<(), String> {
    for n in 0..=max_n {
        let mut table = DistributionTable::new("odd-cycles", n);
        visit_signed(n, |entries| table.record(odd_cycle_count_of(entries)));
        for j in 0..=n {
            let expected = odd_cycle_coefficient(n, j).map_err(|e| e.to_string())?;
            if table.get(j) != expected {
                return fail(format!(
                    "signed permutations of [{n}] with {j} odd cycles: counted {}, formula {expected}",
                    table.get(j)
                ));
            }
        }
    }
    Ok(())
}

fn check_type_b_coefficients(max_n: usize) -> std::result::Result<(), String> {
    for n in 0..=max_n {
        let chi = falling_odd_product(n);
        for j in 0..=n {
            let expected = odd_cycle_coefficient(n, j).map_err(|e| e.to_string())?;
            if chi.coeff(j).abs() != expected {
                return fail(format!(
                    "|type-B coefficient| at t^{j}, n = {n}: {} vs a(n,j) = {expected}",
                    chi.coeff(j).abs()
                ));
            }
        }
    }
    Ok(())
}

// ---- threshold bijections --------------------------------------------------

fn check_pair_perm_bijection(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let mut image: Vec<Vec<i32>> = Vec::new();
        let mut bad = None;
        let mut perm = Vec::new();
        let mut back = Vec::new();
        visit_threshold_pairs(n, |pair| {
            if bad.is_some() {
                return;
            }
            threshold_perm_entries_of_pair(pair, &mut perm);
            if !is_threshold_perm_slice(&perm) {
                bad = Some(format!("pair {pair:?} maps outside the threshold permutations"));
                return;
            }
            pair_entries_of_threshold_perm(&perm, &mut back);
            if back != pair {
                bad = Some(format!("round trip fails on pair {pair:?}"));
                return;
            }
            image.push(perm.clone());
        })
        .map_err(|e| e.to_string())?;
        if let Some(msg) = bad {
            return fail(msg);
        }
        let mut direct: Vec<Vec<i32>> = Vec::new();
        visit_signed(n, |entries| {
            if is_threshold_perm_slice(entries) {
                direct.push(entries.to_vec());
            }
        });
        image.sort();
        direct.sort();
        if image != direct {
            return fail(format!(
                "at n = {n} the pair image has {} permutations, the filter has {}",
                image.len(),
                direct.len()
            ));
        }
    }
    Ok(())
}

fn check_threshold_perm_census(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let pairs = threshold_pair_count(n).map_err(|e| e.to_string())?;
        let mut perms = 0u64;
        visit_signed(n, |entries| {
            if is_threshold_perm_slice(entries) {
                perms += 1;
            }
        });
        let regions = region_count(&charpoly_threshold_formula(n).map_err(|e| e.to_string())?);
        if pairs != regions || BigInt::from(perms) != regions {
            return fail(format!(
                "census at n = {n}: {pairs} pairs, {perms} permutations, {regions} regions"
            ));
        }
    }
    Ok(())
}

fn check_standardize_idempotent(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let mut bad = None;
        visit_signed(n, |entries| {
            if bad.is_some() {
                return;
            }
            let sp = SignedPermutation::from_slice(entries).expect("valid");
            match standardize(&sp) {
                Err(e) => bad = Some(format!("standardize failed on {sp}: {e}")),
                Ok(tp) => {
                    if !is_threshold_pair(tp.as_perm()).unwrap_or(false) {
                        bad = Some(format!("standardize({sp}) is not standard"));
                    } else if !standardize(tp.as_perm()).map(|t| t == tp).unwrap_or(false) {
                        bad = Some(format!("standardize is not idempotent on {sp}"));
                    }
                }
            }
        });
        if let Some(msg) = bad {
            return fail(msg);
        }
    }
    Ok(())
}

fn check_standardize_graph(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let mut bad = None;
        visit_signed(n, |entries| {
            if bad.is_some() {
                return;
            }
            let sp = SignedPermutation::from_slice(entries).expect("valid");
            let tp = standardize(&sp).expect("n >= 2");
            if graph_from_construction(&sp) != graph_from_construction(tp.as_perm()) {
                bad = Some(format!("standardize changes the graph of {sp}"));
            }
        });
        if let Some(msg) = bad {
            return fail(msg);
        }
    }
    Ok(())
}

fn check_block_structure(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let mut bad = None;
        visit_threshold_pairs(n, |entries| {
            if bad.is_some() {
                return;
            }
            let tp = ThresholdPair::from_slice(entries).expect("valid");
            let decomposition = crate::threshold_bijections::blocks(&tp);
            let b = &decomposition.blocks;
            if b[0].members.len() < 2 {
                bad = Some(format!("first block of {tp} has size {}", b[0].members.len()));
                return;
            }
            let mut rebuilt = Vec::new();
            for block in b {
                if !block.members.windows(2).all(|w| w[0] < w[1]) {
                    bad = Some(format!("block members of {tp} are not ascending"));
                    return;
                }
                rebuilt.extend(block.members.iter().map(|&m| block.sign.apply(m)));
            }
            if rebuilt != entries {
                bad = Some(format!("blocks of {tp} do not concatenate back"));
            }
        })
        .map_err(|e| e.to_string())?;
        if let Some(msg) = bad {
            return fail(msg);
        }
    }
    Ok(())
}

// ---- threshold graphs ------------------------------------------------------

fn check_construction_invariance(max_n: usize) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        let mut seen: HashMap<Vec<u64>, (usize, SignedPermutation)> = HashMap::new();
        let mut bad = None;
        visit_signed(n, |entries| {
            if bad.is_some() {
                return;
            }
            let sp = SignedPermutation::from_slice(entries).expect("valid");
            let report = match anchors(&sp) {
                Ok(r) => r,
                Err(Error::Convention(_)) => return,
                Err(e) => {
                    bad = Some(format!("anchors failed on {sp}: {e}"));
                    return;
                }
            };
            let count = report.odd_count();
            let graph = graph_from_construction(&sp);
            let key: Vec<u64> = graph.edges().iter().map(|&(a, b)| ((a as u64) << 32) | b as u64).collect();
            match seen.entry(key) {
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert((count, sp));
                }
                std::collections::hash_map::Entry::Occupied(o) => {
                    let (expected, witness) = o.get();
                    if *expected != count {
                        bad = Some(format!(
                            "graph of {witness} has {expected} odd anchors but construction {sp} gives {count}"
                        ));
                    }
                }
            }
        });
        if let Some(msg) = bad {
            return fail(msg);
        }
    }
    Ok(())
}

fn check_odd_anchor_distribution(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let table = crate::threshold_graphs::odd_anchor_distribution(n).map_err(|e| e.to_string())?;
        for j in 0..=n {
            let expected = threshold_coefficient(n, j).map_err(|e| e.to_string())?.abs();
            if table.get(j) != expected {
                return fail(format!(
                    "graphs on [{n}] with {j} odd anchors: counted {}, |coefficient| {expected}",
                    table.get(j)
                ));
            }
        }
    }
    Ok(())
}

fn check_statistic_transport(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let mut bad = None;
        let mut construction = Vec::new();
        let mut perm = Vec::new();
        visit_threshold_pairs(n, |pair| {
            if bad.is_some() {
                return;
            }
            canonical_construction_of_pair(pair, &mut construction);
            threshold_perm_entries_of_pair(pair, &mut perm);
            if odd_anchor_count_of(&construction) != odd_cycle_count_of(&perm) {
                bad = Some(format!("statistics disagree on pair {pair:?}"));
            }
        })
        .map_err(|e| e.to_string())?;
        if let Some(msg) = bad {
            return fail(msg);
        }
    }
    Ok(())
}

fn check_canonical_round_trip(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let mut bad = None;
        visit_threshold_pairs(n, |entries| {
            if bad.is_some() {
                return;
            }
            let tp = ThresholdPair::from_slice(entries).expect("valid");
            let graph = graph_from_construction(tp.as_perm());
            match canonical_pair(&graph) {
                Ok(back) if back == tp => {}
                Ok(back) => bad = Some(format!("canonical pair of the graph of {tp} is {back}")),
                Err(e) => bad = Some(format!("canonical_pair failed on the graph of {tp}: {e}")),
            }
        })
        .map_err(|e| e.to_string())?;
        if let Some(msg) = bad {
            return fail(msg);
        }
    }
    Ok(())
}

fn check_constructions_threshold(max_n: usize) -> std::result::Result<(), String> {
    for n in 0..=max_n {
        let mut bad = None;
        visit_signed(n, |entries| {
            if bad.is_some() {
                return;
            }
            let sp = SignedPermutation::from_slice(entries).expect("valid");
            if !is_threshold_graph(&graph_from_construction(&sp)) {
                bad = Some(format!("construction {sp} yields a non-threshold graph"));
            }
        });
        if let Some(msg) = bad {
            return fail(msg);
        }
    }
    Ok(())
}

// ---- arrangements ----------------------------------------------------------

fn check_charpoly_routes(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let sampled = charpoly_finite_field(&Arrangement::threshold(n)).map_err(|e| e.to_string())?;
        let closed = charpoly_threshold_formula(n).map_err(|e| e.to_string())?;
        if sampled != closed {
            return fail(format!(
                "threshold n = {n}: finite field gives {sampled}, closed form {closed}"
            ));
        }
    }
    for n in 1..=max_n.min(4) {
        let sampled = charpoly_finite_field(&Arrangement::type_b(n)).map_err(|e| e.to_string())?;
        let closed = falling_odd_product(n);
        if sampled != closed {
            return fail(format!(
                "type B n = {n}: finite field gives {sampled}, closed form {closed}"
            ));
        }
    }
    Ok(())
}

fn check_sign_pattern(max_n: usize) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        let chi = charpoly_threshold_formula(n).map_err(|e| e.to_string())?;
        for j in 0..=n {
            let c = chi.coeff(j);
            let positive = (n - j) % 2 == 0;
            if (positive && c.is_negative()) || (!positive && c.is_positive()) {
                return fail(format!(
                    "coefficient of t^{j} in the n = {n} polynomial is {c}, breaking the (-1)^(n-j) pattern"
                ));
            }
        }
    }
    Ok(())
}

fn check_zaslavsky(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let chi = charpoly_threshold_formula(n).map_err(|e| e.to_string())?;
        let regions = region_count(&chi);
        if n <= 10 {
            let table = BigInt::from(REGION_COUNTS[n - 2]);
            if regions != table {
                return fail(format!("r(n = {n}) = {regions}, table says {table}"));
            }
        }
        if n <= 8 {
            let enumerated = threshold_pair_count(n).map_err(|e| e.to_string())?;
            if enumerated != regions {
                return fail(format!(
                    "n = {n}: {enumerated} threshold pairs but {regions} regions"
                ));
            }
        }
    }
    Ok(())
}

fn check_region_identities(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let (bell, euler) = region_count_identities(n).map_err(|e| e.to_string())?;
        let zas = region_count(&charpoly_threshold_formula(n).map_err(|e| e.to_string())?);
        if bell != euler || bell != zas {
            return fail(format!(
                "n = {n}: ordered-Bell form {bell}, Eulerian form {euler}, Zaslavsky {zas}"
            ));
        }
    }
    Ok(())
}

fn check_point_count_routes(max_n: usize) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        let a = Arrangement::threshold(n);
        for q in (3..=13u64).step_by(2) {
            let brute = count_points_brute_force(&a, q).map_err(|e| e.to_string())?;
            let comb = count_points_threshold_combinatorial(n, q).map_err(|e| e.to_string())?;
            if brute != comb {
                return fail(format!(
                    "threshold n = {n}, q = {q}: brute force {}, combinatorial {}",
                    brute.count, comb.count
                ));
            }
        }
    }
    Ok(())
}

fn check_edge_rule(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let mut bad = None;
        visit_threshold_pairs(n, |entries| {
            if bad.is_some() {
                return;
            }
            let tp = ThresholdPair::from_slice(entries).expect("valid");
            match edge_rule_check(&tp) {
                Ok(true) => {}
                Ok(false) => bad = Some(format!("edge rule fails on {tp}")),
                Err(e) => bad = Some(format!("sign vector failed on {tp}: {e}")),
            }
        })
        .map_err(|e| e.to_string())?;
        if let Some(msg) = bad {
            return fail(msg);
        }
    }
    Ok(())
}

// ---- partitions and the involution ----------------------------------------

fn check_involution(max_n: usize) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        for rep in enumerate_representations(n).map_err(|e| e.to_string())? {
            if rep.is_standard() {
                if involution(&rep).is_ok() {
                    return fail(format!("involution moved the standard representation {rep}"));
                }
                continue;
            }
            let image = involution(&rep).map_err(|e| format!("involution failed on {rep}: {e}"))?;
            if image.part_count().abs_diff(rep.part_count()) != 1 {
                return fail(format!("involution does not flip part parity on {rep}"));
            }
            if image.underlying() != rep.underlying() {
                return fail(format!("involution changes the partition under {rep}"));
            }
            if rep_odd_cycle_count(&image) != rep_odd_cycle_count(&rep) {
                return fail(format!("involution changes the odd cycles of {rep}"));
            }
            let back = involution(&image).map_err(|e| e.to_string())?;
            if back != rep {
                return fail(format!("involution is not an involution on {rep}"));
            }
        }
    }
    Ok(())
}

fn check_rep_constancy(max_n: usize) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        let mut by_sop: HashMap<String, usize> = HashMap::new();
        for rep in enumerate_representations(n).map_err(|e| e.to_string())? {
            let key = format!("{:?}", rep.underlying());
            let cycles = rep_odd_cycle_count(&rep);
            if let Some(&prev) = by_sop.get(&key) {
                if prev != cycles {
                    return fail(format!(
                        "representations of one partition disagree on odd cycles at {rep}"
                    ));
                }
            } else {
                by_sop.insert(key, cycles);
            }
        }
    }
    Ok(())
}

fn check_signed_collapse(max_n: usize) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        let mut signed = vec![BigInt::zero(); n + 1];
        let mut standard = vec![BigInt::zero(); n + 1];
        for rep in enumerate_representations(n).map_err(|e| e.to_string())? {
            let j = rep_odd_cycle_count(&rep);
            if (n - rep.part_count()) % 2 == 0 {
                signed[j] += 1;
            } else {
                signed[j] -= 1;
            }
            if rep.is_standard() {
                standard[j] += 1;
            }
        }
        for j in 0..=n {
            let formula = normal_perm_count(n, j).map_err(|e| e.to_string())?;
            if signed[j] != formula || standard[j] != formula {
                return fail(format!(
                    "at (n, j) = ({n}, {j}): signed sum {}, standard count {}, formula {formula}",
                    signed[j], standard[j]
                ));
            }
        }
    }
    Ok(())
}

fn check_partition_pair(max_n: usize) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        for rep in enumerate_representations(n).map_err(|e| e.to_string())? {
            let (partition, perm) = rep_to_partition_pair(&rep);
            if odd_cycle_count_of(perm.entries()) != rep_odd_cycle_count(&rep) {
                return fail(format!("partition pair changes odd cycles on {rep}"));
            }
            let back = partition_pair_to_rep(&partition, &perm).map_err(|e| e.to_string())?;
            if back != rep {
                return fail(format!("partition pair round trip fails on {rep}"));
            }
        }
    }
    Ok(())
}

fn check_special_pair(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n {
        let mut image: Vec<Vec<i32>> = Vec::new();
        for b in 1..=n as u32 {
            for pi in enumerate_normal(n - 1) {
                let pair = SpecialPair::new(b, pi).map_err(|e| e.to_string())?;
                let normal = special_pair_to_normal(&pair);
                if odd_cycle_count_of(normal.entries())
                    != odd_cycle_count_of(&pair.ambient_entries())
                {
                    return fail(format!(
                        "insertion changes odd cycles for b = {b}, pi = {}",
                        pair.reduced()
                    ));
                }
                let back = normal_to_special_pair(&normal).map_err(|e| e.to_string())?;
                if back != pair {
                    return fail(format!("inverse fails on b = {b}, pi = {}", pair.reduced()));
                }
                image.push(normal.into_entries());
            }
        }
        let mut expected: Vec<Vec<i32>> = Vec::new();
        visit_signed(n, |entries| {
            if is_normal_slice(entries) && !is_threshold_perm_slice(entries) {
                expected.push(entries.to_vec());
            }
        });
        image.sort();
        expected.sort();
        if image.windows(2).any(|w| w[0] == w[1]) {
            return fail(format!("insertion map is not injective at n = {n}"));
        }
        if image != expected {
            return fail(format!(
                "at n = {n} the insertion image has {} permutations, normal-non-threshold has {}",
                image.len(),
                expected.len()
            ));
        }
    }
    Ok(())
}

fn check_normal_counts(max_n: usize) -> std::result::Result<(), String> {
    for n in 1..=max_n {
        let mut histogram = vec![0u64; n + 1];
        visit_signed(n, |entries| {
            if is_normal_slice(entries) {
                histogram[odd_cycle_count_of(entries)] += 1;
            }
        });
        for j in 0..=n {
            let formula = normal_perm_count(n, j).map_err(|e| e.to_string())?;
            if BigInt::from(histogram[j]) != formula {
                return fail(format!(
                    "N({n},{j}) = {formula} but enumeration counts {}",
                    histogram[j]
                ));
            }
        }
    }
    Ok(())
}

fn check_threshold_counts(max_n: usize) -> std::result::Result<(), String> {
    for n in 2..=max_n.min(7) {
        let mut histogram = vec![0u64; n + 1];
        visit_signed(n, |entries| {
            if is_threshold_perm_slice(entries) {
                histogram[odd_cycle_count_of(entries)] += 1;
            }
        });
        for j in 0..=n {
            let formula = threshold_perm_count(n, j).map_err(|e| e.to_string())?;
            if BigInt::from(histogram[j]) != formula {
                return fail(format!(
                    "threshold permutations at ({n},{j}): formula {formula}, enumeration {}",
                    histogram[j]
                ));
            }
        }
    }
    for n in 2..=max_n {
        for j in 0..=n {
            let count = threshold_perm_count(n, j).map_err(|e| e.to_string())?;
            let coeff = threshold_coefficient(n, j).map_err(|e| e.to_string())?.abs();
            if count != coeff {
                return fail(format!(
                    "at ({n},{j}): count formula {count}, |coefficient| {coeff}"
                ));
            }
        }
    }
    Ok(())
}
