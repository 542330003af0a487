//! Builders for the data tables the CLI reproduces. Row order is fixed:
//! statistic value descending, then entries ascending, so renderings are
//! byte-stable across runs and platforms.

use num_bigint::BigInt;

use threshold_atlas::arrangements::{charpoly_threshold_formula, region_count};
use threshold_atlas::exactmath::Polynomial;
use threshold_atlas::signed_permutations::odd_cycle_count;
use threshold_atlas::threshold_bijections::{enumerate_threshold_pairs, pair_to_threshold_perm};
use threshold_atlas::threshold_graphs::{graph_from_construction, odd_anchor_count};
use threshold_atlas::{Result, SignedPermutation};

/// One row of the polynomial table: dimension, characteristic polynomial,
/// region count.
pub struct PolyRow {
    pub n: usize,
    pub chi: Polynomial,
    pub regions: BigInt,
}

/// The polynomial/region table for n = 2..=10.
pub fn polynomial_table() -> Result<Vec<PolyRow>> {
    (2..=10)
        .map(|n| {
            let chi = charpoly_threshold_formula(n)?;
            let regions = region_count(&chi);
            Ok(PolyRow { n, chi, regions })
        })
        .collect()
}

/// One row of the pair table: threshold pair, its threshold permutation,
/// and the odd-cycle count.
pub struct PairRow {
    pub pair: Vec<i32>,
    pub perm: Vec<i32>,
    pub odd_cycles: usize,
}

/// Threshold pairs of size `n` with their permutations and odd cycles.
pub fn pair_table(n: usize) -> Result<Vec<PairRow>> {
    let mut rows: Vec<PairRow> = enumerate_threshold_pairs(n)?
        .map(|tp| {
            let perm = pair_to_threshold_perm(&tp);
            let odd_cycles = odd_cycle_count(perm.as_perm());
            PairRow {
                pair: tp.entries().to_vec(),
                perm: perm.entries().to_vec(),
                odd_cycles,
            }
        })
        .collect();
    rows.sort_by(|a, b| b.odd_cycles.cmp(&a.odd_cycles).then(a.pair.cmp(&b.pair)));
    Ok(rows)
}

/// One row of the graph table: canonical construction, edges, odd anchors.
pub struct GraphRow {
    pub construction: Vec<i32>,
    pub edges: Vec<(u32, u32)>,
    pub odd_anchors: usize,
}

/// Labeled threshold graphs on `[n]` with their canonical convention-following
/// constructions and odd-anchor counts.
pub fn graph_table(n: usize) -> Result<Vec<GraphRow>> {
    let mut rows = Vec::new();
    for tp in enumerate_threshold_pairs(n)? {
        let mut order = tp.entries().to_vec();
        if order[0] == -1 {
            order[0] = 1;
        }
        let construction = SignedPermutation::new(order)?;
        let edges = graph_from_construction(&construction).edges();
        let odd_anchors = odd_anchor_count(&construction)?;
        rows.push(GraphRow {
            construction: construction.into_entries(),
            edges,
            odd_anchors,
        });
    }
    rows.sort_by(|a, b| {
        b.odd_anchors
            .cmp(&a.odd_anchors)
            .then(a.construction.cmp(&b.construction))
    });
    Ok(rows)
}
