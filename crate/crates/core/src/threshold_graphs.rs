//! Labeled threshold graphs, their constructions, and the odd-anchor
//! statistic.
//!
//! A construction is a signed permutation read as a vertex-addition order:
//! a plus entry joins adjacent to everything added before it (dominant), a
//! minus entry joins isolated (recessive). Anchors are the vertices smaller
//! than everything added after them; the odd-anchor count is invariant over
//! all constructions of a graph once the vertex-1 convention is enforced,
//! which is why the convention is a checked precondition here rather than a
//! silent normalization.

use rayon::prelude::*;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::distribution::DistributionTable;
use crate::error::{Error, Result};
use crate::signed_permutations::{visit_signed, SignedPermutation};
use crate::threshold_bijections::{standardize, ThresholdPair};

/// A graph on labeled vertices `[n]`, stored as adjacency bitmasks.
/// Equality is edge-set equality on labeled vertices; there is no
/// isomorphism quotient anywhere in the library.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledThresholdGraph {
    n: usize,
    adj: Vec<u64>,
}

impl LabeledThresholdGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::domain(
                "graphs are limited to 64 vertices (enumerative scale)",
            ));
        }
        Ok(LabeledThresholdGraph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list; endpoints must be distinct members
    /// of `[n]`. Edge order and duplicate edges are tolerated on input.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = LabeledThresholdGraph::empty(n)?;
        for &(a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, a: u32, b: u32) -> Result<()> {
        if a == b {
            return Err(Error::domain(format!("loop edge [{a},{b}] is not allowed")));
        }
        let n = self.n as u32;
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::domain(format!(
                "edge [{a},{b}] is not inside [{n}]"
            )));
        }
        self.adj[(a - 1) as usize] |= 1 << (b - 1);
        self.adj[(b - 1) as usize] |= 1 << (a - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        a != b
            && a >= 1
            && b >= 1
            && a as usize <= self.n
            && b as usize <= self.n
            && self.adj[(a - 1) as usize] >> (b - 1) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            let mut bits = self.adj[i] >> (i + 1) << (i + 1);
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                out.push((i as u32 + 1, j as u32 + 1));
                bits &= bits - 1;
            }
        }
        out
    }
}

/// JSON schema: `{"n": int, "edges": [[i,j], ...]}` with `i < j` and edges
/// sorted lexicographically.
impl Serialize for LabeledThresholdGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("LabeledThresholdGraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LabeledThresholdGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(u32, u32)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        LabeledThresholdGraph::from_edges(raw.n, &raw.edges)
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Builds the labeled threshold graph of a construction order: each plus
/// entry is added dominant, each minus entry recessive.
pub fn graph_from_construction(order: &SignedPermutation) -> LabeledThresholdGraph {
    graph_from_order_slice(order.entries())
}

pub(crate) fn graph_from_order_slice(entries: &[i32]) -> LabeledThresholdGraph {
    let n = entries.len();
    debug_assert!(n <= 64);
    let mut adj = vec![0u64; n];
    let mut added = 0u64;
    for &e in entries {
        let v = (e.unsigned_abs() - 1) as usize;
        if e > 0 {
            adj[v] |= added;
            let mut bits = added;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                adj[u] |= 1 << v;
                bits &= bits - 1;
            }
        }
        added |= 1 << v;
    }
    LabeledThresholdGraph { n, adj }
}

/// Peels the graph by repeatedly removing a universal or isolated vertex,
/// preferring the candidate of largest label and classifying a vertex that
/// is both (the last one standing) as isolated. Returns the construction
/// that rebuilds the graph front-to-back, or `None` when the peel jams.
fn peel_construction(g: &LabeledThresholdGraph) -> Option<Vec<i32>> {
    let mut remaining: u64 = if g.n == 64 { u64::MAX } else { (1u64 << g.n) - 1 };
    let mut reversed = Vec::with_capacity(g.n);
    while remaining != 0 {
        let mut pick: Option<(usize, bool)> = None;
        let mut bits = remaining;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let neighbors = g.adj[v] & remaining;
            let isolated = neighbors == 0;
            let universal = neighbors == remaining & !(1 << v);
            if isolated || universal {
                // scanning ascending, so a later hit has a larger label
                pick = Some((v, isolated));
            }
        }
        let (v, isolated) = pick?;
        reversed.push(if isolated {
            -(v as i32 + 1)
        } else {
            v as i32 + 1
        });
        remaining &= !(1 << v);
    }
    reversed.reverse();
    Some(reversed)
}

/// True iff iterated removal of universal or isolated vertices empties `g`.
pub fn is_threshold_graph(g: &LabeledThresholdGraph) -> bool {
    peel_construction(g).is_some()
}

/// The unique threshold pair in standard form coding `g`: peel the graph
/// (a removed universal vertex was added dominant, an isolated one
/// recessive), then standardize the resulting construction order.
pub fn canonical_pair(g: &LabeledThresholdGraph) -> Result<ThresholdPair> {
    if g.n < 2 {
        return Err(Error::domain(format!(
            "threshold pairs require n >= 2, got n = {}",
            g.n
        )));
    }
    let order = peel_construction(g).ok_or(Error::NotThresholdGraph)?;
    standardize(&SignedPermutation::new(order).expect("peel yields a signed permutation"))
}

/// One anchor of a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub label: u32,
    pub dominant: bool,
    pub odd: bool,
}

/// The anchors of a construction, ascending by position. The first anchor is
/// always vertex 1; an anchor is odd when its type differs from the previous
/// anchor's (the first is odd when dominant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorReport {
    pub anchors: Vec<Anchor>,
}

impl AnchorReport {
    pub fn odd_count(&self) -> usize {
        self.anchors.iter().filter(|a| a.odd).count()
    }

    pub fn labels(&self) -> Vec<u32> {
        self.anchors.iter().map(|a| a.label).collect()
    }
}

/// Checks the vertex-1 convention for a construction order. `first_block_has_1`
/// tells whether vertex 1 lies in the first block of the graph's canonical
/// pair (for `n = 1` it is trivially true).
fn check_convention(entries: &[i32], first_block_has_1: bool) -> Result<()> {
    if let Some(&first) = entries.first() {
        if first == -1 {
            return Err(Error::Convention(
                "vertex 1 is added first, so it must be recorded dominant".into(),
            ));
        }
        if first_block_has_1 && first.abs() != 1 {
            return Err(Error::Convention(
                "vertex 1 lies in the first block, so it must be the first vertex added".into(),
            ));
        }
    }
    Ok(())
}

fn first_block_has_1(g: &LabeledThresholdGraph) -> Result<bool> {
    if g.n < 2 {
        return Ok(true);
    }
    Ok(canonical_pair(g)?.entries()[0].abs() == 1)
}

/// Marks every suffix-minimum position of the construction as an anchor and
/// flags the odd ones. The vertex-1 convention is verified first; a
/// violation is an error naming the broken clause.
pub fn anchors(order: &SignedPermutation) -> Result<AnchorReport> {
    let entries = order.entries();
    if !entries.is_empty() {
        let g = graph_from_order_slice(entries);
        check_convention(entries, first_block_has_1(&g)?)?;
    }
    let mut positions = Vec::new();
    let mut min = u32::MAX;
    for &e in entries.iter().rev() {
        let m = e.unsigned_abs();
        if m < min {
            positions.push(e);
            min = m;
        }
    }
    positions.reverse();
    let mut list = Vec::with_capacity(positions.len());
    let mut prev: Option<bool> = None;
    for e in positions {
        let dominant = e > 0;
        let odd = match prev {
            None => dominant,
            Some(p) => p != dominant,
        };
        list.push(Anchor {
            label: e.unsigned_abs(),
            dominant,
            odd,
        });
        prev = Some(dominant);
    }
    Ok(AnchorReport { anchors: list })
}

/// Number of odd anchors of a convention-following construction.
pub fn odd_anchor_count(order: &SignedPermutation) -> Result<usize> {
    Ok(anchors(order)?.odd_count())
}

/// Slice-level odd-anchor counter for orders already known to follow the
/// convention; single right-to-left pass.
pub(crate) fn odd_anchor_count_of(entries: &[i32]) -> usize {
    let mut min = u32::MAX;
    let mut flips = 0usize;
    let mut last: Option<bool> = None;
    let mut leftmost_dominant = false;
    for &e in entries.iter().rev() {
        let m = e.unsigned_abs();
        if m < min {
            let dominant = e > 0;
            if let Some(t) = last {
                if t != dominant {
                    flips += 1;
                }
            }
            last = Some(dominant);
            leftmost_dominant = dominant;
            min = m;
        }
    }
    flips + usize::from(last.is_some() && leftmost_dominant)
}

/// Every convention-following signed permutation whose construction
/// reproduces `g` exactly. Exhaustive over all `2^n n!` orders, so intended
/// for small `n` only.
pub fn all_constructions(g: &LabeledThresholdGraph) -> Result<Vec<SignedPermutation>> {
    if !is_threshold_graph(g) {
        return Err(Error::NotThresholdGraph);
    }
    let fb1 = first_block_has_1(g)?;
    let mut out = Vec::new();
    visit_signed(g.n, |entries| {
        if check_convention(entries, fb1).is_ok() && graph_from_order_slice(entries) == *g {
            out.push(SignedPermutation::from_slice(entries).expect("valid entries"));
        }
    });
    Ok(out)
}

/// The canonical convention-following construction of a threshold pair: the
/// pair itself, with a leading 1 recorded dominant.
pub(crate) fn canonical_construction_of_pair(pair: &[i32], out: &mut Vec<i32>) {
    out.clear();
    out.extend_from_slice(pair);
    if out[0] == -1 {
        out[0] = 1;
    }
}

/// Histogram of the odd-anchor statistic over all labeled threshold graphs
/// on `[n]`, each taken with its canonical construction.
pub fn odd_anchor_distribution(n: usize) -> Result<DistributionTable> {
    let tasks = crate::threshold_bijections::pair_task_list(n)?;
    let merged = tasks
        .into_par_iter()
        .map(|(mask, sign)| {
            let mut local = DistributionTable::new("odd-anchors", n);
            let mut scratch = Vec::with_capacity(n);
            crate::threshold_bijections::visit_pairs_in_task(n, mask, sign, &mut |pair| {
                canonical_construction_of_pair(pair, &mut scratch);
                local.record(odd_anchor_count_of(&scratch));
            });
            local
        })
        .reduce(
            || DistributionTable::new("odd-anchors", n),
            |mut a, b| {
                a.merge(b);
                a
            },
        );
    Ok(merged)
}
