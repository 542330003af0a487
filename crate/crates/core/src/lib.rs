//! Exact combinatorics of the threshold arrangement.
//!
//! The library computes the characteristic polynomial of the threshold
//! arrangement (hyperplanes `x_i + x_j = 0`) along three independent routes,
//! walks the chain of bijections between its regions, threshold pairs in
//! standard form, threshold permutations, and labeled threshold graphs, and
//! realizes the polynomial's coefficients as distributions of the odd-cycle
//! and odd-anchor statistics. Everything is exact integer arithmetic; the
//! heavy results are cross-validated by exhaustive enumeration.
//!
//! Module map:
//! - [`exactmath`]: big-integer sequences, polynomials, interpolation
//! - [`signed_permutations`]: the carrier type and signed cycles
//! - [`threshold_bijections`]: pairs, permutations, and the maps between them
//! - [`threshold_graphs`]: constructions, anchors, canonical pairs
//! - [`arrangements`]: finite-field point counts, closed forms, region counts
//! - [`partitions`]: representations, the involution, the special-pair map
//! - [`verify`]: the cross-module invariant suite

pub mod arrangements;
pub mod distribution;
pub mod error;
pub mod exactmath;
pub mod partitions;
pub mod signed_permutations;
pub mod threshold_bijections;
pub mod threshold_graphs;
pub mod verify;

pub use distribution::DistributionTable;
pub use error::{Error, Result};
pub use exactmath::Polynomial;
pub use signed_permutations::{Sign, SignedPermutation};
pub use threshold_bijections::{ThresholdPair, ThresholdPermutation};
pub use threshold_graphs::LabeledThresholdGraph;
