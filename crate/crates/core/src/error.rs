use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared by every module of the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the inputs does not hold. The message names the
    /// violated clause.
    #[error("domain error: {0}")]
    Domain(String),
    /// Interpolation nodes must have pairwise distinct x-values.
    #[error("interpolation nodes must be distinct (x = {0} repeats)")]
    DuplicateNode(BigInt),
    /// The interpolant through the given points is not an integer polynomial.
    /// For characteristic polynomials this signals a wrong sample count or a
    /// bug in point counting.
    #[error("interpolant has a non-integral coefficient at t^{0}")]
    NonIntegralCoefficient(usize),
    /// Finite-field sampling produced values inconsistent with a degree-n
    /// monic integer polynomial.
    #[error("finite-field sampling failed: {0}")]
    Sampling(String),
    /// A construction order breaks the vertex-1 convention. Without the
    /// convention the odd-anchor count is not construction-invariant, so
    /// violations surface loudly instead of being normalized away.
    #[error("convention violation: {0}")]
    Convention(String),
    /// The input graph cannot be emptied by repeatedly deleting universal or
    /// isolated vertices.
    #[error("not a threshold graph")]
    NotThresholdGraph,
    /// An internal cross-check failed; indicates an implementation bug, not
    /// bad input.
    #[error("consistency failure: {0}")]
    Consistency(String),
    /// The part-merging involution is only defined off its fixed set.
    #[error("involution is undefined on standard representations")]
    InvolutionFixedPoint,
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
