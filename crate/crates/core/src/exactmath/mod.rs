//! Exact integer sequences and polynomial arithmetic.
//!
//! Every closed-form count in the library bottoms out here: Stirling numbers
//! of both kinds, Eulerian numbers, ordered Bell numbers, the odd-cycle
//! coefficients `a(n,j)`, and the rising/falling odd products whose
//! coefficients they are. All arithmetic is arbitrary precision; there is no
//! floating point anywhere in the crate.

mod interpolate;
mod polynomial;
mod sequences;

pub use interpolate::lagrange_interpolate;
pub use polynomial::Polynomial;
pub use sequences::{
    binomial, eulerian, factorial, falling_odd_product, odd_cycle_coefficient, ordered_bell,
    rising_odd_product, stirling1_unsigned, stirling2, SequenceKind, SequenceTable,
};
