use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::polynomial::Polynomial;

/// Exact Lagrange interpolation through the given `(x, y)` points.
///
/// Intermediate arithmetic is rational; the final coefficients must reduce to
/// integers, otherwise the routine reports which coefficient failed. The
/// integrality check is what turns "sample at large enough q" into a
/// runtime-detectable contract for characteristic polynomials.
pub fn lagrange_interpolate(points: &[(BigInt, BigInt)]) -> Result<Polynomial> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[i + 1..].iter().any(|(other, _)| other == x) {
            return Err(Error::DuplicateNode(x.clone()));
        }
    }
    if points.is_empty() {
        return Ok(Polynomial::zero());
    }

    // Newton's divided differences, then expansion into the monomial basis.
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer(x.clone()))
        .collect();
    let mut diffs: Vec<BigRational> = points
        .iter()
        .map(|(_, y)| BigRational::from_integer(y.clone()))
        .collect();
    let mut leading: Vec<BigRational> = vec![diffs[0].clone()];
    for level in 1..points.len() {
        for i in (level..points.len()).rev() {
            let num = &diffs[i] - &diffs[i - 1];
            let den = &xs[i] - &xs[i - level];
            diffs[i] = num / den;
        }
        leading.push(diffs[level].clone());
    }

    // poly = sum_k leading[k] * prod_{i<k} (t - x_i)
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); points.len()];
    let mut basis: Vec<BigRational> = vec![BigRational::one()];
    for (k, c) in leading.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += c * b;
        }
        if k + 1 < points.len() {
            // basis *= (t - x_k)
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i] -= b * &xs[k];
                next[i + 1] += b;
            }
            basis = next;
        }
    }

    let mut out = Vec::with_capacity(coeffs.len());
    for (i, c) in coeffs.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::NonIntegralCoefficient(i));
        }
        out.push(c.to_integer());
    }
    Ok(Polynomial::new(out))
}
