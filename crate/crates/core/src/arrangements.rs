//! The threshold and type-B arrangements: finite-field point counting,
//! interpolation to the characteristic polynomial, the closed forms, region
//! counts, and the region-to-graph sign-vector dictionary.
//!
//! A region is always identified with its threshold pair; nothing geometric
//! is ever materialized. Point counting runs on two independent routes
//! (brute force over tuples, and the combinatorial count for the threshold
//! family) that are cross-checked wherever both are feasible.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, eulerian, factorial, falling_odd_product, lagrange_interpolate,
    odd_cycle_coefficient, ordered_bell, stirling2, Polynomial,
};
use crate::signed_permutations::{Sign, SignedPermutation};
use crate::threshold_bijections::ThresholdPair;
use crate::threshold_graphs::graph_from_construction;

/// Upper bound on `n * q^n` for the brute-force point counter.
const BRUTE_FORCE_BUDGET: u128 = 100_000_000;

/// A linear form with at most two nonzero coefficients, both in `{-1, +1}`.
/// Coordinates are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    terms: Vec<(usize, i8)>,
}

impl LinearForm {
    fn new(terms: Vec<(usize, i8)>) -> Self {
        debug_assert!(terms.len() <= 2);
        debug_assert!(terms.iter().all(|&(_, c)| c == 1 || c == -1));
        LinearForm { terms }
    }

    pub fn terms(&self) -> &[(usize, i8)] {
        &self.terms
    }

    /// True when the form vanishes at the tuple, mod `q`.
    fn vanishes(&self, tuple: &[u64], q: u64) -> bool {
        let mut acc = 0u64;
        for &(i, c) in &self.terms {
            let v = tuple[i];
            acc += if c == 1 { v } else { (q - v) % q };
        }
        acc % q == 0
    }
}

/// Which of the two supported hyperplane families an instance belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrangementKind {
    /// `x_i + x_j = 0` for `1 <= i < j <= n`.
    Threshold,
    /// `x_i +- x_j = 0` together with `x_i = 0`.
    TypeB,
}

/// A hyperplane arrangement in `R^n`, restricted to the sub-arrangements of
/// type B used by the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    kind: ArrangementKind,
    forms: Vec<LinearForm>,
}

impl Arrangement {
    /// The threshold arrangement on `n` coordinates.
    pub fn threshold(n: usize) -> Arrangement {
        let mut forms = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                forms.push(LinearForm::new(vec![(i, 1), (j, 1)]));
            }
        }
        Arrangement {
            n,
            kind: ArrangementKind::Threshold,
            forms,
        }
    }

    /// The type-B arrangement on `n` coordinates.
    pub fn type_b(n: usize) -> Arrangement {
        let mut forms = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                forms.push(LinearForm::new(vec![(i, 1), (j, 1)]));
                forms.push(LinearForm::new(vec![(i, 1), (j, -1)]));
            }
        }
        for i in 0..n {
            forms.push(LinearForm::new(vec![(i, 1)]));
        }
        Arrangement {
            n,
            kind: ArrangementKind::TypeB,
            forms,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ArrangementKind {
        self.kind
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }
}

/// One finite-field sample: the modulus and the exact number of tuples in
/// `Z_q^n` avoiding every reduced hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFieldSample {
    pub q: u64,
    pub count: BigInt,
}

impl FiniteFieldSample {
    pub fn csv_header() -> &'static str {
        "q,count"
    }

    pub fn to_csv_row(&self) -> String {
        format!("{},{}", self.q, self.count)
    }
}

fn require_odd_modulus(q: u64) -> Result<()> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::domain(format!(
            "the finite field method requires an odd modulus q >= 3, got {q}"
        )));
    }
    Ok(())
}

fn checked_power(q: u64, n: usize) -> u128 {
    (q as u128).pow(n as u32)
}

/// Exact count of tuples off every hyperplane, by direct iteration over all
/// `q^n` tuples. Feasible only for `n * q^n` up to about 10^8; partitioned
/// over the leading coordinate for parallel summation.
pub fn count_points_brute_force(a: &Arrangement, q: u64) -> Result<FiniteFieldSample> {
    require_odd_modulus(q)?;
    let n = a.n;
    if n == 0 {
        return Ok(FiniteFieldSample {
            q,
            count: BigInt::one(),
        });
    }
    let total: u64 = (0..q)
        .into_par_iter()
        .map(|first| {
            let mut tuple = vec![0u64; n];
            tuple[0] = first;
            let mut count = 0u64;
            loop {
                if a.forms.iter().all(|f| !f.vanishes(&tuple, q)) {
                    count += 1;
                }
                // odometer over coordinates 1..n
                let mut pos = n - 1;
                loop {
                    if pos == 0 {
                        return count;
                    }
                    tuple[pos] += 1;
                    if tuple[pos] < q {
                        break;
                    }
                    tuple[pos] = 0;
                    pos -= 1;
                }
            }
        })
        .sum();
    Ok(FiniteFieldSample {
        q,
        count: BigInt::from(total),
    })
}

/// Exact count for the threshold arrangement from the surjection argument:
/// a tuple avoids every hyperplane iff at most one coordinate is zero and at
/// most one value is taken from each pair `{c, -c}`.
pub fn count_points_threshold_combinatorial(n: usize, q: u64) -> Result<FiniteFieldSample> {
    require_odd_modulus(q)?;
    let half = ((q - 1) / 2) as usize;
    let mut count = BigInt::zero();
    for k in 0..=n {
        count += binomial(half, k)
            * BigInt::from(2u32).pow(k as u32)
            * factorial(k)
            * stirling2(n, k)?;
    }
    if n >= 1 {
        let mut zero_hit = BigInt::zero();
        for k in 0..=n - 1 {
            zero_hit += binomial(half, k)
                * BigInt::from(2u32).pow(k as u32)
                * factorial(k)
                * stirling2(n - 1, k)?;
        }
        count += BigInt::from(n) * zero_hit;
    }
    Ok(FiniteFieldSample { q, count })
}

/// Point count dispatcher: brute force within its budget, the combinatorial
/// route for larger threshold instances.
pub fn count_points_mod_q(a: &Arrangement, q: u64) -> Result<FiniteFieldSample> {
    require_odd_modulus(q)?;
    if (a.n as u128).max(1) * checked_power(q, a.n) <= BRUTE_FORCE_BUDGET {
        return count_points_brute_force(a, q);
    }
    match a.kind {
        ArrangementKind::Threshold => count_points_threshold_combinatorial(a.n, q),
        ArrangementKind::TypeB => Err(Error::Sampling(format!(
            "type-B point counting at n = {}, q = {q} exceeds the brute-force budget",
            a.n
        ))),
    }
}

/// Characteristic polynomial via the finite field method: sample the point
/// count at the `n + 1` smallest odd moduli above `2n`, interpolate exactly,
/// then insist on degree `n`, a unit leading coefficient, and agreement with
/// two additional held-out samples. The held-out check turns the theorem's
/// unquantified "large enough q" into a detectable failure.
pub fn charpoly_finite_field(a: &Arrangement) -> Result<Polynomial> {
    let n = a.n;
    if n == 0 {
        return Err(Error::domain(
            "characteristic polynomials are computed for n >= 1",
        ));
    }
    let moduli: Vec<u64> = (0..n + 3).map(|i| 2 * n as u64 + 1 + 2 * i as u64).collect();
    let samples = moduli
        .iter()
        .map(|&q| count_points_mod_q(a, q))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(BigInt, BigInt)> = samples
        .iter()
        .take(n + 1)
        .map(|s| (BigInt::from(s.q), s.count.clone()))
        .collect();
    let poly = lagrange_interpolate(&points)?;
    if poly.degree() != Some(n) {
        return Err(Error::Sampling(format!(
            "interpolant has degree {:?}, expected {n}",
            poly.degree()
        )));
    }
    if !poly.leading_coeff().is_some_and(One::is_one) {
        return Err(Error::Sampling("interpolant is not monic".into()));
    }
    for sample in &samples[n + 1..] {
        if poly.eval(&BigInt::from(sample.q)) != sample.count {
            return Err(Error::Sampling(format!(
                "held-out sample at q = {} disagrees with the interpolant",
                sample.q
            )));
        }
    }
    Ok(poly)
}

/// Closed form for the characteristic polynomial of the threshold
/// arrangement:
/// `sum_k (S(n,k) + n*S(n-1,k)) * (t-1)(t-3)...(t-(2k-1))`.
///
/// The sum starts at `k = 0`; the extra term vanishes for `n >= 2` and makes
/// `n = 1` come out as `t`, matching the finite-field route.
pub fn charpoly_threshold_formula(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::domain(
            "the threshold closed form is defined for n >= 1",
        ));
    }
    let mut acc = Polynomial::zero();
    for k in 0..=n {
        let weight = stirling2(n, k)? + BigInt::from(n) * stirling2_or_zero(n - 1, k);
        if weight.is_zero() {
            continue;
        }
        acc = &acc + &falling_odd_product(k).scale(&weight);
    }
    Ok(acc)
}

fn stirling2_or_zero(n: usize, k: usize) -> BigInt {
    stirling2(n, k).unwrap_or_else(|_| BigInt::zero())
}

/// Signed coefficient of `t^j` in the threshold characteristic polynomial:
/// `sum_{k=j}^n (-1)^(k-j) (S(n,k) + n*S(n-1,k)) * a(k,j)`.
pub fn threshold_coefficient(n: usize, j: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::domain(
            "the threshold closed form is defined for n >= 1",
        ));
    }
    if j > n {
        return Err(Error::domain(format!(
            "coefficient index j = {j} exceeds the degree n = {n}"
        )));
    }
    let mut acc = BigInt::zero();
    for k in j..=n {
        let weight = stirling2(n, k)? + BigInt::from(n) * stirling2_or_zero(n - 1, k);
        let term = weight * odd_cycle_coefficient(k, j)?;
        if (k - j) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Zaslavsky's region count `(-1)^n p(-1)`, the sum of unsigned
/// coefficients.
pub fn region_count(p: &Polynomial) -> BigInt {
    let value = p.eval(&BigInt::from(-1));
    match p.degree() {
        Some(d) if d % 2 == 1 => -value,
        _ => value,
    }
}

/// Both closed forms for the number of threshold regions:
/// `2(a(n) - n*a(n-1))` with ordered Bell numbers, and
/// `sum_k 2^k (n-k) A(n-1, k-1)` with Eulerian numbers.
pub fn region_count_identities(n: usize) -> Result<(BigInt, BigInt)> {
    if n < 2 {
        return Err(Error::domain(format!(
            "the region-count identities require n >= 2, got {n}"
        )));
    }
    let bell_form = BigInt::from(2) * (ordered_bell(n) - BigInt::from(n) * ordered_bell(n - 1));
    let mut eulerian_form = BigInt::zero();
    for k in 1..n {
        eulerian_form +=
            BigInt::from(2u32).pow(k as u32) * BigInt::from(n - k) * eulerian(n - 1, k - 1)?;
    }
    Ok((bell_form, eulerian_form))
}

/// The sign of `x_i + x_j` on the region of a threshold pair, for every
/// `i < j`: plus iff both labels appear positive, or exactly one is negative
/// and it appears before the other. Any signed permutation is accepted; the
/// rule depends only on the region sample point it describes.
///
/// The rule is re-verified against the representative point whose coordinate
/// at the label in position `i` is that position's sign times `i`; any
/// mismatch is reported as an internal consistency error.
pub fn region_sign_vector(sp: &SignedPermutation) -> Result<BTreeMap<(u32, u32), Sign>> {
    let entries = sp.entries();
    let n = entries.len();
    let mut position = vec![0usize; n + 1];
    let mut coordinate = vec![0i64; n + 1];
    for (pos, &e) in entries.iter().enumerate() {
        let label = e.unsigned_abs() as usize;
        position[label] = pos;
        coordinate[label] = if e > 0 {
            pos as i64 + 1
        } else {
            -(pos as i64 + 1)
        };
    }
    let mut out = BTreeMap::new();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            let (pi, pj) = (position[i as usize], position[j as usize]);
            let (ni, nj) = (entries[pi] < 0, entries[pj] < 0);
            let sign = match (ni, nj) {
                (false, false) => Sign::Plus,
                (true, false) if pi < pj => Sign::Plus,
                (false, true) if pj < pi => Sign::Plus,
                _ => Sign::Minus,
            };
            let sum = coordinate[i as usize] + coordinate[j as usize];
            let point_sign = if sum > 0 { Sign::Plus } else { Sign::Minus };
            if sum == 0 || point_sign != sign {
                return Err(Error::Consistency(format!(
                    "representative point disagrees with the sign rule on pair ({i},{j})"
                )));
            }
            out.insert((i, j), sign);
        }
    }
    Ok(out)
}

/// True iff the positive pairs of the region sign vector are exactly the
/// edges of the pair's threshold graph.
pub fn edge_rule_check(tp: &ThresholdPair) -> Result<bool> {
    let positive: Vec<(u32, u32)> = region_sign_vector(tp.as_perm())?
        .into_iter()
        .filter(|&(_, s)| s == Sign::Plus)
        .map(|(e, _)| e)
        .collect();
    let graph = graph_from_construction(tp.as_perm());
    Ok(positive == graph.edges())
}
