use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::polynomial::Polynomial;

/// The integer families cached by [`SequenceTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// Stirling numbers of the second kind `S(n,k)`.
    Stirling2,
    /// Unsigned Stirling numbers of the first kind `c(n,k)` (permutations of
    /// `[n]` with `k` cycles).
    Stirling1Unsigned,
    /// Eulerian numbers `A(n,k)` (permutations of `[n]` with `k` descents).
    Eulerian,
    /// Ordered Bell numbers (counts of ordered set partitions).
    OrderedBell,
    /// Counts of signed permutations of `[n]` with `j` odd cycles; also the
    /// coefficients of `(t+1)(t+3)...(t+(2n-1))`.
    OddCycle,
}

/// Memoized per-process triangle of exact integers, filled row by row from
/// the defining recurrence. Safe for concurrent readers; concurrent fills
/// write identical rows, so last-write-wins is harmless.
pub struct SequenceTable {
    kind: SequenceKind,
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl SequenceTable {
    pub const fn new(kind: SequenceKind) -> Self {
        SequenceTable {
            kind,
            rows: RwLock::new(Vec::new()),
        }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    /// Entry `(n, k)` of the triangle; `None` outside the triangle's support.
    /// One-dimensional kinds (ordered Bell) use `k = 0`.
    pub fn value(&self, n: usize, k: usize) -> Option<BigInt> {
        {
            let rows = self.rows.read().expect("sequence cache poisoned");
            if let Some(row) = rows.get(n) {
                return row.get(k).cloned();
            }
        }
        let mut rows = self.rows.write().expect("sequence cache poisoned");
        while rows.len() <= n {
            let next = self.next_row(&rows);
            rows.push(next);
        }
        rows[n].get(k).cloned()
    }

    fn next_row(&self, rows: &[Vec<BigInt>]) -> Vec<BigInt> {
        let n = rows.len();
        if n == 0 {
            // Row 0 of each triangle is the single entry for the empty object.
            return vec![BigInt::one()];
        }
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(BigInt::zero);
        match self.kind {
            // S(n,k) = k*S(n-1,k) + S(n-1,k-1)
            SequenceKind::Stirling2 => (0..=n)
                .map(|k| {
                    let mut v = at(k) * BigInt::from(k);
                    if k > 0 {
                        v += at(k - 1);
                    }
                    v
                })
                .collect(),
            // c(n,k) = (n-1)*c(n-1,k) + c(n-1,k-1)
            SequenceKind::Stirling1Unsigned => (0..=n)
                .map(|k| {
                    let mut v = at(k) * BigInt::from(n - 1);
                    if k > 0 {
                        v += at(k - 1);
                    }
                    v
                })
                .collect(),
            // A(n,k) = (k+1)*A(n-1,k) + (n-k)*A(n-1,k-1), row n has entries 0..n-1
            SequenceKind::Eulerian => {
                let top = if n == 1 { 0 } else { n - 1 };
                (0..=top)
                    .map(|k| {
                        let mut v = at(k) * BigInt::from(k + 1);
                        if k > 0 {
                            v += at(k - 1) * BigInt::from(n - k);
                        }
                        v
                    })
                    .collect()
            }
            // a(n) = sum_k k! * S(n,k)
            SequenceKind::OrderedBell => {
                let mut total = BigInt::zero();
                let mut kfact = BigInt::one();
                for k in 1..=n {
                    kfact *= BigInt::from(k);
                    total += &kfact * stirling2_unchecked(n, k);
                }
                vec![total]
            }
            // a(n,j) = (2n-1)*a(n-1,j) + a(n-1,j-1)
            SequenceKind::OddCycle => (0..=n)
                .map(|j| {
                    let mut v = at(j) * BigInt::from(2 * n - 1);
                    if j > 0 {
                        v += at(j - 1);
                    }
                    v
                })
                .collect(),
        }
    }
}

static STIRLING2: SequenceTable = SequenceTable::new(SequenceKind::Stirling2);
static STIRLING1: SequenceTable = SequenceTable::new(SequenceKind::Stirling1Unsigned);
static EULERIAN: SequenceTable = SequenceTable::new(SequenceKind::Eulerian);
static ORDERED_BELL: SequenceTable = SequenceTable::new(SequenceKind::OrderedBell);
static ODD_CYCLE: SequenceTable = SequenceTable::new(SequenceKind::OddCycle);

fn stirling2_unchecked(n: usize, k: usize) -> BigInt {
    STIRLING2.value(n, k).unwrap_or_else(BigInt::zero)
}

/// `S(n,k)`, the number of partitions of an `n`-set into `k` blocks.
pub fn stirling2(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::domain(format!("stirling2 requires k <= n, got ({n}, {k})")));
    }
    Ok(stirling2_unchecked(n, k))
}

/// `c(n,k)`, the number of permutations of `[n]` with `k` cycles.
pub fn stirling1_unsigned(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::domain(format!(
            "stirling1_unsigned requires k <= n, got ({n}, {k})"
        )));
    }
    Ok(STIRLING1.value(n, k).unwrap_or_else(BigInt::zero))
}

/// `A(n,k)`, the number of permutations of `[n]` with `k` descents.
pub fn eulerian(n: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k + 1 > n {
        return Err(Error::domain(format!(
            "eulerian requires n >= 1 and 0 <= k <= n-1, got ({n}, {k})"
        )));
    }
    Ok(EULERIAN.value(n, k).unwrap_or_else(BigInt::zero))
}

/// The `n`-th ordered Bell number, the count of ordered set partitions of `[n]`.
pub fn ordered_bell(n: usize) -> BigInt {
    ORDERED_BELL.value(n, 0).unwrap_or_else(BigInt::zero)
}

/// Number of signed permutations of `[n]` with exactly `j` odd cycles;
/// equals the coefficient of `t^j` in `(t+1)(t+3)...(t+(2n-1))` and
/// `sum_i c(n,i) * C(i,j) * 2^(n-i)`.
pub fn odd_cycle_coefficient(n: usize, j: usize) -> Result<BigInt> {
    if j > n {
        return Err(Error::domain(format!(
            "odd_cycle_coefficient requires j <= n, got ({n}, {j})"
        )));
    }
    Ok(ODD_CYCLE.value(n, j).unwrap_or_else(BigInt::zero))
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// `(t+1)(t+3)...(t+(2k-1))`; its coefficients are [`odd_cycle_coefficient`].
pub fn rising_odd_product(k: usize) -> Polynomial {
    Polynomial::linear_product((1..=k).map(|i| BigInt::from(2 * i - 1)))
}

/// `(t-1)(t-3)...(t-(2k-1))`.
pub fn falling_odd_product(k: usize) -> Polynomial {
    Polynomial::linear_product((1..=k).map(|i| -BigInt::from(2 * i - 1)))
}
