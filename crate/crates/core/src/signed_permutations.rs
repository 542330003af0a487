//! Signed permutations and their signed-cycle decomposition.
//!
//! A signed permutation is stored as a sequence of nonzero integers whose
//! magnitudes are a permutation of `[n]`; the sign of each entry is the sign
//! assigned to that number. Compartments are cut by the greedy minimum rule:
//! starting from the left boundary, cut immediately after the minimum
//! magnitude of the remaining suffix. Each compartment, read cyclically,
//! is a signed cycle whose arrows carry the sign of the number they point to.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::distribution::DistributionTable;
use crate::error::{Error, Result};

/// Sign assigned to one entry of a signed permutation. `Plus` orders before
/// `Minus`, matching the enumeration contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(value: i32) -> Sign {
        if value < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply(self, magnitude: u32) -> i32 {
        match self {
            Sign::Plus => magnitude as i32,
            Sign::Minus => -(magnitude as i32),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A permutation of `[n]` with a sign per position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    entries: Vec<i32>,
}

impl SignedPermutation {
    /// Validates that magnitudes are exactly `{1, ..., n}`, each once.
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        validate_entries(&entries)?;
        Ok(SignedPermutation { entries })
    }

    pub fn from_slice(entries: &[i32]) -> Result<Self> {
        SignedPermutation::new(entries.to_vec())
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i32> {
        self.entries
    }

    /// Magnitude at 0-based position `i`.
    pub fn magnitude(&self, i: usize) -> u32 {
        self.entries[i].unsigned_abs()
    }

    /// Sign at 0-based position `i`.
    pub fn sign(&self, i: usize) -> Sign {
        Sign::of(self.entries[i])
    }
}

fn validate_entries(entries: &[i32]) -> Result<()> {
    let n = entries.len();
    let mut seen = vec![false; n + 1];
    for &e in entries {
        let m = e.unsigned_abs() as usize;
        if m == 0 || m > n {
            return Err(Error::domain(format!(
                "entry {e} is not a signed element of [{n}]"
            )));
        }
        if seen[m] {
            return Err(Error::domain(format!("magnitude {m} appears twice")));
        }
        seen[m] = true;
    }
    Ok(())
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_entries(f, &self.entries)
    }
}

pub(crate) fn write_signed_entries(f: &mut fmt::Formatter<'_>, entries: &[i32]) -> fmt::Result {
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{}{}", Sign::of(*e), e.abs())?;
    }
    Ok(())
}

/// Serialized as the plain sequence of signed integers, e.g.
/// `[-2,-3,5,-1,4,-6]`.
impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<i32>::deserialize(deserializer)?;
        SignedPermutation::new(entries).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// One compartment read as a cycle. The stored order is the compartment
/// order; arrows run from each entry to the next (cyclically), and the arrow
/// into a number carries that number's sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCycle {
    entries: Vec<i32>,
}

/// An arrow of a signed cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub from: u32,
    pub to: u32,
    pub sign: Sign,
}

impl SignedCycle {
    pub fn new(entries: Vec<i32>) -> Self {
        SignedCycle { entries }
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn min_magnitude(&self) -> Option<u32> {
        self.entries.iter().map(|e| e.unsigned_abs()).min()
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        let k = self.entries.len();
        (0..k)
            .map(|i| {
                let to = self.entries[(i + 1) % k];
                Arrow {
                    from: self.entries[i].unsigned_abs(),
                    to: to.unsigned_abs(),
                    sign: Sign::of(to),
                }
            })
            .collect()
    }

    pub fn negative_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e < 0).count()
    }

    /// A cycle is odd when an odd number of its arrows carry a minus sign.
    pub fn is_odd(&self) -> bool {
        self.negative_count() % 2 == 1
    }
}

/// The full compartment decomposition of a signed permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleStructure {
    cycles: Vec<SignedCycle>,
}

impl CycleStructure {
    pub fn new(cycles: Vec<SignedCycle>) -> Self {
        CycleStructure { cycles }
    }

    pub fn cycles(&self) -> &[SignedCycle] {
        &self.cycles
    }

    pub fn odd_cycle_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.is_odd()).count()
    }
}

/// Positions (0-based, in ascending order) after which a compartment line is
/// drawn: exactly the strict right-to-left minima of the magnitude sequence.
pub(crate) fn compartment_ends(entries: &[i32]) -> Vec<usize> {
    let mut ends = Vec::new();
    let mut min = u32::MAX;
    for (i, &e) in entries.iter().enumerate().rev() {
        let m = e.unsigned_abs();
        if m < min {
            ends.push(i);
            min = m;
        }
    }
    ends.reverse();
    ends
}

/// Splits a signed permutation into its signed cycles by the greedy minimum
/// rule.
pub fn compartmentalize(sp: &SignedPermutation) -> CycleStructure {
    let entries = sp.entries();
    let mut cycles = Vec::new();
    let mut start = 0;
    for end in compartment_ends(entries) {
        cycles.push(SignedCycle::new(entries[start..=end].to_vec()));
        start = end + 1;
    }
    CycleStructure::new(cycles)
}

/// Number of compartments containing an odd count of negative entries.
pub fn odd_cycle_count(sp: &SignedPermutation) -> usize {
    odd_cycle_count_of(sp.entries())
}

/// Slice-level odd-cycle counter; single right-to-left pass, no allocation.
pub(crate) fn odd_cycle_count_of(entries: &[i32]) -> usize {
    let mut min = u32::MAX;
    let mut negatives = 0usize;
    let mut odd = 0usize;
    let mut open = false;
    for &e in entries.iter().rev() {
        let m = e.unsigned_abs();
        if m < min {
            // a compartment ends here; the one walked so far is complete
            if open && negatives % 2 == 1 {
                odd += 1;
            }
            negatives = 0;
            open = true;
            min = m;
        }
        if e < 0 {
            negatives += 1;
        }
    }
    if open && negatives % 2 == 1 {
        odd += 1;
    }
    odd
}

/// Reconstructs the unique signed permutation with the given cycle structure:
/// cycles are processed in increasing order of their minima, each written
/// starting from the number its minimum points to and ending with the
/// minimum.
pub fn permutation_from_cycles(cs: &CycleStructure) -> Result<SignedPermutation> {
    let total: usize = cs.cycles().iter().map(|c| c.entries().len()).sum();
    let mut seen = vec![false; total + 1];
    for cycle in cs.cycles() {
        if cycle.entries().is_empty() {
            return Err(Error::domain("cycle structure contains an empty cycle"));
        }
        for &e in cycle.entries() {
            let m = e.unsigned_abs() as usize;
            if m == 0 || m > total {
                return Err(Error::domain(format!(
                    "cycle supports must cover [{total}], found {e}"
                )));
            }
            if seen[m] {
                return Err(Error::domain(format!(
                    "cycle supports are not disjoint: {m} repeats"
                )));
            }
            seen[m] = true;
        }
    }

    let mut ordered: Vec<&SignedCycle> = cs.cycles().iter().collect();
    ordered.sort_by_key(|c| c.min_magnitude());
    let mut entries = Vec::with_capacity(total);
    for cycle in ordered {
        let min = cycle.min_magnitude().expect("nonempty cycle");
        let pos = cycle
            .entries()
            .iter()
            .position(|e| e.unsigned_abs() == min)
            .expect("minimum present");
        let k = cycle.entries().len();
        for offset in 1..=k {
            entries.push(cycle.entries()[(pos + offset) % k]);
        }
    }
    SignedPermutation::new(entries)
}

fn next_permutation(values: &mut [i32]) -> bool {
    if values.len() < 2 {
        return false;
    }
    let mut i = values.len() - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = values.len() - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// Visits all `2^n * n!` signed permutations of `[n]` in the canonical order:
/// lexicographic by magnitude sequence, then by sign pattern with `+` before
/// `-`. The buffer is reused between calls.
pub fn visit_signed(n: usize, mut f: impl FnMut(&[i32])) {
    assert!(n < 32, "signed enumeration is exhaustive; n must be small");
    let mut mags: Vec<i32> = (1..=n as i32).collect();
    let mut buf = vec![0i32; n];
    loop {
        for mask in 0..(1u64 << n) {
            for i in 0..n {
                let m = mags[i];
                buf[i] = if (mask >> (n - 1 - i)) & 1 == 1 { -m } else { m };
            }
            f(&buf);
        }
        if !next_permutation(&mut mags) {
            break;
        }
    }
}

/// Visits the signed permutations whose first entry is exactly `first`,
/// in the same relative order as [`visit_signed`]. This is the splitting
/// hook for parallel consumption.
pub fn visit_signed_with_first(n: usize, first: i32, mut f: impl FnMut(&[i32])) {
    assert!(n >= 1 && n < 32);
    let fm = first.unsigned_abs() as i32;
    assert!(fm >= 1 && fm <= n as i32);
    let rest = n - 1;
    let mut mags: Vec<i32> = (1..=n as i32).filter(|&m| m != fm).collect();
    let mut buf = vec![0i32; n];
    buf[0] = first;
    loop {
        for mask in 0..(1u64 << rest) {
            for i in 0..rest {
                let m = mags[i];
                buf[i + 1] = if (mask >> (rest - 1 - i)) & 1 == 1 { -m } else { m };
            }
            f(&buf);
        }
        if !next_permutation(&mut mags) {
            break;
        }
    }
}

/// All signed permutations of `[n]` in the canonical order.
pub fn enumerate_signed(n: usize) -> impl Iterator<Item = SignedPermutation> {
    let mut all = Vec::new();
    visit_signed(n, |entries| {
        all.push(SignedPermutation {
            entries: entries.to_vec(),
        })
    });
    all.into_iter()
}

/// True when every positively-signed entry at position `i >= 2` exceeds the
/// magnitude before it; position 1 is unconstrained.
pub fn is_normal(sp: &SignedPermutation) -> bool {
    is_normal_slice(sp.entries())
}

pub(crate) fn is_normal_slice(entries: &[i32]) -> bool {
    entries
        .windows(2)
        .all(|w| w[1] < 0 || w[1] > w[0].abs())
}

/// The normal permutations of `[n]`, in enumeration order.
pub fn enumerate_normal(n: usize) -> impl Iterator<Item = SignedPermutation> {
    enumerate_signed(n).filter(is_normal)
}

/// Exact histogram of the odd-cycle statistic over a stream of signed
/// permutations.
pub fn odd_cycle_distribution<I>(n: usize, perms: I) -> DistributionTable
where
    I: IntoIterator<Item = SignedPermutation>,
{
    let mut table = DistributionTable::new("odd-cycles", n);
    for sp in perms {
        table.record(odd_cycle_count(&sp));
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(entries: &[i32]) -> SignedPermutation {
        SignedPermutation::from_slice(entries).unwrap()
    }

    #[test]
    fn validation_rejects_bad_entries() {
        assert!(SignedPermutation::new(vec![1, 0]).is_err());
        assert!(SignedPermutation::new(vec![1, 3]).is_err());
        assert!(SignedPermutation::new(vec![1, -1]).is_err());
        assert!(SignedPermutation::new(vec![]).is_ok());
    }

    #[test]
    fn compartments_follow_the_minimum_rule() {
        // worked decomposition of +3 +1 -6 -7 -5 +2 -4
        let cs = compartmentalize(&sp(&[3, 1, -6, -7, -5, 2, -4]));
        let parts: Vec<&[i32]> = cs.cycles().iter().map(|c| c.entries()).collect();
        assert_eq!(parts, vec![&[3, 1][..], &[-6, -7, -5, 2][..], &[-4][..]]);

        let cs = compartmentalize(&sp(&[-2, -3, 5, -1, 4, -6]));
        let parts: Vec<&[i32]> = cs.cycles().iter().map(|c| c.entries()).collect();
        assert_eq!(parts, vec![&[-2, -3, 5, -1][..], &[4][..], &[-6][..]]);

        // ascending identity: every element is a suffix minimum
        let cs = compartmentalize(&sp(&[1, 2, 3, 4]));
        assert_eq!(cs.cycles().len(), 4);
    }

    #[test]
    fn arrows_carry_target_signs() {
        let cs = compartmentalize(&sp(&[3, 1, -6, -7, -5, 2, -4]));
        let arrows = cs.cycles()[1].arrows();
        assert_eq!(
            arrows,
            vec![
                Arrow { from: 6, to: 7, sign: Sign::Minus },
                Arrow { from: 7, to: 5, sign: Sign::Minus },
                Arrow { from: 5, to: 2, sign: Sign::Plus },
                Arrow { from: 2, to: 6, sign: Sign::Minus },
            ]
        );
        // self loop on the singleton -4
        assert_eq!(
            cs.cycles()[2].arrows(),
            vec![Arrow { from: 4, to: 4, sign: Sign::Minus }]
        );
    }

    #[test]
    fn odd_cycle_counts() {
        assert_eq!(odd_cycle_count(&sp(&[3, 1, -6, -7, -5, 2, -4])), 2);
        assert_eq!(odd_cycle_count(&sp(&[-1, -2])), 2);
        assert_eq!(odd_cycle_count(&sp(&[2, -3, -1])), 0);
        assert_eq!(odd_cycle_count(&sp(&[])), 0);
    }

    #[test]
    fn cycle_round_trip() {
        let original = sp(&[3, 1, -6, -7, -5, 2, -4]);
        let back = permutation_from_cycles(&compartmentalize(&original)).unwrap();
        assert_eq!(back, original);

        let single = CycleStructure::new(vec![SignedCycle::new(vec![1])]);
        assert_eq!(permutation_from_cycles(&single).unwrap(), sp(&[1]));
    }

    #[test]
    fn malformed_cycles_rejected() {
        let overlapping = CycleStructure::new(vec![
            SignedCycle::new(vec![1, 2]),
            SignedCycle::new(vec![2]),
        ]);
        assert!(permutation_from_cycles(&overlapping).is_err());
        let gap = CycleStructure::new(vec![SignedCycle::new(vec![1, 3])]);
        assert!(permutation_from_cycles(&gap).is_err());
        let empty_cycle = CycleStructure::new(vec![SignedCycle::new(vec![])]);
        assert!(permutation_from_cycles(&empty_cycle).is_err());
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_signed(0).count(), 1);
        let one: Vec<_> = enumerate_signed(1).collect();
        assert_eq!(one, vec![sp(&[1]), sp(&[-1])]);
        let two: Vec<_> = enumerate_signed(2).collect();
        assert_eq!(two.len(), 8);
        assert_eq!(two[0], sp(&[1, 2]));
        assert_eq!(enumerate_signed(5).count(), 3840);
    }

    #[test]
    fn prefix_split_covers_the_stream() {
        let mut whole: Vec<Vec<i32>> = Vec::new();
        visit_signed(3, |e| whole.push(e.to_vec()));
        let mut split: Vec<Vec<i32>> = Vec::new();
        for mag in 1..=3 {
            for first in [mag, -mag] {
                visit_signed_with_first(3, first, |e| split.push(e.to_vec()));
            }
        }
        split.sort();
        whole.sort();
        assert_eq!(split, whole);
    }

    #[test]
    fn normality() {
        assert!(is_normal(&sp(&[-3, -1, 5, 7, -2, 4, 6])));
        assert!(!is_normal(&sp(&[-3, 7, 1, -5, -4, 6, -2])));
        assert!(is_normal(&sp(&[1])));
        let normals: Vec<_> = enumerate_normal(2).collect();
        let expected = [
            sp(&[1, 2]),
            sp(&[1, -2]),
            sp(&[-1, 2]),
            sp(&[-1, -2]),
            sp(&[2, -1]),
            sp(&[-2, -1]),
        ];
        assert_eq!(normals.len(), 6);
        for e in &expected {
            assert!(normals.contains(e));
        }
        assert_eq!(enumerate_normal(1).count(), 2);
    }

    #[test]
    fn distribution_over_streams() {
        use num_bigint::BigInt;
        let all2 = odd_cycle_distribution(2, enumerate_signed(2));
        assert_eq!(all2.get(0), BigInt::from(3));
        assert_eq!(all2.get(1), BigInt::from(4));
        assert_eq!(all2.get(2), BigInt::from(1));

        let all1 = odd_cycle_distribution(1, enumerate_signed(1));
        assert_eq!(all1.get(0), BigInt::from(1));
        assert_eq!(all1.get(1), BigInt::from(1));

        let normal2 = odd_cycle_distribution(2, enumerate_normal(2));
        assert_eq!(normal2.get(0), BigInt::from(2));
        assert_eq!(normal2.get(1), BigInt::from(3));
        assert_eq!(normal2.get(2), BigInt::from(1));
    }
}
