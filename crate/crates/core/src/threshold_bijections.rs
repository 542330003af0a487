//! Threshold pairs in standard form, threshold permutations, and the
//! translation maps between them.
//!
//! A threshold pair codes a labeled threshold graph: its first two signs
//! agree and same-sign neighbors ascend. A threshold permutation is the
//! alternative code word for the same graph, characterized by four sign and
//! order conditions. Both live on top of [`SignedPermutation`].

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::distribution::DistributionTable;
use crate::error::{Error, Result};
use crate::signed_permutations::{is_normal_slice, odd_cycle_count_of, Sign, SignedPermutation};

/// A signed permutation in threshold standard form: the first two signs
/// agree, and whenever consecutive entries share a sign their magnitudes
/// ascend. Requires `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThresholdPair(SignedPermutation);

impl ThresholdPair {
    pub fn new(sp: SignedPermutation) -> Result<Self> {
        match check_threshold_pair(sp.entries()) {
            Ok(()) => Ok(ThresholdPair(sp)),
            Err(clause) => Err(Error::domain(clause)),
        }
    }

    pub fn from_slice(entries: &[i32]) -> Result<Self> {
        ThresholdPair::new(SignedPermutation::from_slice(entries)?)
    }

    pub fn as_perm(&self) -> &SignedPermutation {
        &self.0
    }

    pub fn into_perm(self) -> SignedPermutation {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn entries(&self) -> &[i32] {
        self.0.entries()
    }
}

impl std::fmt::Display for ThresholdPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn check_threshold_pair(entries: &[i32]) -> std::result::Result<(), String> {
    if entries.len() < 2 {
        return Err(format!(
            "threshold pairs require n >= 2, got n = {}",
            entries.len()
        ));
    }
    if Sign::of(entries[0]) != Sign::of(entries[1]) {
        return Err("the first two numbers must carry the same sign".into());
    }
    for w in entries.windows(2) {
        if Sign::of(w[0]) == Sign::of(w[1]) && w[0].abs() >= w[1].abs() {
            return Err(format!(
                "consecutive same-sign numbers must ascend, found {} before {}",
                w[0], w[1]
            ));
        }
    }
    Ok(())
}

/// True iff `sp` is a threshold pair in standard form. The definition
/// presumes two leading entries, so `n < 2` is a domain error.
pub fn is_threshold_pair(sp: &SignedPermutation) -> Result<bool> {
    if sp.n() < 2 {
        return Err(Error::domain(format!(
            "threshold pairs require n >= 2, got n = {}",
            sp.n()
        )));
    }
    Ok(check_threshold_pair(sp.entries()).is_ok())
}

/// A threshold permutation: the code word characterized by
/// (1) the first number is less than the second,
/// (2) a leading 1 carries a minus sign,
/// (3) otherwise the second number carries a minus sign,
/// (4) every plus-signed number exceeds its predecessor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThresholdPermutation(SignedPermutation);

impl ThresholdPermutation {
    pub fn new(sp: SignedPermutation) -> Result<Self> {
        match check_threshold_perm(sp.entries()) {
            Ok(()) => Ok(ThresholdPermutation(sp)),
            Err(clause) => Err(Error::domain(clause)),
        }
    }

    pub fn from_slice(entries: &[i32]) -> Result<Self> {
        ThresholdPermutation::new(SignedPermutation::from_slice(entries)?)
    }

    pub fn as_perm(&self) -> &SignedPermutation {
        &self.0
    }

    pub fn into_perm(self) -> SignedPermutation {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn entries(&self) -> &[i32] {
        self.0.entries()
    }
}

impl std::fmt::Display for ThresholdPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn check_threshold_perm(entries: &[i32]) -> std::result::Result<(), String> {
    if entries.len() < 2 {
        return Err(format!(
            "threshold permutations require n >= 2, got n = {}",
            entries.len()
        ));
    }
    if entries[0].abs() >= entries[1].abs() {
        return Err("the first number must be less than the second".into());
    }
    if entries[0].abs() == 1 {
        if entries[0] > 0 {
            return Err("a leading 1 must carry a minus sign".into());
        }
    } else if entries[1] > 0 {
        return Err("when the first number is not 1, the second must carry a minus sign".into());
    }
    if !is_normal_slice(entries) {
        return Err("every plus-signed number must exceed its predecessor".into());
    }
    Ok(())
}

/// True iff all four threshold-permutation conditions hold; `false` for
/// `n < 2`, where the conditions cannot be met.
pub fn is_threshold_perm(sp: &SignedPermutation) -> bool {
    is_threshold_perm_slice(sp.entries())
}

pub(crate) fn is_threshold_perm_slice(entries: &[i32]) -> bool {
    check_threshold_perm(entries).is_ok()
}

/// Slice-level pair-to-permutation sign rewrite; `out` receives the result.
pub(crate) fn threshold_perm_entries_of_pair(pair: &[i32], out: &mut Vec<i32>) {
    out.clear();
    let n = pair.len();
    debug_assert!(n >= 2);
    if pair[0].abs() == 1 {
        out.push(-1);
        out.push(Sign::of(pair[0]).apply(pair[1].unsigned_abs()));
    } else {
        out.push(pair[0]);
        out.push(-pair[1].abs());
    }
    for i in 2..n {
        let sign = if Sign::of(pair[i - 1]) == Sign::of(pair[i]) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        out.push(sign.apply(pair[i].unsigned_abs()));
    }
}

/// Slice-level inverse of [`threshold_perm_entries_of_pair`].
pub(crate) fn pair_entries_of_threshold_perm(perm: &[i32], out: &mut Vec<i32>) {
    out.clear();
    let n = perm.len();
    debug_assert!(n >= 2);
    let base = if perm[0].abs() == 1 {
        Sign::of(perm[1])
    } else {
        Sign::of(perm[0])
    };
    out.push(base.apply(perm[0].unsigned_abs()));
    out.push(base.apply(perm[1].unsigned_abs()));
    let mut current = base;
    for &e in &perm[2..] {
        if e < 0 {
            current = current.flip();
        }
        out.push(current.apply(e.unsigned_abs()));
    }
}

/// Translates a threshold pair to the threshold permutation coding the same
/// labeled threshold graph: for positions past the second, a plus sign marks
/// agreement of the pair's consecutive signs; the two leading signs follow
/// the leading-1 and leading-non-1 cases.
pub fn pair_to_threshold_perm(tp: &ThresholdPair) -> ThresholdPermutation {
    let mut out = Vec::new();
    threshold_perm_entries_of_pair(tp.entries(), &mut out);
    ThresholdPermutation::new(SignedPermutation::new(out).expect("valid entries"))
        .expect("the image of a threshold pair is a threshold permutation")
}

/// Inverse translation: reconstructs the pair from the positions of the
/// minus signs past the second entry.
pub fn threshold_perm_to_pair(tperm: &ThresholdPermutation) -> ThresholdPair {
    let mut out = Vec::new();
    pair_entries_of_threshold_perm(tperm.entries(), &mut out);
    ThresholdPair::new(SignedPermutation::new(out).expect("valid entries"))
        .expect("the preimage of a threshold permutation is a threshold pair")
}

/// Rewrites an arbitrary signed permutation into the threshold pair coding
/// the same labeled threshold graph: if the two leading signs differ the
/// first is replaced by the second, then every maximal same-sign run is
/// sorted ascending.
pub fn standardize(sp: &SignedPermutation) -> Result<ThresholdPair> {
    if sp.n() < 2 {
        return Err(Error::domain(format!(
            "standardization requires n >= 2, got n = {}",
            sp.n()
        )));
    }
    let mut entries = sp.entries().to_vec();
    standardize_slice(&mut entries);
    ThresholdPair::new(SignedPermutation::new(entries).expect("valid entries"))
        .map_err(|e| Error::Consistency(format!("standardize produced a non-pair: {e}")))
}

pub(crate) fn standardize_slice(entries: &mut [i32]) {
    debug_assert!(entries.len() >= 2);
    if Sign::of(entries[0]) != Sign::of(entries[1]) {
        entries[0] = Sign::of(entries[1]).apply(entries[0].unsigned_abs());
    }
    let mut start = 0;
    while start < entries.len() {
        let sign = Sign::of(entries[start]);
        let mut end = start + 1;
        while end < entries.len() && Sign::of(entries[end]) == sign {
            end += 1;
        }
        entries[start..end].sort_by_key(|e| e.abs());
        start = end;
    }
}

/// One maximal constant-sign run of a threshold pair, as a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Members in ascending order.
    pub members: Vec<u32>,
    pub sign: Sign,
}

/// The ordered maximal constant-sign runs of a threshold pair. Block 1
/// always has size at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

/// Splits a threshold pair into its blocks.
pub fn blocks(tp: &ThresholdPair) -> BlockDecomposition {
    let entries = tp.entries();
    let mut out = Vec::new();
    let mut start = 0;
    while start < entries.len() {
        let sign = Sign::of(entries[start]);
        let mut end = start + 1;
        while end < entries.len() && Sign::of(entries[end]) == sign {
            end += 1;
        }
        out.push(Block {
            members: entries[start..end].iter().map(|e| e.unsigned_abs()).collect(),
            sign,
        });
        start = end;
    }
    BlockDecomposition { blocks: out }
}

fn require_pair_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!(
            "threshold pairs require n >= 2, got n = {n}"
        )));
    }
    if n >= 32 {
        return Err(Error::domain(
            "threshold-pair enumeration is exhaustive; n must be below 32",
        ));
    }
    Ok(())
}

/// The split points for parallel enumeration: one task per (first block,
/// leading sign) choice.
fn pair_tasks(n: usize) -> Vec<(u32, Sign)> {
    let full: u32 = (1 << n) - 1;
    let mut tasks = Vec::new();
    let mut mask = full;
    loop {
        if mask.count_ones() >= 2 {
            tasks.push((mask, Sign::Plus));
            tasks.push((mask, Sign::Minus));
        }
        if mask == 0 {
            break;
        }
        mask = (mask - 1) & full;
    }
    tasks
}

fn push_block(buf: &mut Vec<i32>, mask: u32, sign: Sign) {
    let mut bits = mask;
    while bits != 0 {
        let b = bits.trailing_zeros();
        buf.push(sign.apply(b + 1));
        bits &= bits - 1;
    }
}

fn visit_rest(remaining: u32, sign: Sign, buf: &mut Vec<i32>, f: &mut impl FnMut(&[i32])) {
    if remaining == 0 {
        f(buf);
        return;
    }
    let mut sub = remaining;
    loop {
        let len = buf.len();
        push_block(buf, sub, sign);
        visit_rest(remaining & !sub, sign.flip(), buf, f);
        buf.truncate(len);
        sub = (sub - 1) & remaining;
        if sub == 0 {
            break;
        }
    }
}

fn visit_pairs_for_task(n: usize, first: u32, sign: Sign, f: &mut impl FnMut(&[i32])) {
    let full: u32 = (1 << n) - 1;
    let mut buf = Vec::with_capacity(n);
    push_block(&mut buf, first, sign);
    visit_rest(full & !first, sign.flip(), &mut buf, f);
}

/// Split points for parallel consumption of the threshold-pair stream.
pub(crate) fn pair_task_list(n: usize) -> Result<Vec<(u32, Sign)>> {
    require_pair_size(n)?;
    Ok(pair_tasks(n))
}

pub(crate) fn visit_pairs_in_task(n: usize, mask: u32, sign: Sign, f: &mut impl FnMut(&[i32])) {
    visit_pairs_for_task(n, mask, sign, f);
}

/// Visits every threshold pair of size `n` exactly once, generated
/// constructively: an ordered set partition of `[n]` with first block of
/// size at least 2, a sign for the first block, alternating signs after it,
/// each block written ascending. The buffer is reused between calls.
pub fn visit_threshold_pairs(n: usize, mut f: impl FnMut(&[i32])) -> Result<()> {
    require_pair_size(n)?;
    for (mask, sign) in pair_tasks(n) {
        visit_pairs_for_task(n, mask, sign, &mut f);
    }
    Ok(())
}

/// All threshold pairs of size `n`.
pub fn enumerate_threshold_pairs(n: usize) -> Result<impl Iterator<Item = ThresholdPair>> {
    let mut all = Vec::new();
    visit_threshold_pairs(n, |entries| {
        all.push(
            ThresholdPair::new(SignedPermutation::from_slice(entries).expect("valid entries"))
                .expect("constructive enumeration yields standard form"),
        )
    })?;
    Ok(all.into_iter())
}

/// Exact number of threshold pairs of size `n`, counted by parallel
/// enumeration (not by a closed form, so it can cross-check one).
pub fn threshold_pair_count(n: usize) -> Result<BigInt> {
    require_pair_size(n)?;
    let total: u64 = pair_tasks(n)
        .into_par_iter()
        .map(|(mask, sign)| {
            let mut count = 0u64;
            visit_pairs_for_task(n, mask, sign, &mut |_| count += 1);
            count
        })
        .sum();
    Ok(BigInt::from(total))
}

/// Histogram of the odd-cycle statistic over all threshold permutations of
/// size `n`, enumerated through the pair bijection.
pub fn threshold_perm_odd_cycle_distribution(n: usize) -> Result<DistributionTable> {
    require_pair_size(n)?;
    let merged = pair_tasks(n)
        .into_par_iter()
        .map(|(mask, sign)| {
            let mut local = DistributionTable::new("odd-cycles", n);
            let mut scratch = Vec::with_capacity(n);
            visit_pairs_for_task(n, mask, sign, &mut |pair| {
                threshold_perm_entries_of_pair(pair, &mut scratch);
                local.record(odd_cycle_count_of(&scratch));
            });
            local
        })
        .reduce(
            || DistributionTable::new("odd-cycles", n),
            |mut a, b| {
                a.merge(b);
                a
            },
        );
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(entries: &[i32]) -> SignedPermutation {
        SignedPermutation::from_slice(entries).unwrap()
    }

    fn pair(entries: &[i32]) -> ThresholdPair {
        ThresholdPair::from_slice(entries).unwrap()
    }

    fn perm(entries: &[i32]) -> ThresholdPermutation {
        ThresholdPermutation::from_slice(entries).unwrap()
    }

    #[test]
    fn pair_recognition() {
        assert!(is_threshold_pair(&sp(&[-2, -3, -5, 1, 4, -6])).unwrap());
        assert!(!is_threshold_pair(&sp(&[2, -3, -5, 4, 1, -6])).unwrap());
        assert!(is_threshold_pair(&sp(&[-1, -2])).unwrap());
        assert!(is_threshold_pair(&sp(&[1])).is_err());
    }

    #[test]
    fn pair_enumeration_counts() {
        assert_eq!(enumerate_threshold_pairs(2).unwrap().count(), 2);
        assert_eq!(enumerate_threshold_pairs(3).unwrap().count(), 8);
        assert_eq!(enumerate_threshold_pairs(4).unwrap().count(), 46);
        assert!(enumerate_threshold_pairs(1).is_err());
        assert_eq!(threshold_pair_count(5).unwrap(), BigInt::from(332));
    }

    #[test]
    fn pair_to_perm_examples() {
        assert_eq!(
            pair_to_threshold_perm(&pair(&[-2, -3, -5, 1, 4, -6])).entries(),
            &[-2, -3, 5, -1, 4, -6]
        );
        assert_eq!(
            pair_to_threshold_perm(&pair(&[1, 3, -2, -5, 4, 6, 7])).entries(),
            &[-1, 3, -2, 5, -4, 6, 7]
        );
        assert_eq!(pair_to_threshold_perm(&pair(&[1, 2])).entries(), &[-1, 2]);
    }

    #[test]
    fn perm_to_pair_examples() {
        assert_eq!(
            threshold_perm_to_pair(&perm(&[-2, -3, 5, -1, 4, -6])).entries(),
            &[-2, -3, -5, 1, 4, -6]
        );
        assert_eq!(
            threshold_perm_to_pair(&perm(&[-1, 3, -2, 5, -4, 6, 7])).entries(),
            &[1, 3, -2, -5, 4, 6, 7]
        );
        assert_eq!(
            threshold_perm_to_pair(&perm(&[-1, -2, -3])).entries(),
            &[-1, -2, 3]
        );
    }

    #[test]
    fn perm_recognition() {
        assert!(is_threshold_perm(&sp(&[-2, -3, 5, -1, 4, -6])));
        // leading 1 must be negative
        assert!(!is_threshold_perm(&sp(&[1, 2])));
        // first number must be less than the second
        assert!(!is_threshold_perm(&sp(&[-2, -1])));
        assert!(!is_threshold_perm(&sp(&[1])));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(
            standardize(&sp(&[2, -3, -5, 1, 4, -6])).unwrap().entries(),
            &[-2, -3, -5, 1, 4, -6]
        );
        assert_eq!(
            standardize(&sp(&[-3, -2, -5, 4, 1, -6])).unwrap().entries(),
            &[-2, -3, -5, 1, 4, -6]
        );
        // any threshold pair is a fixed point
        let tp = pair(&[-2, -3, -5, 1, 4, -6]);
        assert_eq!(
            standardize(tp.as_perm()).unwrap().entries(),
            tp.entries()
        );
        assert!(standardize(&sp(&[1])).is_err());
    }

    #[test]
    fn block_decompositions() {
        let b = blocks(&pair(&[-2, -3, -5, 1, 4, -6]));
        assert_eq!(
            b.blocks,
            vec![
                Block { members: vec![2, 3, 5], sign: Sign::Minus },
                Block { members: vec![1, 4], sign: Sign::Plus },
                Block { members: vec![6], sign: Sign::Minus },
            ]
        );
        assert_eq!(
            blocks(&pair(&[-1, -2])).blocks,
            vec![Block { members: vec![1, 2], sign: Sign::Minus }]
        );
        assert_eq!(
            blocks(&pair(&[2, 3, -1])).blocks,
            vec![
                Block { members: vec![2, 3], sign: Sign::Plus },
                Block { members: vec![1], sign: Sign::Minus },
            ]
        );
    }

    #[test]
    fn distribution_smallest_cases() {
        let d2 = threshold_perm_odd_cycle_distribution(2).unwrap();
        assert_eq!(d2.get(1), BigInt::from(1));
        assert_eq!(d2.get(2), BigInt::from(1));
        let d3 = threshold_perm_odd_cycle_distribution(3).unwrap();
        assert_eq!(d3.get(0), BigInt::from(1));
        assert_eq!(d3.get(1), BigInt::from(3));
        assert_eq!(d3.get(2), BigInt::from(3));
        assert_eq!(d3.get(3), BigInt::from(1));
    }
}
