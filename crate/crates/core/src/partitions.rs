//! Signed ordered partitions, their representations, the part-merging
//! involution, and the special-pair bijection.
//!
//! A representation writes a signed ordered partition as a sequence of parts
//! with one sign per part: the first sign belongs to the first block, a `+`
//! between parts joins them into one block, a `-` separates blocks. The
//! standard representation has singleton parts with ascending plus-runs and
//! corresponds to a normal permutation. The involution pairs up all
//! non-standard representations while preserving the underlying partition
//! and the odd-cycle count, which is what makes the alternating part-count
//! sum collapse onto the standard ones.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{odd_cycle_coefficient, stirling2};
use crate::signed_permutations::{is_normal, Sign, SignedPermutation};
use crate::threshold_bijections::is_threshold_perm;

/// An ordered partition of `[n]` with a sign on the first block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedOrderedPartition {
    blocks: Vec<Vec<u32>>,
    leading_sign: Sign,
}

impl SignedOrderedPartition {
    /// Blocks must be disjoint, nonempty, and cover `[n]`; members are
    /// sorted internally.
    pub fn new(blocks: Vec<Vec<u32>>, leading_sign: Sign) -> Result<Self> {
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        validate_cover(&blocks)?;
        Ok(SignedOrderedPartition {
            blocks,
            leading_sign,
        })
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn leading_sign(&self) -> Sign {
        self.leading_sign
    }
}

fn validate_cover(parts: &[Vec<u32>]) -> Result<()> {
    let n: usize = parts.iter().map(Vec::len).sum();
    let mut seen = vec![false; n + 1];
    for part in parts {
        if part.is_empty() {
            return Err(Error::domain("parts must be nonempty"));
        }
        for &x in part {
            if x == 0 || x as usize > n {
                return Err(Error::domain(format!("element {x} is outside [{n}]")));
            }
            if seen[x as usize] {
                return Err(Error::domain(format!("element {x} appears twice")));
            }
            seen[x as usize] = true;
        }
    }
    Ok(())
}

/// One way of writing a signed ordered partition: ordered disjoint parts,
/// one sign per part. Sign 1 is the leading sign; later signs are the
/// binary operators (`+` merges, `-` separates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    parts: Vec<Vec<u32>>,
    signs: Vec<Sign>,
}

impl Representation {
    pub fn new(parts: Vec<Vec<u32>>, signs: Vec<Sign>) -> Result<Self> {
        if parts.len() != signs.len() {
            return Err(Error::domain("one sign per part is required"));
        }
        let mut parts = parts;
        for p in &mut parts {
            p.sort_unstable();
        }
        validate_cover(&parts)?;
        Ok(Representation { parts, signs })
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Total number of parts.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Collapses the plus-joined runs back into the signed ordered partition
    /// this represents.
    pub fn underlying(&self) -> SignedOrderedPartition {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for (i, part) in self.parts.iter().enumerate() {
            if i == 0 || self.signs[i] == Sign::Minus {
                blocks.push(part.clone());
            } else {
                let last = blocks.last_mut().expect("first part opens a block");
                last.extend_from_slice(part);
            }
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        let leading = self.signs.first().copied().unwrap_or(Sign::Plus);
        SignedOrderedPartition {
            blocks,
            leading_sign: leading,
        }
    }

    /// Standard form: every part a singleton, and a `+` only between parts
    /// whose elements ascend.
    pub fn is_standard(&self) -> bool {
        self.parts.iter().all(|p| p.len() == 1)
            && (1..self.parts.len()).all(|i| {
                self.signs[i] == Sign::Minus || self.parts[i - 1][0] < self.parts[i][0]
            })
    }

    /// Section boundaries: ranges of part indices joined by plus signs, one
    /// per block of the underlying partition.
    fn sections(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.parts.len() {
            if i == self.parts.len() || self.signs[i] == Sign::Minus {
                out.push((start, i));
                start = i;
            }
        }
        out
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{{", self.signs[i])?;
            for (k, x) in part.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

fn visit_ordered_partitions(
    remaining: u32,
    parts: &mut Vec<Vec<u32>>,
    f: &mut impl FnMut(&[Vec<u32>]),
) {
    if remaining == 0 {
        f(parts);
        return;
    }
    let mut sub = remaining;
    loop {
        let mut members = Vec::with_capacity(sub.count_ones() as usize);
        let mut bits = sub;
        while bits != 0 {
            members.push(bits.trailing_zeros() + 1);
            bits &= bits - 1;
        }
        parts.push(members);
        visit_ordered_partitions(remaining & !sub, parts, f);
        parts.pop();
        sub = (sub - 1) & remaining;
        if sub == 0 {
            break;
        }
    }
}

/// All representations of signed ordered partitions of `[n]`, each exactly
/// once. Exhaustive: the count is `sum_m m! S(n,m) 2^m`, so `n` stays small.
pub fn enumerate_representations(n: usize) -> Result<Vec<Representation>> {
    if n == 0 || n > 8 {
        return Err(Error::domain(format!(
            "representation enumeration is exhaustive; 1 <= n <= 8 required, got {n}"
        )));
    }
    let full = (1u32 << n) - 1;
    let mut out = Vec::new();
    let mut parts = Vec::new();
    visit_ordered_partitions(full, &mut parts, &mut |parts| {
        let m = parts.len();
        for mask in 0..(1u32 << m) {
            let signs: Vec<Sign> = (0..m)
                .map(|i| {
                    if (mask >> (m - 1 - i)) & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect();
            out.push(Representation {
                parts: parts.to_vec(),
                signs,
            });
        }
    });
    Ok(out)
}

/// The unique standard representation: each block written as ascending
/// singletons joined by `+`.
pub fn standard_representation(sop: &SignedOrderedPartition) -> Representation {
    let mut parts = Vec::with_capacity(sop.n());
    let mut signs = Vec::with_capacity(sop.n());
    for (bi, block) in sop.blocks.iter().enumerate() {
        for (k, &x) in block.iter().enumerate() {
            parts.push(vec![x]);
            signs.push(if k > 0 {
                Sign::Plus
            } else if bi == 0 {
                sop.leading_sign
            } else {
                Sign::Minus
            });
        }
    }
    Representation { parts, signs }
}

/// Reads a standard representation as the normal permutation whose entries
/// are the singletons with the sign immediately before each.
pub fn rep_to_normal_perm(rep: &Representation) -> Result<SignedPermutation> {
    if !rep.is_standard() {
        return Err(Error::domain(
            "only standard representations read off as normal permutations",
        ));
    }
    let entries: Vec<i32> = rep
        .parts
        .iter()
        .zip(&rep.signs)
        .map(|(p, s)| s.apply(p[0]))
        .collect();
    SignedPermutation::new(entries)
}

/// Inverse of [`rep_to_normal_perm`].
pub fn normal_perm_to_rep(sp: &SignedPermutation) -> Result<Representation> {
    if !is_normal(sp) {
        return Err(Error::domain("not a normal permutation"));
    }
    let parts = sp.entries().iter().map(|e| vec![e.unsigned_abs()]).collect();
    let signs = sp.entries().iter().map(|&e| Sign::of(e)).collect();
    Ok(Representation { parts, signs })
}

/// Odd-cycle count of a representation: compartmentalize the parts by the
/// least-part rule (the part containing the least remaining element closes a
/// compartment), then count compartments with an odd number of minus signs.
pub fn rep_odd_cycle_count(rep: &Representation) -> usize {
    let mut min = u32::MAX;
    let mut negatives = 0usize;
    let mut odd = 0usize;
    let mut open = false;
    for (part, sign) in rep.parts.iter().zip(&rep.signs).rev() {
        let part_min = *part.first().expect("parts are nonempty");
        if part_min < min {
            if open && negatives % 2 == 1 {
                odd += 1;
            }
            negatives = 0;
            open = true;
            min = part_min;
        }
        if *sign == Sign::Minus {
            negatives += 1;
        }
    }
    if open && negatives % 2 == 1 {
        odd += 1;
    }
    odd
}

/// Reads a representation with `k` parts as a partition of `[n]` into `k`
/// parts plus a signed permutation of `[k]`: parts are ranked by least
/// element, and the sign before a part becomes the sign of its rank.
pub fn rep_to_partition_pair(rep: &Representation) -> (Vec<Vec<u32>>, SignedPermutation) {
    let k = rep.part_count();
    let mut ranked: Vec<(u32, usize)> = rep
        .parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p[0], i))
        .collect();
    ranked.sort_unstable();
    let mut rank_of_part = vec![0u32; k];
    for (rank, &(_, i)) in ranked.iter().enumerate() {
        rank_of_part[i] = rank as u32 + 1;
    }
    let entries: Vec<i32> = (0..k)
        .map(|i| rep.signs[i].apply(rank_of_part[i]))
        .collect();
    let partition: Vec<Vec<u32>> = ranked
        .iter()
        .map(|&(_, i)| rep.parts[i].clone())
        .collect();
    (
        partition,
        SignedPermutation::new(entries).expect("ranks form a permutation"),
    )
}

/// Inverse of [`rep_to_partition_pair`]; the partition is taken ordered by
/// least element.
pub fn partition_pair_to_rep(
    partition: &[Vec<u32>],
    sp: &SignedPermutation,
) -> Result<Representation> {
    if partition.len() != sp.n() {
        return Err(Error::domain(
            "the signed permutation must have one entry per part",
        ));
    }
    let mut sorted: Vec<Vec<u32>> = partition.to_vec();
    for p in &mut sorted {
        p.sort_unstable();
    }
    sorted.sort_by_key(|p| p.first().copied());
    let parts: Vec<Vec<u32>> = sp
        .entries()
        .iter()
        .map(|e| sorted[(e.unsigned_abs() - 1) as usize].clone())
        .collect();
    let signs: Vec<Sign> = sp.entries().iter().map(|&e| Sign::of(e)).collect();
    Representation::new(parts, signs)
}

/// The sign-reversing involution on non-standard representations: in the
/// first block whose rendering breaks standard form, the first misplaced
/// element is either split out of its oversized part or merged back into
/// the part before it. Part count changes by one; the underlying partition,
/// and the number of minus signs in every compartment, do not change.
pub fn involution(rep: &Representation) -> Result<Representation> {
    for (start, end) in rep.sections() {
        let mut elems: Vec<u32> = rep.parts[start..end].concat();
        elems.sort_unstable();
        let misplaced = (0..end - start).find(|&i| rep.parts[start + i][..] != [elems[i]]);
        let Some(i) = misplaced else {
            continue;
        };
        let a = elems[i];
        let p = (start..end)
            .find(|&p| rep.parts[p].binary_search(&a).is_ok())
            .expect("the misplaced element is in the section");
        let mut parts = rep.parts.clone();
        let mut signs = rep.signs.clone();
        if parts[p].len() > 1 {
            // split: B -> (B \ {a}) + {a}
            parts[p].retain(|&x| x != a);
            parts.insert(p + 1, vec![a]);
            signs.insert(p + 1, Sign::Plus);
        } else {
            // merge: B' + {a} -> B' U {a}
            debug_assert!(p > start, "a lone first part would be correctly placed");
            debug_assert_eq!(signs[p], Sign::Plus);
            parts.remove(p);
            signs.remove(p);
            parts[p - 1].push(a);
            parts[p - 1].sort_unstable();
        }
        return Ok(Representation { parts, signs });
    }
    Err(Error::InvolutionFixedPoint)
}

/// `N(n,j)`, the number of normal permutations of `[n]` with `j` odd
/// cycles: `sum_{k=j}^n (-1)^(n-k) S(n,k) a(k,j)`.
pub fn normal_perm_count(n: usize, j: usize) -> Result<BigInt> {
    if j > n {
        return Err(Error::domain(format!(
            "normal_perm_count requires j <= n, got ({n}, {j})"
        )));
    }
    let mut acc = BigInt::zero();
    for k in j..=n {
        let term = stirling2(n, k)? * odd_cycle_coefficient(k, j)?;
        if (n - k) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Number of threshold permutations of size `n` with `j` odd cycles:
/// `N(n,j) - n * N(n-1,j)`, the unsigned coefficient of the threshold
/// characteristic polynomial.
pub fn threshold_perm_count(n: usize, j: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::domain(format!(
            "threshold permutations require n >= 2, got n = {n}"
        )));
    }
    if j > n {
        return Err(Error::domain(format!(
            "threshold_perm_count requires j <= n, got ({n}, {j})"
        )));
    }
    let smaller = if j > n - 1 {
        BigInt::zero()
    } else {
        normal_perm_count(n - 1, j)?
    };
    Ok(normal_perm_count(n, j)? - BigInt::from(n) * smaller)
}

/// A special number `b` in `[n]` together with a normal permutation of the
/// other `n - 1` elements (stored over `[n-1]`; the order-preserving
/// relabeling onto `[n] \ {b}` is applied lazily).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPair {
    b: u32,
    pi: SignedPermutation,
}

impl SpecialPair {
    pub fn new(b: u32, pi: SignedPermutation) -> Result<Self> {
        let n = pi.n() + 1;
        if b == 0 || b as usize > n {
            return Err(Error::domain(format!(
                "the special number must lie in [{n}], got {b}"
            )));
        }
        if !is_normal(&pi) {
            return Err(Error::domain(
                "the companion permutation must be normal",
            ));
        }
        Ok(SpecialPair { b, pi })
    }

    /// Builds the pair from entries labeled over `[n] \ {b}`.
    pub fn from_ambient(b: u32, entries: &[i32]) -> Result<Self> {
        let n = entries.len() + 1;
        if b == 0 || b as usize > n {
            return Err(Error::domain(format!(
                "the special number must lie in [{n}], got {b}"
            )));
        }
        let reduced: Vec<i32> = entries
            .iter()
            .map(|&e| {
                let m = e.unsigned_abs();
                if m == b {
                    return Err(Error::domain(format!(
                        "the special number {b} may not appear in the permutation"
                    )));
                }
                let down = if m < b { m } else { m - 1 };
                Ok(Sign::of(e).apply(down))
            })
            .collect::<Result<_>>()?;
        SpecialPair::new(b, SignedPermutation::new(reduced)?)
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// The stored permutation over `[n-1]`.
    pub fn reduced(&self) -> &SignedPermutation {
        &self.pi
    }

    /// Size of the ambient set.
    pub fn n(&self) -> usize {
        self.pi.n() + 1
    }

    /// The permutation relabeled onto `[n] \ {b}`.
    pub fn ambient_entries(&self) -> Vec<i32> {
        self.pi
            .entries()
            .iter()
            .map(|&e| {
                let m = e.unsigned_abs();
                let up = if m < self.b { m } else { m + 1 };
                Sign::of(e).apply(up)
            })
            .collect()
    }
}

/// The insertion map of the special-pair bijection: prepends `b` to the
/// relabeled permutation, adjusting the two leading signs by the three
/// cases `b = 1`, `b < a_1`, `b > a_1`. The image is a normal permutation
/// that is not a threshold permutation, with the odd-cycle count unchanged.
pub fn special_pair_to_normal(pair: &SpecialPair) -> SignedPermutation {
    let ambient = pair.ambient_entries();
    let b = pair.b;
    let mut out = Vec::with_capacity(ambient.len() + 1);
    if ambient.is_empty() {
        out.push(Sign::Plus.apply(b));
    } else {
        let a1 = ambient[0].unsigned_abs();
        let s1 = Sign::of(ambient[0]);
        if b == 1 {
            out.push(1);
            out.extend_from_slice(&ambient);
        } else if b < a1 {
            out.push(s1.apply(b));
            out.push(Sign::Plus.apply(a1));
            out.extend_from_slice(&ambient[1..]);
        } else {
            out.push(s1.flip().apply(b));
            out.push(Sign::Minus.apply(a1));
            out.extend_from_slice(&ambient[1..]);
        }
    }
    let result = SignedPermutation::new(out).expect("insertion keeps a valid permutation");
    debug_assert!(is_normal(&result));
    result
}

/// Inverse of [`special_pair_to_normal`]: classifies a normal non-threshold
/// permutation into the three image types and strips the special number.
pub fn normal_to_special_pair(sp: &SignedPermutation) -> Result<SpecialPair> {
    if sp.n() < 2 {
        return Err(Error::domain(format!(
            "the special-pair bijection requires n >= 2, got n = {}",
            sp.n()
        )));
    }
    if !is_normal(sp) {
        return Err(Error::domain("not a normal permutation"));
    }
    if is_threshold_perm(sp) {
        return Err(Error::domain(
            "threshold permutations are not in the image of the insertion map",
        ));
    }
    let entries = sp.entries();
    let first = entries[0];
    if first == 1 {
        // a leading +1 came from b = 1
        return SpecialPair::from_ambient(1, &entries[1..]);
    }
    let b = first.unsigned_abs();
    let a1 = entries[1].unsigned_abs();
    let mut ambient = Vec::with_capacity(entries.len() - 1);
    if b > a1 {
        // b was inserted with the opposite sign; a_1 had the flip of it
        ambient.push(Sign::of(first).flip().apply(a1));
    } else {
        // b carried a_1's original sign
        ambient.push(Sign::of(first).apply(a1));
    }
    ambient.extend_from_slice(&entries[2..]);
    SpecialPair::from_ambient(b, &ambient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_permutations::odd_cycle_count;

    fn sp(entries: &[i32]) -> SignedPermutation {
        SignedPermutation::from_slice(entries).unwrap()
    }

    fn rep(parts: &[&[u32]], signs: &[Sign]) -> Representation {
        Representation::new(
            parts.iter().map(|p| p.to_vec()).collect(),
            signs.to_vec(),
        )
        .unwrap()
    }

    use Sign::{Minus as M, Plus as P};

    #[test]
    fn representation_counts() {
        assert_eq!(enumerate_representations(1).unwrap().len(), 2);
        assert_eq!(enumerate_representations(2).unwrap().len(), 10);
        assert_eq!(enumerate_representations(5).unwrap().len(), 9002);
    }

    #[test]
    fn standard_representation_example() {
        let sop = SignedOrderedPartition::new(
            vec![vec![2], vec![1, 3, 4], vec![5, 7], vec![6]],
            M,
        )
        .unwrap();
        let std_rep = standard_representation(&sop);
        assert_eq!(
            std_rep,
            rep(
                &[&[2], &[1], &[3], &[4], &[5], &[7], &[6]],
                &[M, M, P, P, M, P, M]
            )
        );
        assert!(std_rep.is_standard());
        assert_eq!(std_rep.underlying(), sop);
        assert_eq!(
            rep_to_normal_perm(&std_rep).unwrap(),
            sp(&[-2, -1, 3, 4, -5, 7, -6])
        );
    }

    #[test]
    fn normal_perm_round_trip() {
        let perm = sp(&[-2, -1, 3, 4, -5, 7, -6]);
        let r = normal_perm_to_rep(&perm).unwrap();
        assert!(r.is_standard());
        assert_eq!(rep_to_normal_perm(&r).unwrap(), perm);
        assert!(normal_perm_to_rep(&sp(&[2, 1])).is_err());
        assert!(rep_to_normal_perm(&rep(&[&[1, 2]], &[P])).is_err());
    }

    #[test]
    fn rep_odd_cycles_worked_examples() {
        // three representations of one signed ordered partition, all with 2 odd cycles
        let r1 = rep(
            &[&[2], &[3], &[1], &[4], &[5], &[7], &[6]],
            &[M, M, P, P, M, P, M],
        );
        let r2 = rep(&[&[2], &[4], &[3], &[1], &[5, 7], &[6]], &[M, M, P, P, M, M]);
        let r3 = rep(&[&[2], &[1, 3, 4], &[7], &[5], &[6]], &[M, M, M, P, M]);
        assert_eq!(rep_odd_cycle_count(&r1), 2);
        assert_eq!(rep_odd_cycle_count(&r2), 2);
        assert_eq!(rep_odd_cycle_count(&r3), 2);
        assert_eq!(rep_odd_cycle_count(&rep(&[&[1], &[2]], &[P, P])), 0);
    }

    #[test]
    fn partition_pair_example() {
        let r = rep(&[&[2, 6], &[5], &[1, 3], &[7], &[4]], &[M, M, P, M, M]);
        let (partition, perm) = rep_to_partition_pair(&r);
        assert_eq!(
            partition,
            vec![vec![1, 3], vec![2, 6], vec![4], vec![5], vec![7]]
        );
        assert_eq!(perm, sp(&[-2, -4, 1, -5, -3]));
        assert_eq!(rep_odd_cycle_count(&r), 0);
        assert_eq!(odd_cycle_count(&perm), 0);
        assert_eq!(partition_pair_to_rep(&partition, &perm).unwrap(), r);

        let trivial = rep(&[&[1]], &[P]);
        let (partition, perm) = rep_to_partition_pair(&trivial);
        assert_eq!(partition, vec![vec![1]]);
        assert_eq!(perm, sp(&[1]));
    }

    #[test]
    fn involution_worked_example() {
        let left = rep(
            &[&[1], &[3], &[2], &[5], &[4], &[6, 7]],
            &[P, P, M, P, P, M],
        );
        let right = rep(&[&[1], &[3], &[2], &[4, 5], &[6, 7]], &[P, P, M, P, M]);
        assert_eq!(involution(&left).unwrap(), right);
        assert_eq!(involution(&right).unwrap(), left);
        assert_eq!(rep_odd_cycle_count(&left), rep_odd_cycle_count(&right));
    }

    #[test]
    fn involution_smallest_pairs() {
        // the partner of -{1,2} keeps the same one-block partition
        let joined = rep(&[&[1, 2]], &[M]);
        let split = rep(&[&[2], &[1]], &[M, P]);
        assert_eq!(involution(&joined).unwrap(), split);
        assert_eq!(involution(&split).unwrap(), joined);
        assert_eq!(joined.underlying(), split.underlying());

        // standard representations are fixed points and therefore errors
        let standard = rep(&[&[1], &[2]], &[M, P]);
        assert!(matches!(
            involution(&standard),
            Err(Error::InvolutionFixedPoint)
        ));
    }

    #[test]
    fn normal_counts() {
        assert_eq!(normal_perm_count(2, 1).unwrap(), BigInt::from(3));
        assert_eq!(normal_perm_count(2, 0).unwrap(), BigInt::from(2));
        assert_eq!(normal_perm_count(1, 0).unwrap(), BigInt::from(1));
        assert_eq!(normal_perm_count(1, 1).unwrap(), BigInt::from(1));
        assert!(normal_perm_count(2, 3).is_err());
    }

    #[test]
    fn threshold_counts() {
        assert_eq!(threshold_perm_count(2, 0).unwrap(), BigInt::zero());
        assert_eq!(threshold_perm_count(2, 1).unwrap(), BigInt::from(1));
        assert_eq!(threshold_perm_count(2, 2).unwrap(), BigInt::from(1));
        let expected3 = [1u32, 3, 3, 1];
        for (j, &c) in expected3.iter().enumerate() {
            assert_eq!(threshold_perm_count(3, j).unwrap(), BigInt::from(c));
        }
        assert_eq!(threshold_perm_count(4, 0).unwrap(), BigInt::from(7));
        assert!(threshold_perm_count(1, 0).is_err());
    }

    #[test]
    fn special_pair_forward_examples() {
        let p = SpecialPair::from_ambient(3, &[1, -5, 7, -2, 4, -6]).unwrap();
        assert_eq!(
            special_pair_to_normal(&p),
            sp(&[-3, -1, -5, 7, -2, 4, -6])
        );
        let p = SpecialPair::from_ambient(1, &[-2]).unwrap();
        assert_eq!(special_pair_to_normal(&p), sp(&[1, -2]));
        let p = SpecialPair::from_ambient(2, &[1]).unwrap();
        assert_eq!(special_pair_to_normal(&p), sp(&[-2, -1]));
    }

    #[test]
    fn special_pair_inverse_examples() {
        let p = normal_to_special_pair(&sp(&[-3, -1, -5, 7, -2, 4, -6])).unwrap();
        assert_eq!(p.b(), 3);
        assert_eq!(p.ambient_entries(), vec![1, -5, 7, -2, 4, -6]);

        let p = normal_to_special_pair(&sp(&[1, 2])).unwrap();
        assert_eq!(p.b(), 1);
        assert_eq!(p.ambient_entries(), vec![2]);

        let p = normal_to_special_pair(&sp(&[2, -1])).unwrap();
        assert_eq!(p.b(), 2);
        assert_eq!(p.ambient_entries(), vec![-1]);

        // threshold permutations are outside the image
        assert!(normal_to_special_pair(&sp(&[-1, 2])).is_err());
        // non-normal input
        assert!(normal_to_special_pair(&sp(&[2, 1])).is_err());
    }
}
