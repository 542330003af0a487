use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Exact histogram of a combinatorial statistic: statistic value `j` mapped
/// to the number of objects attaining it. Only nonzero counts are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    statistic: String,
    n: usize,
    counts: BTreeMap<usize, BigInt>,
}

impl DistributionTable {
    pub fn new(statistic: impl Into<String>, n: usize) -> Self {
        DistributionTable {
            statistic: statistic.into(),
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn statistic(&self) -> &str {
        &self.statistic
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Records one object with statistic value `j`.
    pub fn record(&mut self, j: usize) {
        *self.counts.entry(j).or_insert_with(BigInt::zero) += BigInt::one();
    }

    pub fn add(&mut self, j: usize, count: BigInt) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry(j).or_insert_with(BigInt::zero) += count;
    }

    /// Merges another histogram in; associative and commutative, so parallel
    /// partial histograms reduce to a deterministic total.
    pub fn merge(&mut self, other: DistributionTable) {
        for (j, c) in other.counts {
            self.add(j, c);
        }
    }

    /// Count for statistic value `j`, zero when absent.
    pub fn get(&self, j: usize) -> BigInt {
        self.counts.get(&j).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.counts.iter().map(|(&j, c)| (j, c))
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    pub fn max_value(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }
}

impl fmt::Display for DistributionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in &self.counts {
            writeln!(f, "{j} {c}")?;
        }
        Ok(())
    }
}

/// JSON schema: `{"statistic": str, "n": int, "counts": {"j": count, ...}}`.
impl Serialize for DistributionTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DistributionTable", 3)?;
        st.serialize_field("statistic", &self.statistic)?;
        st.serialize_field("n", &self.n)?;
        let counts: BTreeMap<String, serde_json::Number> = self
            .counts
            .iter()
            .map(|(j, c)| {
                let num = serde_json::Number::from_str(&c.to_string())
                    .map_err(|_| serde::ser::Error::custom("unrepresentable count"))?;
                Ok((j.to_string(), num))
            })
            .collect::<Result<_, S::Error>>()?;
        st.serialize_field("counts", &counts)?;
        st.end()
    }
}
