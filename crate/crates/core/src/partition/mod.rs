//! Integer partitions and their statistics.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts. The empty
//! partition is the unique partition of 0. Enumeration is always in
//! lexicographically decreasing order so that traces and tables are
//! reproducible.

mod enumerate;
mod frobenius;
mod stats;
mod table;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use enumerate::{
    enumerate_distinct_partitions, enumerate_partitions, enumerate_partitions_bounded,
    for_each_partition, for_each_partition_bounded,
};
pub use frobenius::{frobenius_count, FrobeniusPredicate, FrobeniusSymbol};
pub use stats::{
    crank_count, crank_le0_by_parity, crank_m, distinct_count, mex_count, pentagonal_double_sign,
    CrankTable,
};
pub use table::{StatTable, Statistic, A064428_PREFIX};

pub(crate) use stats::{crank_of, durfee_rect_of};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("syntax error in partition text {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error("parts must be weakly decreasing: part {index} ({next}) exceeds the preceding part ({prev})")]
    NotDecreasing { index: usize, prev: u32, next: u32 },
    #[error("parts must be positive integers, found {0}")]
    NonPositivePart(i64),
    #[error("invalid Frobenius symbol: {0}")]
    Frobenius(String),
    #[error("unsupported mex modulus {0} (expected 2 or 4)")]
    UnsupportedModulus(u32),
    #[error("residue {residue} out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u32, modulus: u32 },
    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),
}

/// Length parity filter used by the refined counting functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(len: usize) -> Parity {
        if len.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn matches(self, len: usize) -> bool {
        Parity::of(len) == self
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(&0) = parts.last() {
            return Err(PartitionError::NonPositivePart(0));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing {
                index: i + 1,
                prev: parts[i],
                next: parts[i + 1],
            });
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// The `i`-th part (0-indexed), with zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn contains(&self, value: u32) -> bool {
        self.parts.contains(&value)
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest().unwrap_or(0) as usize;
        let mut conj = vec![0u32; width];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    /// Returns a new partition with `value` inserted at its sorted position.
    pub fn with_part(&self, value: u32) -> Partition {
        let mut parts = self.parts.clone();
        insert_part(&mut parts, value);
        Partition { parts }
    }

    /// Returns a new partition with one copy of `value` removed, if present.
    pub fn without_part(&self, value: u32) -> Option<Partition> {
        let idx = self.parts.iter().rposition(|&p| p == value)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }
}

pub(crate) fn insert_part(parts: &mut Vec<u32>, value: u32) {
    if value == 0 {
        return;
    }
    let idx = parts.partition_point(|&p| p >= value);
    parts.insert(idx, value);
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_partition(s)
    }
}

/// Parses the comma-separated text form; the empty string is the empty
/// partition.
pub fn parse_partition(text: &str) -> Result<Partition, PartitionError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for token in trimmed.split(',') {
        let token = token.trim();
        let value: i64 = token.parse().map_err(|_| PartitionError::Syntax {
            text: text.to_string(),
            reason: format!("{token:?} is not an integer"),
        })?;
        if value <= 0 {
            return Err(PartitionError::NonPositivePart(value));
        }
        let value = u32::try_from(value).map_err(|_| PartitionError::Syntax {
            text: text.to_string(),
            reason: format!("part {value} is too large"),
        })?;
        parts.push(value);
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_partition("5,4,4,2,2").unwrap(), p(&[5, 4, 4, 2, 2]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert!(matches!(
            parse_partition("2,3"),
            Err(PartitionError::NotDecreasing {
                index: 1,
                prev: 2,
                next: 3
            })
        ));
        assert!(matches!(
            parse_partition("3,0"),
            Err(PartitionError::NonPositivePart(0))
        ));
        assert!(matches!(
            parse_partition("3,-1"),
            Err(PartitionError::NonPositivePart(-1))
        ));
        assert!(matches!(
            parse_partition("3,x"),
            Err(PartitionError::Syntax { .. })
        ));
    }

    #[test]
    fn display_roundtrip() {
        let q = p(&[5, 4, 4, 2, 2]);
        assert_eq!(q.to_string(), "5,4,4,2,2");
        assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 4, 4, 2, 2]).conjugate(), p(&[5, 5, 3, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[6]).conjugate(), p(&[1; 6]));
    }

    #[test]
    fn conjugate_is_an_involution_up_to_18() {
        for n in 0..=18 {
            for q in enumerate_partitions(n) {
                let c = q.conjugate();
                assert_eq!(c.weight(), q.weight());
                assert_eq!(c.conjugate(), q);
            }
        }
    }

    #[test]
    fn insert_and_remove_parts() {
        let q = p(&[4, 2, 1]);
        assert_eq!(q.with_part(2), p(&[4, 2, 2, 1]));
        assert_eq!(q.with_part(5), p(&[5, 4, 2, 1]));
        assert_eq!(q.without_part(2), Some(p(&[4, 1])));
        assert_eq!(q.without_part(3), None);
    }
}
