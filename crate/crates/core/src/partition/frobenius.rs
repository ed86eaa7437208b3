use std::fmt;
use std::str::FromStr;

use super::enumerate::for_each_partition;
use super::stats::durfee_rect_of;
use super::{Partition, PartitionError};

/// Two strictly decreasing rows of nonnegative integers of equal length.
///
/// Column `i` records the arm (`top[i]`) and leg (`bottom[i]`) of the `i`-th
/// diagonal box of the Ferrers diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FrobeniusSymbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl FrobeniusSymbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self, PartitionError> {
        if top.len() != bottom.len() {
            return Err(PartitionError::Frobenius(format!(
                "rows have different lengths ({} and {})",
                top.len(),
                bottom.len()
            )));
        }
        for (name, row) in [("top", &top), ("bottom", &bottom)] {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(PartitionError::Frobenius(format!(
                    "{name} row is not strictly decreasing"
                )));
            }
        }
        Ok(FrobeniusSymbol { top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Number of columns (the Durfee square side).
    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// Weight of the corresponding partition.
    pub fn weight(&self) -> u64 {
        let sum = |row: &[u32]| row.iter().map(|&v| u64::from(v)).sum::<u64>();
        self.top.len() as u64 + sum(&self.top) + sum(&self.bottom)
    }

    pub fn has_zero(&self) -> bool {
        self.top.last() == Some(&0) || self.bottom.last() == Some(&0)
    }

    pub fn top_contains(&self, value: u32) -> bool {
        self.top.contains(&value)
    }

    /// Whether the first two bottom entries differ by exactly 1.
    ///
    /// A single-column symbol is read with a missing second entry of 0, so it
    /// qualifies iff its bottom entry is 1; the empty symbol qualifies.
    pub fn bottom_first_two_differ_by_one(&self) -> bool {
        match self.bottom.as_slice() {
            [] => true,
            [b0] => *b0 == 1,
            [b0, b1, ..] => b0 - b1 == 1,
        }
    }

    pub fn to_partition(&self) -> Partition {
        let d = self.len();
        let mut parts: Vec<u32> = self
            .top
            .iter()
            .enumerate()
            .map(|(i, &t)| t + i as u32 + 1)
            .collect();
        // columns below the diagonal, as conjugate lengths
        let cols: Vec<u32> = self
            .bottom
            .iter()
            .enumerate()
            .map(|(i, &b)| b + i as u32 + 1)
            .collect();
        let mut row = d as u32;
        loop {
            let len = cols.iter().filter(|&&c| c > row).count() as u32;
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        Partition::from_sorted_unchecked(parts)
    }
}

impl Partition {
    pub fn frobenius(&self) -> FrobeniusSymbol {
        let d = durfee_rect_of(self.parts(), 0);
        let conj = self.conjugate();
        let top = (0..d).map(|i| self.part(i) - i as u32 - 1).collect();
        let bottom = (0..d).map(|i| conj.part(i) - i as u32 - 1).collect();
        FrobeniusSymbol { top, bottom }
    }
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[u32]| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}|{}", join(&self.top), join(&self.bottom))
    }
}

impl FromStr for FrobeniusSymbol {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (top, bottom) = s
            .split_once('|')
            .ok_or_else(|| PartitionError::Frobenius(format!("missing '|' in {s:?}")))?;
        let row = |text: &str| -> Result<Vec<u32>, PartitionError> {
            let text = text.trim();
            if text.is_empty() {
                return Ok(Vec::new());
            }
            text.split(',')
                .map(|t| {
                    t.trim().parse::<u32>().map_err(|_| {
                        PartitionError::Frobenius(format!("{t:?} is not a nonnegative integer"))
                    })
                })
                .collect()
        };
        FrobeniusSymbol::new(row(top)?, row(bottom)?)
    }
}

/// Restrictions on Frobenius symbols used by the crank/Frobenius counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusPredicate {
    /// No entry 0 in either row.
    NoZero,
    /// The value `j` does not occur in the top row.
    NoJInTopRow(u32),
    /// See [`FrobeniusSymbol::bottom_first_two_differ_by_one`].
    BottomFirstTwoDifferByOne,
}

impl FrobeniusPredicate {
    pub fn holds(self, symbol: &FrobeniusSymbol) -> bool {
        match self {
            FrobeniusPredicate::NoZero => !symbol.has_zero(),
            FrobeniusPredicate::NoJInTopRow(j) => !symbol.top_contains(j),
            FrobeniusPredicate::BottomFirstTwoDifferByOne => {
                symbol.bottom_first_two_differ_by_one()
            }
        }
    }
}

/// Number of partitions of `n` whose Frobenius symbol satisfies every
/// predicate in `preds`.
pub fn frobenius_count(n: u32, preds: &[FrobeniusPredicate]) -> u64 {
    let mut count = 0;
    for_each_partition(n, |parts| {
        let symbol = Partition::from_sorted_unchecked(parts.to_vec()).frobenius();
        if preds.iter().all(|pred| pred.holds(&symbol)) {
            count += 1;
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    #[test]
    fn symbol_of_example() {
        let p: Partition = "5,4,4,2,2".parse().unwrap();
        let f = p.frobenius();
        assert_eq!(f.top(), &[4, 2, 1]);
        assert_eq!(f.bottom(), &[4, 3, 0]);
        assert_eq!(f.to_string(), "4,2,1|4,3,0");
        assert_eq!(f.to_partition(), p);
    }

    #[test]
    fn trivial_symbols() {
        assert_eq!(Partition::empty().frobenius(), FrobeniusSymbol::default());
        assert_eq!(FrobeniusSymbol::default().to_string(), "|");
        let one: Partition = "1".parse().unwrap();
        assert_eq!(one.frobenius().to_string(), "0|0");
    }

    #[test]
    fn rejects_malformed_rows() {
        assert!(FrobeniusSymbol::new(vec![2, 2], vec![1, 0]).is_err());
        assert!(FrobeniusSymbol::new(vec![2], vec![1, 0]).is_err());
        assert!("3,1|2".parse::<FrobeniusSymbol>().is_err());
        assert!("3,1 2,0".parse::<FrobeniusSymbol>().is_err());
        assert_eq!(
            "|".parse::<FrobeniusSymbol>().unwrap(),
            FrobeniusSymbol::default()
        );
    }

    #[test]
    fn roundtrip_and_weight_up_to_18() {
        for n in 0..=18 {
            for p in enumerate_partitions(n) {
                let f = p.frobenius();
                assert_eq!(f.weight(), u64::from(n));
                assert_eq!(f.to_partition(), p);
                let reparsed: FrobeniusSymbol = f.to_string().parse().unwrap();
                assert_eq!(reparsed, f);
            }
        }
    }

    #[test]
    fn count_examples() {
        use FrobeniusPredicate::*;
        assert_eq!(frobenius_count(2, &[NoZero]), 0);
        assert_eq!(frobenius_count(4, &[NoZero]), 2);
        assert_eq!(frobenius_count(4, &[NoJInTopRow(0)]), 3);
    }
}
