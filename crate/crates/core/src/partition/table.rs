//! Named integer sequences over `n` and tables of their values.

use std::collections::BTreeMap;
use std::fmt;

use super::frobenius::{frobenius_count, FrobeniusPredicate};
use super::stats::{crank_count, crank_le0_by_parity, distinct_count, mex_count};
use super::{enumerate_partitions, Parity, PartitionError};

/// Leading terms `a(0..=30)` of OEIS A064428 (partitions of `n` with
/// nonnegative crank), as published in the encyclopedia. Kept as a fixed
/// table so the odd-mex counts can be cross-checked offline.
pub const A064428_PREFIX: [u64; 31] = [
    1, 0, 1, 2, 3, 4, 6, 8, 12, 16, 23, 30, 42, 54, 73, 94, 124, 158, 206, 260, 334, 420, 532, 664,
    835, 1034, 1288, 1588, 1962, 2404, 2953,
];

/// A named counting function of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    /// `p(n)`.
    Partitions,
    /// `q(n)`, `q^o(n)`, `q^e(n)`.
    Distinct(Option<Parity>),
    /// `m_{a,b}(n)` with an optional length-parity filter.
    Mex {
        residue: u32,
        modulus: u32,
        parity: Option<Parity>,
    },
    /// `M(m, n)`.
    CrankEquals(i64),
    /// Number of partitions with crank at least `j` (conventions at `n <= 1`).
    CrankAtLeast(i64),
    /// Number of partitions with crank at most 0, optionally by length parity.
    CrankAtMostZero(Option<Parity>),
    /// Frobenius symbols with no 0 (the `a(n)` of the crank-0 count).
    FrobeniusNoZero,
    /// Frobenius symbols with no `j` in the top row.
    FrobeniusNoJInTop(u32),
    /// Frobenius symbols with no 0 whose first two bottom entries differ by 1.
    FrobeniusCrankZeroImage,
}

impl Statistic {
    /// Looks a statistic up by its command-line name. `j` and `m` supply the
    /// parameter of the crank and Frobenius families.
    pub fn parse(name: &str, j: Option<i64>, m: Option<i64>) -> Result<Self, PartitionError> {
        let parity = |suffix: &str| match suffix {
            "" => Some(None),
            "_o" => Some(Some(Parity::Odd)),
            "_e" => Some(Some(Parity::Even)),
            _ => None,
        };
        let unknown = || PartitionError::UnknownStatistic(name.to_string());
        let stat = match name {
            "p" => Statistic::Partitions,
            "crank" => Statistic::CrankEquals(m.unwrap_or(0)),
            "crank_ge" => Statistic::CrankAtLeast(j.unwrap_or(0)),
            "frob_no_zero" => Statistic::FrobeniusNoZero,
            "frob_no_j_top" => {
                let j = u32::try_from(j.unwrap_or(0)).map_err(|_| unknown())?;
                Statistic::FrobeniusNoJInTop(j)
            }
            "frob_crank0" => Statistic::FrobeniusCrankZeroImage,
            _ => {
                if let Some(rest) = name.strip_prefix("crank_le0") {
                    Statistic::CrankAtMostZero(parity(rest).ok_or_else(unknown)?)
                } else if let Some(rest) = name.strip_prefix("q") {
                    Statistic::Distinct(parity(rest).ok_or_else(unknown)?)
                } else if let Some(rest) = name.strip_prefix("m_") {
                    let (a, rest) = rest.split_once('_').ok_or_else(unknown)?;
                    let (b, suffix) = match rest.find('_') {
                        Some(i) => rest.split_at(i),
                        None => (rest, ""),
                    };
                    let residue: u32 = a.parse().map_err(|_| unknown())?;
                    let modulus: u32 = b.parse().map_err(|_| unknown())?;
                    if modulus != 2 && modulus != 4 {
                        return Err(PartitionError::UnsupportedModulus(modulus));
                    }
                    if residue >= modulus {
                        return Err(PartitionError::ResidueOutOfRange { residue, modulus });
                    }
                    Statistic::Mex {
                        residue,
                        modulus,
                        parity: parity(suffix).ok_or_else(unknown)?,
                    }
                } else {
                    return Err(unknown());
                }
            }
        };
        Ok(stat)
    }

    pub fn value(&self, n: u32) -> i64 {
        match *self {
            Statistic::Partitions => enumerate_partitions(n).len() as i64,
            Statistic::Distinct(parity) => distinct_count(n, parity) as i64,
            Statistic::Mex {
                residue,
                modulus,
                parity,
            } => mex_count(residue, modulus, n, parity).expect("modulus validated at construction")
                as i64,
            Statistic::CrankEquals(m) => crank_count(n, |c| c == m),
            Statistic::CrankAtLeast(j) => crank_count(n, |c| c >= j),
            Statistic::CrankAtMostZero(None) => {
                (crank_le0_by_parity(n, Parity::Odd) + crank_le0_by_parity(n, Parity::Even)) as i64
            }
            Statistic::CrankAtMostZero(Some(parity)) => crank_le0_by_parity(n, parity) as i64,
            Statistic::FrobeniusNoZero => frobenius_count(n, &[FrobeniusPredicate::NoZero]) as i64,
            Statistic::FrobeniusNoJInTop(j) => {
                frobenius_count(n, &[FrobeniusPredicate::NoJInTopRow(j)]) as i64
            }
            Statistic::FrobeniusCrankZeroImage => frobenius_count(
                n,
                &[
                    FrobeniusPredicate::NoZero,
                    FrobeniusPredicate::BottomFirstTwoDifferByOne,
                ],
            ) as i64,
        }
    }

    /// Parameters as `(name, value)` pairs, for report headers.
    pub fn params(&self) -> Vec<(&'static str, i64)> {
        match *self {
            Statistic::CrankEquals(m) => vec![("m", m)],
            Statistic::CrankAtLeast(j) => vec![("j", j)],
            Statistic::FrobeniusNoJInTop(j) => vec![("j", i64::from(j))],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = |parity: Option<Parity>| match parity {
            None => "",
            Some(Parity::Odd) => "_o",
            Some(Parity::Even) => "_e",
        };
        match *self {
            Statistic::Partitions => write!(f, "p"),
            Statistic::Distinct(par) => write!(f, "q{}", suffix(par)),
            Statistic::Mex {
                residue,
                modulus,
                parity,
            } => write!(f, "m_{residue}_{modulus}{}", suffix(parity)),
            Statistic::CrankEquals(_) => write!(f, "crank"),
            Statistic::CrankAtLeast(_) => write!(f, "crank_ge"),
            Statistic::CrankAtMostZero(par) => write!(f, "crank_le0{}", suffix(par)),
            Statistic::FrobeniusNoZero => write!(f, "frob_no_zero"),
            Statistic::FrobeniusNoJInTop(_) => write!(f, "frob_no_j_top"),
            Statistic::FrobeniusCrankZeroImage => write!(f, "frob_crank0"),
        }
    }
}

/// Values of named statistics keyed by `(parameter tuple, n)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatTable {
    pub name: String,
    pub values: BTreeMap<(Vec<i64>, u32), i64>,
}

impl StatTable {
    pub fn new(name: impl Into<String>) -> Self {
        StatTable {
            name: name.into(),
            values: BTreeMap::new(),
        }
    }

    /// Tabulates `stat` for every `n` in `range`.
    pub fn compute(stat: Statistic, range: std::ops::RangeInclusive<u32>) -> Self {
        let key: Vec<i64> = stat.params().into_iter().map(|(_, v)| v).collect();
        let mut table = StatTable::new(stat.to_string());
        for n in range {
            table.values.insert((key.clone(), n), stat.value(n));
        }
        table
    }

    pub fn get(&self, params: &[i64], n: u32) -> Option<i64> {
        self.values.get(&(params.to_vec(), n)).copied()
    }

    /// Values for one parameter tuple, in increasing `n`.
    pub fn row(&self, params: &[i64]) -> Vec<(u32, i64)> {
        self.values
            .iter()
            .filter(|((p, _), _)| p.as_slice() == params)
            .map(|((_, n), &v)| (*n, v))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!(
            Statistic::parse("m_1_2", None, None).unwrap(),
            Statistic::Mex {
                residue: 1,
                modulus: 2,
                parity: None
            }
        );
        assert_eq!(
            Statistic::parse("m_3_4_e", None, None).unwrap(),
            Statistic::Mex {
                residue: 3,
                modulus: 4,
                parity: Some(Parity::Even)
            }
        );
        assert_eq!(
            Statistic::parse("crank_ge", Some(2), None).unwrap(),
            Statistic::CrankAtLeast(2)
        );
        assert_eq!(
            Statistic::parse("q_o", None, None).unwrap(),
            Statistic::Distinct(Some(Parity::Odd))
        );
        assert!(Statistic::parse("m_1_3", None, None).is_err());
        assert!(Statistic::parse("bogus", None, None).is_err());
        for name in ["m_1_4_o", "crank_le0_e", "q", "p", "frob_crank0"] {
            assert_eq!(
                Statistic::parse(name, None, None).unwrap().to_string(),
                name
            );
        }
    }

    #[test]
    fn odd_mex_row_matches_table_prefix() {
        let stat = Statistic::parse("m_1_2", None, None).unwrap();
        let table = StatTable::compute(stat, 2..=15);
        let row: Vec<i64> = table.row(&[]).into_iter().map(|(_, v)| v).collect();
        assert_eq!(row, [1, 2, 3, 4, 6, 8, 12, 16, 23, 30, 42, 54, 73, 94]);
    }

    #[test]
    fn crank_ge_zero_matches_odd_mex_from_zero() {
        let a = StatTable::compute(Statistic::CrankAtLeast(0), 0..=10);
        let b = StatTable::compute(Statistic::parse("m_1_2", None, None).unwrap(), 0..=10);
        assert_eq!(a.row(&[0]), b.row(&[]));
    }
}
