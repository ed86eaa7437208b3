//! Crank, mex, Durfee rectangles and brute-force counts.
//!
//! `M(m, n)` follows the standard conventions at `n <= 1`:
//! `M(0,0) = M(1,1) = M(-1,1) = 1` and `M(0,1) = -1`. Enumeration alone would
//! give `M(-1,1) = 1` and zero elsewhere at `n = 1`. The empty partition is
//! assigned crank 0, which agrees with `M(0,0) = 1`.

use std::collections::BTreeMap;

use super::enumerate::{enumerate_distinct_partitions, for_each_partition};
use super::{Parity, Partition, PartitionError};

pub(crate) fn omega_of(parts: &[u32]) -> u32 {
    parts.iter().rev().take_while(|&&p| p == 1).count() as u32
}

pub(crate) fn crank_of(parts: &[u32]) -> i64 {
    let Some(&first) = parts.first() else {
        return 0;
    };
    let omega = omega_of(parts);
    if omega == 0 {
        i64::from(first)
    } else {
        let mu = parts.iter().take_while(|&&p| p > omega).count() as i64;
        mu - i64::from(omega)
    }
}

pub(crate) fn mex_of(parts: &[u32]) -> u32 {
    // parts are sorted decreasingly, so walk from the small end
    let mut candidate = 1;
    for &p in parts.iter().rev() {
        if p == candidate {
            candidate += 1;
        } else if p > candidate {
            break;
        }
    }
    candidate
}

pub(crate) fn durfee_rect_of(parts: &[u32], j: u32) -> usize {
    parts
        .iter()
        .enumerate()
        .take_while(|&(i, &p)| u64::from(p) >= i as u64 + 1 + u64::from(j))
        .count()
}

impl Partition {
    /// Number of parts equal to 1.
    pub fn omega(&self) -> u32 {
        omega_of(self.parts())
    }

    /// Number of parts strictly greater than [`Partition::omega`].
    pub fn mu(&self) -> u32 {
        let omega = self.omega();
        self.parts().iter().filter(|&&p| p > omega).count() as u32
    }

    /// Dyson's crank: the largest part when there are no 1s, otherwise
    /// `mu - omega`. The empty partition has crank 0.
    pub fn crank(&self) -> i64 {
        crank_of(self.parts())
    }

    /// Smallest positive integer that is not a part.
    pub fn mex(&self) -> u32 {
        mex_of(self.parts())
    }

    /// Side `d` of the largest `d x (d + j)` rectangle in the Ferrers
    /// diagram, i.e. the largest `d` with `parts[d-1] >= d + j`.
    pub fn durfee_rect(&self, j: u32) -> usize {
        durfee_rect_of(self.parts(), j)
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.durfee_rect(0)
    }
}

/// Crank histograms for every weight `0..=max_n`, conventions included.
#[derive(Debug, Clone)]
pub struct CrankTable {
    rows: Vec<BTreeMap<i64, i64>>,
}

impl CrankTable {
    pub fn new(max_n: u32) -> Self {
        let rows = (0..=max_n).map(crank_histogram).collect();
        CrankTable { rows }
    }

    pub fn max_n(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    /// `M(m, n)`; panics if `n` exceeds the table range.
    pub fn m(&self, m: i64, n: u32) -> i64 {
        self.rows[n as usize].get(&m).copied().unwrap_or(0)
    }

    /// Sum of `M(m, n)` over the cranks `m` accepted by `pred`.
    pub fn count<P: Fn(i64) -> bool>(&self, n: u32, pred: P) -> i64 {
        self.rows[n as usize]
            .iter()
            .filter(|(&m, _)| pred(m))
            .map(|(_, &c)| c)
            .sum()
    }

    pub fn row(&self, n: u32) -> &BTreeMap<i64, i64> {
        &self.rows[n as usize]
    }
}

fn crank_histogram(n: u32) -> BTreeMap<i64, i64> {
    let mut hist = BTreeMap::new();
    match n {
        0 => {
            hist.insert(0, 1);
        }
        1 => {
            hist.insert(-1, 1);
            hist.insert(0, -1);
            hist.insert(1, 1);
        }
        _ => for_each_partition(n, |parts| {
            *hist.entry(crank_of(parts)).or_insert(0) += 1;
        }),
    }
    hist
}

/// `M(m, n)`, the number of partitions of `n` with crank `m` (with the
/// conventions at `n <= 1`).
pub fn crank_m(m: i64, n: u32) -> i64 {
    crank_histogram(n).get(&m).copied().unwrap_or(0)
}

/// Sum of `M(m, n)` over cranks accepted by `pred`, using the same
/// conventions as [`crank_m`].
pub fn crank_count<P: Fn(i64) -> bool>(n: u32, pred: P) -> i64 {
    crank_histogram(n)
        .into_iter()
        .filter(|(m, _)| pred(*m))
        .map(|(_, c)| c)
        .sum()
}

/// `m_{a,b}(n)`: partitions of `n` whose mex is congruent to `a` mod `b`,
/// optionally restricted by length parity. Only `b` in {2, 4} is supported.
pub fn mex_count(a: u32, b: u32, n: u32, parity: Option<Parity>) -> Result<u64, PartitionError> {
    if b != 2 && b != 4 {
        return Err(PartitionError::UnsupportedModulus(b));
    }
    if a >= b {
        return Err(PartitionError::ResidueOutOfRange {
            residue: a,
            modulus: b,
        });
    }
    let mut count = 0u64;
    for_each_partition(n, |parts| {
        if mex_of(parts) % b == a && parity.is_none_or(|par| par.matches(parts.len())) {
            count += 1;
        }
    });
    Ok(count)
}

/// `q(n)` and its length-parity refinements.
pub fn distinct_count(n: u32, parity: Option<Parity>) -> u64 {
    enumerate_distinct_partitions(n)
        .iter()
        .filter(|p| parity.is_none_or(|par| par.matches(p.len())))
        .count() as u64
}

/// Partitions of `n` with crank at most 0 and the given length parity.
///
/// At `n = 1` the conventions give `M(0,1) + M(-1,1) = 0`, so both parities
/// are 0 there (enumeration alone would count the partition `1` once).
pub fn crank_le0_by_parity(n: u32, parity: Parity) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut count = 0u64;
    for_each_partition(n, |parts| {
        if crank_of(parts) <= 0 && parity.matches(parts.len()) {
            count += 1;
        }
    });
    count
}

/// `(-1)^(m+1)` when `n = m(3m ± 1)` for some `m >= 0`, otherwise 0.
pub fn pentagonal_double_sign(n: u64) -> i64 {
    for m in 0u64.. {
        let low = m * (3 * m).saturating_sub(1);
        if low > n {
            break;
        }
        if n == m * (3 * m + 1) || n == low {
            return if m % 2 == 0 { -1 } else { 1 };
        }
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn omega_mu_crank_examples() {
        assert_eq!(p(&[5, 4, 2, 2, 1, 1]).omega(), 2);
        assert_eq!(p(&[5, 4, 4, 2, 2]).omega(), 0);
        assert_eq!(Partition::empty().omega(), 0);
        assert_eq!(p(&[5, 4, 2, 2, 1, 1]).mu(), 2);
        assert_eq!(p(&[1, 1, 1]).mu(), 0);
        assert_eq!(p(&[3, 1]).mu(), 1);
        assert_eq!(p(&[5, 4, 4, 2, 2]).crank(), 5);
        assert_eq!(p(&[5, 4, 2, 2, 1, 1]).crank(), 0);
        assert_eq!(p(&[1]).crank(), -1);
        assert_eq!(Partition::empty().crank(), 0);
    }

    #[test]
    fn mex_examples() {
        assert_eq!(p(&[5, 4, 4, 2, 2]).mex(), 1);
        assert_eq!(p(&[5, 4, 2, 1, 1]).mex(), 3);
        assert_eq!(p(&[4, 3, 2, 1]).mex(), 5);
        assert_eq!(Partition::empty().mex(), 1);
    }

    #[test]
    fn durfee_examples() {
        let q = p(&[5, 4, 4, 2, 2]);
        let expected = [3, 3, 2, 1, 1, 0];
        for (j, &d) in expected.iter().enumerate() {
            assert_eq!(q.durfee_rect(j as u32), d, "j = {j}");
        }
        assert_eq!(Partition::empty().durfee_rect(3), 0);
    }

    #[test]
    fn crank_m_values() {
        assert_eq!(crank_m(0, 1), -1);
        assert_eq!(crank_m(1, 1), 1);
        assert_eq!(crank_m(-1, 1), 1);
        assert_eq!(crank_m(0, 0), 1);
        // partitions of 4 have cranks 4, 0, 2, -2, -4
        assert_eq!(crank_m(0, 4), 1);
        assert_eq!(crank_m(5, 5), 1);
    }

    #[test]
    fn crank_table_sums_to_partition_numbers_and_is_symmetric() {
        let table = CrankTable::new(30);
        for n in 0..=30 {
            let total: i64 = table.row(n).values().sum();
            assert_eq!(total, enumerate_partitions(n).len() as i64, "n = {n}");
            for m in -(n as i64) - 1..=n as i64 + 1 {
                assert_eq!(table.m(m, n), table.m(-m, n), "M({m},{n})");
            }
        }
    }

    #[test]
    fn nonnegative_crank_equals_odd_mex() {
        for n in 2..=30 {
            let crank_ge0 = crank_count(n, |m| m >= 0);
            let odd_mex = mex_count(1, 2, n, None).unwrap();
            assert_eq!(crank_ge0, odd_mex as i64, "n = {n}");
        }
    }

    #[test]
    fn mex_definitional_splits() {
        for n in 0..=30 {
            let m = |a, b, par| mex_count(a, b, n, par).unwrap();
            use Parity::*;
            assert_eq!(m(1, 2, None), m(1, 4, None) + m(3, 4, None));
            assert_eq!(m(1, 2, None), m(1, 2, Some(Odd)) + m(1, 2, Some(Even)));
            assert_eq!(m(1, 4, None), m(1, 4, Some(Odd)) + m(1, 4, Some(Even)));
            assert_eq!(m(3, 4, None), m(3, 4, Some(Odd)) + m(3, 4, Some(Even)));
            assert_eq!(m(1, 2, Some(Odd)), m(1, 4, Some(Odd)) + m(3, 4, Some(Odd)));
            assert_eq!(
                m(1, 2, Some(Even)),
                m(1, 4, Some(Even)) + m(3, 4, Some(Even))
            );
        }
    }

    #[test]
    fn mex_count_table_cells() {
        assert_eq!(mex_count(1, 2, 10, None).unwrap(), 23);
        assert_eq!(mex_count(1, 4, 8, None).unwrap(), 7);
        assert_eq!(mex_count(3, 4, 15, Some(Parity::Even)).unwrap(), 24);
        assert_eq!(
            mex_count(1, 3, 5, None),
            Err(PartitionError::UnsupportedModulus(3))
        );
        assert!(matches!(
            mex_count(5, 4, 5, None),
            Err(PartitionError::ResidueOutOfRange { .. })
        ));
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(distinct_count(5, None), 3);
        assert_eq!(distinct_count(5, Some(Parity::Odd)), 1);
        assert_eq!(distinct_count(5, Some(Parity::Even)), 2);
        assert_eq!(distinct_count(0, None), 1);
    }

    #[test]
    fn crank_and_mex_bounds() {
        for n in 1..=16u32 {
            for q in enumerate_partitions(n) {
                assert!(q.mex() <= n + 1);
                assert!(q.crank().unsigned_abs() <= u64::from(n));
            }
        }
    }

    #[test]
    fn durfee_rect_is_monotone_in_j() {
        for n in 0..=18 {
            for q in enumerate_partitions(n) {
                for j in 0..6 {
                    assert!(q.durfee_rect(j + 1) <= q.durfee_rect(j));
                }
            }
        }
    }

    #[test]
    fn pentagonal_doubles() {
        // m(3m-1), m(3m+1): 0, 2, 4, 10, 14, 24, 30, 44, 52
        let hits: Vec<u64> = (0..60)
            .filter(|&n| pentagonal_double_sign(n) != 0)
            .collect();
        assert_eq!(hits, [0, 2, 4, 10, 14, 24, 30, 44, 52]);
        assert_eq!(pentagonal_double_sign(0), -1);
        assert_eq!(pentagonal_double_sign(2), 1);
        assert_eq!(pentagonal_double_sign(4), 1);
        assert_eq!(pentagonal_double_sign(10), -1);
    }
}
