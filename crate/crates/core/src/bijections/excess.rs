//! The bijection behind `1/(q;q)_d = [n choose d] / (q^{n-d+1};q)_d`.
//!
//! A partition into at most `d` parts is split into a multiset of "high"
//! parts in `[n-d+1, n]` and a partition fitting in a `d × (n-d)` box.
//!
//! We work with the strictly decreasing sequence `a_i = p_i + (d-1-i)`
//! (padding `p` with zeros to length `d`). With `m = n - d`, as long as the
//! largest entry is at least `n`, it is removed and replaced by
//! `c = a_1 - m - r`, where `r` in `1..=d` is the unique value for which `c`
//! is not already present and exactly `r - 1` other entries exceed `c`.
//! The removed amount `m + r` becomes a high part. The sequence of `r`
//! values is weakly increasing, which makes the process reversible.

use super::BijectionError;
use crate::partition::Partition;

fn shape_error(msg: String) -> BijectionError {
    BijectionError::Precondition(msg)
}

/// Splits `p` (at most `d` parts) into `(high, low)`.
pub fn kth_excess_split(
    p: &Partition,
    n: u32,
    d: usize,
) -> Result<(Partition, Partition), BijectionError> {
    if d as u64 > u64::from(n) {
        return Err(shape_error(format!("need d <= n, got d = {d}, n = {n}")));
    }
    if p.len() > d {
        return Err(shape_error(format!("{p} has more than {d} parts")));
    }
    let m = u64::from(n) - d as u64;
    let mut a: Vec<u64> = (0..d)
        .map(|i| u64::from(p.part(i)) + (d - 1 - i) as u64)
        .collect();
    let mut high = Vec::new();
    while let Some(&top) = a.first() {
        if top < u64::from(n) {
            break;
        }
        let others = &a[1..];
        let r = (1..=d as u64)
            .find(|&r| {
                let c = top - m - r;
                !others.contains(&c) && others.iter().filter(|&&o| o > c).count() as u64 == r - 1
            })
            .expect("a unique slot exists for every top entry >= n");
        let c = top - m - r;
        a.remove(0);
        let pos = a.partition_point(|&o| o > c);
        a.insert(pos, c);
        high.push((m + r) as u32);
    }
    let low = (0..d).map(|i| (a[i] - (d - 1 - i) as u64) as u32);
    Ok((
        Partition::from_unsorted(high),
        Partition::from_unsorted(low),
    ))
}

/// Inverse of [`kth_excess_split`].
pub fn kth_excess_merge(
    high: &Partition,
    low: &Partition,
    n: u32,
    d: usize,
) -> Result<Partition, BijectionError> {
    if d as u64 > u64::from(n) {
        return Err(shape_error(format!("need d <= n, got d = {d}, n = {n}")));
    }
    let m = n - d as u32;
    if low.len() > d || low.largest().is_some_and(|x| x > m) {
        return Err(shape_error(format!(
            "{low} does not fit in a {d} x {m} box"
        )));
    }
    if let Some(&h) = high.parts().iter().find(|&&h| h <= m || h > n) {
        return Err(shape_error(format!(
            "high part {h} is outside [{}, {n}]",
            m + 1
        )));
    }
    let mut a: Vec<u64> = (0..d)
        .map(|i| u64::from(low.part(i)) + (d - 1 - i) as u64)
        .collect();
    // undo the splitting steps, last one first
    for &h in high.parts() {
        let r = (h - m) as usize;
        let c = a.remove(r - 1);
        let top = c + u64::from(m) + r as u64;
        let pos = a.partition_point(|&o| o > top);
        a.insert(pos, top);
    }
    let parts = (0..d).map(|i| (a[i] - (d - 1 - i) as u64) as u32);
    Ok(Partition::from_unsorted(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions_bounded;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let (high, low) = kth_excess_split(&p("7,1"), 5, 2).unwrap();
        assert_eq!(high, p("4"));
        assert_eq!(low, p("3,1"));
        assert_eq!(kth_excess_merge(&high, &low, 5, 2).unwrap(), p("7,1"));
    }

    #[test]
    fn empty_input() {
        for (n, d) in [(0, 0), (4, 2), (6, 6)] {
            let (high, low) = kth_excess_split(&Partition::empty(), n, d).unwrap();
            assert!(high.is_empty() && low.is_empty());
        }
    }

    #[test]
    fn shape_errors() {
        assert!(kth_excess_split(&p("3,2,1"), 5, 2).is_err());
        assert!(kth_excess_split(&p("1"), 1, 2).is_err());
        assert!(kth_excess_merge(&p("3"), &p(""), 5, 2).is_err());
        assert!(kth_excess_merge(&p("6"), &p(""), 5, 2).is_err());
        assert!(kth_excess_merge(&p("4"), &p("4"), 5, 2).is_err());
    }

    #[test]
    fn roundtrip_and_shapes_exhaustive() {
        for n in 0..=7u32 {
            for d in 0..=n as usize {
                for w in 0..=14 {
                    for q in enumerate_partitions_bounded(w, w, d) {
                        let (high, low) = kth_excess_split(&q, n, d).unwrap();
                        assert_eq!(high.weight() + low.weight(), q.weight());
                        assert!(low.len() <= d);
                        assert!(low.parts().iter().all(|&x| x <= n - d as u32));
                        assert!(high.parts().iter().all(|&x| x > n - d as u32 && x <= n));
                        assert_eq!(kth_excess_merge(&high, &low, n, d).unwrap(), q);
                    }
                }
            }
        }
    }

    /// Merge is injective on its whole domain too: every (high, low) pair of
    /// a given weight is hit exactly once.
    #[test]
    fn merge_is_a_bijection_by_count() {
        use std::collections::HashSet;
        let (n, d) = (6u32, 3usize);
        for w in 0..=12u32 {
            let mut seen = HashSet::new();
            let mut pairs = 0;
            for wl in 0..=w {
                for low in enumerate_partitions_bounded(wl, n - d as u32, d) {
                    for high in enumerate_partitions_bounded(w - wl, n, usize::MAX) {
                        if high.parts().iter().any(|&h| h <= n - d as u32) {
                            continue;
                        }
                        pairs += 1;
                        seen.insert(kth_excess_merge(&high, &low, n, d).unwrap());
                    }
                }
            }
            assert_eq!(seen.len(), pairs);
            assert_eq!(pairs, enumerate_partitions_bounded(w, w, d).len());
        }
    }
}
