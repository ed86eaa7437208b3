use super::Partition;

/// Visits every partition of `n` in lexicographically decreasing order.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, f: F) {
    for_each_partition_bounded(n, n, usize::MAX, f);
}

/// Visits every partition of `n` with parts at most `max_part` and at most
/// `max_len` parts, in lexicographically decreasing order.
pub fn for_each_partition_bounded<F: FnMut(&[u32])>(
    n: u32,
    max_part: u32,
    max_len: usize,
    mut f: F,
) {
    let mut buf = Vec::new();
    visit(n, max_part, max_len, &mut buf, &mut f);
}

fn visit<F: FnMut(&[u32])>(
    remaining: u32,
    max_part: u32,
    max_len: usize,
    buf: &mut Vec<u32>,
    f: &mut F,
) {
    if remaining == 0 {
        f(buf);
        return;
    }
    if buf.len() >= max_len {
        return;
    }
    let slots = (max_len - buf.len()) as u64;
    for part in (1..=remaining.min(max_part)).rev() {
        // the remaining slots cannot absorb more than `part` each
        if u64::from(part).saturating_mul(slots) < u64::from(remaining) {
            break;
        }
        buf.push(part);
        visit(remaining - part, part, max_len, buf, f);
        buf.pop();
    }
}

pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    enumerate_partitions_bounded(n, n, usize::MAX)
}

pub fn enumerate_partitions_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition_bounded(n, max_part, max_len, |parts| {
        out.push(Partition::from_sorted_unchecked(parts.to_vec()))
    });
    out
}

/// Partitions of `n` into distinct parts, lexicographically decreasing.
pub fn enumerate_distinct_partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, below: u32, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(buf.clone()));
            return;
        }
        let top = remaining.min(below.saturating_sub(1));
        for part in (1..=top).rev() {
            // 1 + 2 + ... + part must reach the remainder
            if u64::from(part) * u64::from(part + 1) / 2 < u64::from(remaining) {
                break;
            }
            buf.push(part);
            go(remaining - part, part, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n + 1, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// p(n) by the pentagonal recurrence, independent of the enumerator.
    fn partition_numbers(max: usize) -> Vec<u64> {
        let mut p = vec![0i64; max + 1];
        p[0] = 1;
        for n in 1..=max as i64 {
            let mut total = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * p[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    total += sign * p[(n - g2) as usize];
                }
            }
            p[n as usize] = total;
        }
        p.into_iter().map(|v| v as u64).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<String> = enumerate_partitions(4)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn counts_match_recurrence() {
        let p = partition_numbers(30);
        for n in 0..=30u32 {
            assert_eq!(
                enumerate_partitions(n).len() as u64,
                p[n as usize],
                "p({n})"
            );
        }
    }

    #[test]
    fn order_is_strictly_lexicographically_decreasing() {
        for n in 0..=15 {
            let all = enumerate_partitions(n);
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts());
            }
        }
    }

    #[test]
    fn bounded_enumeration_respects_bounds() {
        let all = enumerate_partitions_bounded(12, 4, 3);
        assert!(!all.is_empty());
        for q in &all {
            assert!(q.len() <= 3 && q.largest().unwrap() <= 4);
            assert_eq!(q.weight(), 12);
        }
        let brute = enumerate_partitions(12)
            .into_iter()
            .filter(|q| q.len() <= 3 && q.largest().unwrap_or(0) <= 4)
            .count();
        assert_eq!(all.len(), brute);
    }

    #[test]
    fn distinct_partitions_match_filter() {
        for n in 0..=25 {
            let direct = enumerate_distinct_partitions(n);
            let filtered: Vec<Partition> = enumerate_partitions(n)
                .into_iter()
                .filter(|q| q.is_distinct())
                .collect();
            assert_eq!(direct, filtered, "n = {n}");
        }
    }
}
