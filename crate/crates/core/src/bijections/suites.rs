//! Named verification suites: each runs the exhaustive harness on a map's
//! full domain up to a weight bound and compares the signed fixed-point
//! counts with an independent series expansion.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{
    check_injection, check_involution, cor36_involution, cor38_domain, cor38_fixed_point_map,
    cor38_involution, crank0_map, crank_le_neg_j_map, enumerate_adjusted, enumerate_cor36,
    enumerate_tj, first_cancellation, franklin, is_cor38_fixed, is_first_cancellation_fixed,
    is_pentagonal_staircase, second_cancellation, second_cancellation_adjust, signed_counts,
    AdjustedTriple, BijectionError, Cor36Triple, InjectionReport, MapReport, TripleTj,
};
use crate::partition::{
    crank_m, enumerate_distinct_partitions, for_each_partition, frobenius_count,
    FrobeniusPredicate, Partition,
};
use crate::qseries::{unilateral_sum, Count, QPochhammer, Series, SeriesError};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 7] = [
    "franklin",
    "first_cancellation",
    "second_cancellation",
    "cor36",
    "cor38",
    "crank0",
    "crank_le_neg_j",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    pub max_weight: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involution: Option<MapReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injection: Option<InjectionReport>,
    /// Counts by weight agree with the series or counting oracle.
    pub oracle_ok: bool,
    pub oracle_failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.oracle_ok
            && self.involution.as_ref().is_none_or(MapReport::passed)
            && self.injection.as_ref().is_none_or(InjectionReport::passed)
    }
}

fn partition_sign(p: &Partition) -> i8 {
    if p.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Compares `counts[w]` with the coefficient of `q^w` for every `w <= max`.
fn against_series(counts: &BTreeMap<u64, i64>, series: &Series, max: u32) -> Vec<String> {
    (0..=max)
        .filter_map(|w| {
            let got = counts.get(&u64::from(w)).copied().unwrap_or(0);
            let want = series.coeff(w as usize);
            (*want != got.into()).then(|| format!("weight {w}: counted {got}, series gives {want}"))
        })
        .collect()
}

fn fixed_counts<T, W, S>(
    report_domain: &[T],
    fixed: impl Fn(&T) -> bool,
    weight: W,
    sign: S,
) -> BTreeMap<u64, i64>
where
    W: Fn(&T) -> u64,
    S: Fn(&T) -> i8,
{
    let fixed: Vec<&T> = report_domain.iter().filter(|x| fixed(x)).collect();
    signed_counts(&fixed, |x| weight(x), |x| sign(x))
}

fn euler(order: usize) -> Result<Series, SeriesError> {
    QPochhammer::euler().expand(order)
}

/// `(1/(q;q)_∞) Σ_{n>=0} (-1)^n q^{n(n+1)/2 + j(n+1)}`, minus `(q;q)_∞`
/// when `j = 0`.
fn first_cancellation_oracle(j: u32, order: usize) -> Result<Series, SeriesError> {
    let j = i64::from(j);
    let sign = |n: i64| if n % 2 == 0 { 1 } else { -1 };
    let mut s = unilateral_sum(order, |n| n * (n + 1) / 2 + j * (n + 1), sign)?;
    QPochhammer::euler().divide(&mut s)?;
    if j == 0 {
        s = s.sub(&euler(order)?)?;
    }
    Ok(s)
}

/// `Σ_{d>=0} q^{(d+1)(d+j)} / ((q;q)_d (q;q)_{d+j})`.
fn corner_series(j: u32, order: usize) -> Result<Series, SeriesError> {
    let j = j as usize;
    let mut out = Series::zero(order);
    for d in 0.. {
        let e = (d + 1) * (d + j);
        if e > order {
            break;
        }
        let mut term = Series::monomial(order, e, 1);
        QPochhammer::new(1, 1, Count::Finite(d)).divide(&mut term)?;
        QPochhammer::new(1, 1, Count::Finite(d + j)).divide(&mut term)?;
        out = out.add(&term)?;
    }
    Ok(out)
}

fn franklin_suite(max_weight: u32) -> Result<SuiteReport, BijectionError> {
    let domain: Vec<Partition> = (0..=max_weight)
        .flat_map(enumerate_distinct_partitions)
        .collect();
    let report = check_involution(
        "franklin",
        &domain,
        franklin,
        Partition::weight,
        partition_sign,
        is_pentagonal_staircase,
    );
    let counts = fixed_counts(
        &domain,
        is_pentagonal_staircase,
        Partition::weight,
        partition_sign,
    );
    let oracle = euler(max_weight as usize).map_err(series_err)?;
    let mut failures = against_series(&counts, &oracle, max_weight);
    let totals = signed_counts(&domain, Partition::weight, partition_sign);
    failures.extend(against_series(&totals, &oracle, max_weight));
    Ok(finish(
        "franklin",
        None,
        max_weight,
        Some(report),
        None,
        failures,
    ))
}

fn first_cancellation_suite(j: u32, max_weight: u32) -> Result<SuiteReport, BijectionError> {
    let domain: Vec<_> = (0..=max_weight).flat_map(|w| enumerate_tj(j, w)).collect();
    let report = check_involution(
        "first_cancellation",
        &domain,
        |t| Ok(first_cancellation(t)),
        |t| t.weight(),
        |t| t.sign(),
        is_first_cancellation_fixed,
    );
    let counts = fixed_counts(
        &domain,
        is_first_cancellation_fixed,
        |t| t.weight(),
        |t| t.sign(),
    );
    let oracle = first_cancellation_oracle(j, max_weight as usize).map_err(series_err)?;
    let mut failures = against_series(&counts, &oracle, max_weight);
    let totals = signed_counts(&domain, |t| t.weight(), |t| t.sign());
    failures.extend(against_series(&totals, &oracle, max_weight));
    Ok(finish(
        "first_cancellation",
        Some(j),
        max_weight,
        Some(report),
        None,
        failures,
    ))
}

fn second_cancellation_suite(j: u32, max_weight: u32) -> Result<SuiteReport, BijectionError> {
    let triples: Vec<_> = (0..=max_weight).flat_map(|w| enumerate_tj(j, w)).collect();
    let adjusted: Vec<AdjustedTriple> = (0..=max_weight)
        .flat_map(|w| enumerate_adjusted(j, w))
        .collect();
    // (π; ∅; ∅) has no preimage when j = 0
    let image: Vec<AdjustedTriple> = adjusted
        .iter()
        .filter(|a| !(j == 0 && a.kappa.is_empty() && a.nu.is_empty()))
        .cloned()
        .collect();
    let injection = check_injection(
        "second_cancellation_adjust",
        &triples,
        &image,
        |t| Ok(second_cancellation_adjust(t)),
        TripleTj::weight,
        AdjustedTriple::weight,
        0,
    );
    let is_fixed = |a: &AdjustedTriple| a.pi.is_empty() && a.nu.is_empty();
    let report = check_involution(
        "second_cancellation",
        &adjusted,
        |a| Ok(second_cancellation(a)),
        AdjustedTriple::weight,
        AdjustedTriple::sign,
        is_fixed,
    );
    let counts = fixed_counts(
        &adjusted,
        is_fixed,
        AdjustedTriple::weight,
        AdjustedTriple::sign,
    );
    let order = max_weight as usize;
    let corner = corner_series(j, order).map_err(series_err)?;
    let mut failures = against_series(&counts, &corner, max_weight);
    let mut total = corner;
    if j == 0 {
        total = total
            .sub(&euler(order).map_err(series_err)?)
            .map_err(series_err)?;
    }
    let totals = signed_counts(&triples, |t| t.weight(), |t| t.sign());
    failures.extend(against_series(&totals, &total, max_weight));
    Ok(finish(
        "second_cancellation",
        Some(j),
        max_weight,
        Some(report),
        Some(injection),
        failures,
    ))
}

fn cor36_suite(max_weight: u32) -> Result<SuiteReport, BijectionError> {
    let domain: Vec<_> = (0..=max_weight).flat_map(enumerate_cor36).collect();
    let is_fixed = |t: &Cor36Triple| t.mu.is_empty() && t.nu.is_empty();
    let report = check_involution(
        "cor36",
        &domain,
        |t| Ok(cor36_involution(t)),
        |t| t.weight(),
        |t| t.sign(),
        is_fixed,
    );
    let counts = fixed_counts(&domain, is_fixed, |t| t.weight(), |t| t.sign());
    let order = max_weight as usize;
    let oracle = QPochhammer::new(2, 2, Count::Infinite)
        .expand(order)
        .map_err(series_err)?;
    let mut failures = against_series(&counts, &oracle, max_weight);
    let totals = signed_counts(&domain, |t| t.weight(), |t| t.sign());
    failures.extend(against_series(&totals, &oracle, max_weight));
    Ok(finish(
        "cor36",
        None,
        max_weight,
        Some(report),
        None,
        failures,
    ))
}

fn cor38_suite(max_weight: u32) -> Result<SuiteReport, BijectionError> {
    let domain: Vec<_> = (0..=max_weight).flat_map(cor38_domain).collect();
    let is_fixed = |p: &Partition| is_cor38_fixed(p).unwrap_or(false);
    let report = check_involution(
        "cor38",
        &domain,
        cor38_involution,
        Partition::weight,
        partition_sign,
        is_fixed,
    );
    let fixed: Vec<Partition> = domain.iter().filter(|p| is_fixed(p)).cloned().collect();
    let even_distinct: Vec<Partition> = (0..=max_weight / 2)
        .flat_map(enumerate_distinct_partitions)
        .map(|p| Partition::from_unsorted(p.parts().iter().map(|&x| 2 * x)))
        .collect();
    let injection = check_injection(
        "cor38_fixed",
        &fixed,
        &even_distinct,
        |p| cor38_fixed_point_map(p).map(|s| s.output),
        Partition::weight,
        Partition::weight,
        0,
    );
    let counts = fixed_counts(&domain, is_fixed, Partition::weight, partition_sign);
    let order = max_weight as usize;
    let oracle = QPochhammer::new(2, 2, Count::Infinite)
        .negated()
        .expand(order)
        .map_err(series_err)?;
    let mut failures = against_series(&counts, &oracle, max_weight);
    let totals = signed_counts(&domain, Partition::weight, partition_sign);
    failures.extend(against_series(&totals, &oracle, max_weight));
    Ok(finish(
        "cor38",
        None,
        max_weight,
        Some(report),
        Some(injection),
        failures,
    ))
}

fn partitions_where(max_weight: u32, keep: impl Fn(&[u32]) -> bool) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_weight {
        for_each_partition(n, |parts| {
            if keep(parts) {
                out.push(Partition::from_unsorted(parts.iter().copied()));
            }
        });
    }
    out
}

fn image_counts(image_size: impl Fn(u32) -> usize, max_weight: u32) -> BTreeMap<u32, i64> {
    (0..=max_weight)
        .map(|n| (n, image_size(n) as i64))
        .collect()
}

fn crank0_suite(max_weight: u32) -> Result<SuiteReport, BijectionError> {
    use crate::partition::crank_of;
    let domain = partitions_where(max_weight, |p| crank_of(p) == 0);
    let preds = [
        FrobeniusPredicate::NoZero,
        FrobeniusPredicate::BottomFirstTwoDifferByOne,
    ];
    let target = partitions_where(max_weight, |p| {
        let f = Partition::from_unsorted(p.iter().copied()).frobenius();
        preds.iter().all(|pr| pr.holds(&f))
    });
    let injection = check_injection(
        "crank0",
        &domain,
        &target,
        |p| crank0_map(p).map(|s| s.output),
        Partition::weight,
        Partition::weight,
        0,
    );
    let by_weight = image_counts(
        |n| domain.iter().filter(|p| p.weight() == u64::from(n)).count(),
        max_weight,
    );
    let a = |n: u32| frobenius_count(n, &[FrobeniusPredicate::NoZero]) as i64;
    let mut failures = Vec::new();
    for n in 0..=max_weight {
        let diff = a(n) - if n == 0 { 0 } else { a(n - 1) };
        if crank_m(0, n) != diff {
            failures.push(format!(
                "n = {n}: M(0,n) = {}, a(n) - a(n-1) = {diff}",
                crank_m(0, n)
            ));
        }
        // n = 1 is the convention M(0,1) = -1; the image itself is empty
        if n != 1 && by_weight[&n] != diff {
            failures.push(format!(
                "n = {n}: image has {}, a(n) - a(n-1) = {diff}",
                by_weight[&n]
            ));
        }
    }
    Ok(finish(
        "crank0",
        None,
        max_weight,
        None,
        Some(injection),
        failures,
    ))
}

fn crank_le_neg_j_suite(j: u32, max_weight: u32) -> Result<SuiteReport, BijectionError> {
    use crate::partition::crank_of;
    let bound = -i64::from(j);
    let domain = partitions_where(max_weight, |p| {
        crank_of(p) <= bound && !(j == 0 && p == [1])
    });
    let target = partitions_where(max_weight.saturating_sub(j), |p| {
        !Partition::from_unsorted(p.iter().copied())
            .frobenius()
            .top_contains(j)
    });
    let injection = check_injection(
        "crank_le_neg_j",
        &domain,
        &target,
        |p| crank_le_neg_j_map(p, j).map(|s| s.output),
        Partition::weight,
        Partition::weight,
        u64::from(j),
    );
    let mut failures = Vec::new();
    for n in j..=max_weight {
        let lhs = crate::partition::crank_count(n, |c| c >= i64::from(j));
        let rhs = frobenius_count(n - j, &[FrobeniusPredicate::NoJInTopRow(j)]) as i64;
        if lhs != rhs {
            failures.push(format!(
                "n = {n}: crank >= {j} count {lhs}, Frobenius count {rhs}"
            ));
        }
    }
    Ok(finish(
        "crank_le_neg_j",
        Some(j),
        max_weight,
        None,
        Some(injection),
        failures,
    ))
}

fn series_err(e: SeriesError) -> BijectionError {
    BijectionError::Precondition(e.to_string())
}

fn finish(
    suite: &str,
    j: Option<u32>,
    max_weight: u32,
    involution: Option<MapReport>,
    injection: Option<InjectionReport>,
    oracle_failures: Vec<String>,
) -> SuiteReport {
    SuiteReport {
        suite: suite.to_string(),
        j,
        max_weight,
        involution,
        injection,
        oracle_ok: oracle_failures.is_empty(),
        oracle_failures,
    }
}

/// Runs the named suite on every element of weight at most `max_weight`.
/// `j` is used by the suites that take it and ignored otherwise.
pub fn run_suite(name: &str, j: u32, max_weight: u32) -> Result<SuiteReport, BijectionError> {
    match name {
        "franklin" => franklin_suite(max_weight),
        "first_cancellation" => first_cancellation_suite(j, max_weight),
        "second_cancellation" => second_cancellation_suite(j, max_weight),
        "cor36" => cor36_suite(max_weight),
        "cor38" => cor38_suite(max_weight),
        "crank0" => crank0_suite(max_weight),
        "crank_le_neg_j" => crank_le_neg_j_suite(j, max_weight),
        _ => Err(BijectionError::Precondition(format!(
            "unknown suite {name:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}
