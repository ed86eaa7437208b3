//! Exhaustive property checks for maps on finite domains.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Display;
use std::hash::Hash;

use rayon::prelude::*;
use serde::Serialize;

use super::{BijectionError, Step};

/// Outcome of checking an involution on a finite domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub name: String,
    pub domain_size: usize,
    /// `f(f(x)) = x` and `f(x)` stays in the domain.
    pub involution_ok: bool,
    pub weight_ok: bool,
    /// The sign flips exactly off the fixed points.
    pub sign_reversing_ok: bool,
    pub fixed_points: usize,
    /// The fixed points are exactly those satisfying the characterization.
    pub fixed_points_ok: bool,
    /// Up to 10 counterexamples.
    pub failures: Vec<String>,
}

impl MapReport {
    pub fn passed(&self) -> bool {
        self.involution_ok && self.weight_ok && self.sign_reversing_ok && self.fixed_points_ok
    }
}

const MAX_FAILURES: usize = 10;

/// Checks that `f` is a weight-preserving, sign-reversing involution on
/// `domain` whose fixed points are exactly the elements satisfying
/// `expected_fixed`. The domain is sharded across threads; the report is
/// deterministic.
pub fn check_involution<T, F, W, S, X>(
    name: &str,
    domain: &[T],
    f: F,
    weight: W,
    sign: S,
    expected_fixed: X,
) -> MapReport
where
    T: Clone + Eq + Hash + Display + Send + Sync,
    F: Fn(&T) -> Result<Step<T>, BijectionError> + Sync,
    W: Fn(&T) -> u64 + Sync,
    S: Fn(&T) -> i8 + Sync,
    X: Fn(&T) -> bool + Sync,
{
    let members: HashSet<&T> = domain.iter().collect();
    // (involution, weight, sign, fixed, fixed-characterization, failure)
    let results: Vec<(bool, bool, bool, bool, bool, Option<String>)> = domain
        .par_iter()
        .map(|x| {
            let step = match f(x) {
                Ok(step) => step,
                Err(e) => {
                    return (false, false, false, false, false, Some(format!("{x}: {e}")));
                }
            };
            let y = &step.output;
            let fixed = y == x;
            let back_ok = members.contains(y)
                && matches!(f(y), Ok(ref s) if s.output == *x);
            let weight_ok = weight(y) == weight(x);
            let sign_ok = fixed || sign(y) == -sign(x);
            let char_ok = fixed == expected_fixed(x);
            let failure = if back_ok && weight_ok && sign_ok && char_ok {
                None
            } else {
                Some(format!(
                    "{step} (involution {back_ok}, weight {weight_ok}, sign {sign_ok}, fixed points {char_ok})"
                ))
            };
            (back_ok, weight_ok, sign_ok, fixed, char_ok, failure)
        })
        .collect();
    MapReport {
        name: name.to_string(),
        domain_size: domain.len(),
        involution_ok: results.iter().all(|r| r.0),
        weight_ok: results.iter().all(|r| r.1),
        sign_reversing_ok: results.iter().all(|r| r.2),
        fixed_points: results.iter().filter(|r| r.3).count(),
        fixed_points_ok: results.iter().all(|r| r.4),
        failures: results
            .into_iter()
            .filter_map(|r| r.5)
            .take(MAX_FAILURES)
            .collect(),
    }
}

/// Outcome of checking an injection against a declared image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectionReport {
    pub name: String,
    pub domain_size: usize,
    pub target_size: usize,
    pub injective: bool,
    /// The image equals the target set.
    pub image_ok: bool,
    /// `weight(f(x)) = weight(x) - shift` throughout.
    pub weight_ok: bool,
    pub failures: Vec<String>,
}

impl InjectionReport {
    pub fn passed(&self) -> bool {
        self.injective && self.image_ok && self.weight_ok
    }
}

/// Checks that `f` maps `domain` injectively onto exactly `target`, with
/// `target_weight(f(x)) = weight(x) - shift`.
pub fn check_injection<T, U, F, W, V>(
    name: &str,
    domain: &[T],
    target: &[U],
    f: F,
    weight: W,
    target_weight: V,
    shift: u64,
) -> InjectionReport
where
    T: Clone + Display + Send + Sync,
    U: Clone + Eq + Hash + Display + Send + Sync,
    F: Fn(&T) -> Result<U, BijectionError> + Sync,
    W: Fn(&T) -> u64 + Sync,
    V: Fn(&U) -> u64,
{
    let mapped: Vec<Result<(&T, U), String>> = domain
        .par_iter()
        .map(|x| f(x).map(|y| (x, y)).map_err(|e| format!("{x}: {e}")))
        .collect();
    let mut failures = Vec::new();
    let mut weight_ok = true;
    let mut preimage: HashMap<U, &T> = HashMap::new();
    let mut injective = true;
    for r in mapped {
        match r {
            Err(e) => {
                weight_ok = false;
                failures.push(e);
            }
            Ok((x, y)) => {
                if weight(x) != target_weight(&y) + shift {
                    weight_ok = false;
                    failures.push(format!("{x} → {y}: weight"));
                }
                if let Some(prev) = preimage.insert(y.clone(), x) {
                    injective = false;
                    failures.push(format!("{prev} and {x} both map to {y}"));
                }
            }
        }
    }
    let target_set: HashSet<&U> = target.iter().collect();
    let image_ok =
        preimage.len() == target_set.len() && preimage.keys().all(|y| target_set.contains(y));
    if !image_ok {
        for y in preimage.keys().filter(|y| !target_set.contains(y)) {
            failures.push(format!("{y} is in the image but not the target"));
        }
        for y in target.iter().filter(|y| !preimage.contains_key(y)) {
            failures.push(format!("{y} is in the target but not the image"));
        }
    }
    failures.truncate(MAX_FAILURES);
    InjectionReport {
        name: name.to_string(),
        domain_size: domain.len(),
        target_size: target_set.len(),
        injective,
        image_ok,
        weight_ok,
        failures,
    }
}

/// `Σ sign(x)` grouped by weight.
pub fn signed_counts<T, W, S>(items: &[T], weight: W, sign: S) -> BTreeMap<u64, i64>
where
    W: Fn(&T) -> u64,
    S: Fn(&T) -> i8,
{
    let mut out = BTreeMap::new();
    for x in items {
        *out.entry(weight(x)).or_insert(0) += i64::from(sign(x));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::franklin;
    use crate::partition::{enumerate_distinct_partitions, Partition};

    fn distinct_up_to(w: u32) -> Vec<Partition> {
        (0..=w).flat_map(enumerate_distinct_partitions).collect()
    }

    fn sign(p: &Partition) -> i8 {
        if p.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn franklin_passes() {
        let domain = distinct_up_to(20);
        let report = check_involution(
            "franklin",
            &domain,
            franklin,
            Partition::weight,
            sign,
            crate::bijections::is_pentagonal_staircase,
        );
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.fixed_points, 1 + 2 * 3);
    }

    #[test]
    fn broken_map_is_caught() {
        let domain = distinct_up_to(10);
        // sends 4,1 to 5 but leaves 5 alone
        let broken = |p: &Partition| -> Result<Step<Partition>, BijectionError> {
            if p.to_string() == "4,1" {
                Ok(Step::mapped(p.clone(), "5".parse().unwrap()))
            } else {
                Ok(Step::fixed(p.clone()))
            }
        };
        let report = check_involution("broken", &domain, broken, Partition::weight, sign, |_| {
            false
        });
        assert!(!report.involution_ok);
        assert!(!report.fixed_points_ok);
        assert!(!report.failures.is_empty());
    }

    #[test]
    fn injection_checks() {
        let domain: Vec<Partition> = ["2", "1,1"].iter().map(|s| s.parse().unwrap()).collect();
        let target = domain.clone();
        let w = Partition::weight;
        let swap = |p: &Partition| -> Result<Partition, BijectionError> { Ok(p.conjugate()) };
        assert!(check_injection("conjugate", &domain, &target, swap, w, w, 0).passed());
        let collapse =
            |_: &Partition| -> Result<Partition, BijectionError> { Ok("2".parse().unwrap()) };
        let report = check_injection("collapse", &domain, &target, collapse, w, w, 0);
        assert!(!report.injective && !report.image_ok);
    }

    #[test]
    fn signed_counts_by_weight() {
        let domain = distinct_up_to(7);
        let counts = signed_counts(&domain, Partition::weight, sign);
        let expected = [1, -1, -1, 0, 0, 1, 0, 1];
        for (w, e) in expected.iter().enumerate() {
            assert_eq!(counts[&(w as u64)], *e);
        }
    }
}
