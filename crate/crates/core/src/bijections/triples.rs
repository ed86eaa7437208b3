//! Triples `(π; κ; ν)` of partitions and the two cancellations on them.
//!
//! A triple in `T_j` has `π` with distinct parts, `κ` nonempty with largest
//! part (the peak) at least `j`, and every part of `ν` at most `peak - j`.
//! The sign of a triple is `(-1)^{ℓ(π)}`.

use std::fmt;
use std::str::FromStr;

use super::excess::{kth_excess_merge, kth_excess_split};
use super::{BijectionError, Step};
use crate::partition::{
    enumerate_distinct_partitions, enumerate_partitions, enumerate_partitions_bounded, Partition,
};

fn parse_three(s: &str) -> Result<(Partition, Partition, Partition), BijectionError> {
    let fields: Vec<&str> = s.split(';').collect();
    if fields.len() != 3 {
        return Err(BijectionError::Shape(format!(
            "expected \"pi;kappa;nu\", got {s:?}"
        )));
    }
    Ok((fields[0].parse()?, fields[1].parse()?, fields[2].parse()?))
}

fn sign_of(pi: &Partition) -> i8 {
    if pi.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleTj {
    pub j: u32,
    pub pi: Partition,
    pub kappa: Partition,
    pub nu: Partition,
}

impl TripleTj {
    pub fn new(
        j: u32,
        pi: Partition,
        kappa: Partition,
        nu: Partition,
    ) -> Result<Self, BijectionError> {
        if !pi.is_distinct() {
            return Err(BijectionError::Shape(format!(
                "pi = {pi} has repeated parts"
            )));
        }
        let peak = kappa
            .largest()
            .ok_or_else(|| BijectionError::Shape("kappa is empty".to_string()))?;
        if peak < j {
            return Err(BijectionError::Shape(format!(
                "peak {peak} is below j = {j}"
            )));
        }
        if nu.largest().is_some_and(|x| x > peak - j) {
            return Err(BijectionError::Shape(format!(
                "nu = {nu} has a part above peak - j = {}",
                peak - j
            )));
        }
        Ok(TripleTj { j, pi, kappa, nu })
    }

    pub fn parse(j: u32, text: &str) -> Result<Self, BijectionError> {
        let (pi, kappa, nu) = parse_three(text)?;
        TripleTj::new(j, pi, kappa, nu)
    }

    pub fn peak(&self) -> u32 {
        self.kappa.part(0)
    }

    pub fn sign(&self) -> i8 {
        sign_of(&self.pi)
    }

    pub fn weight(&self) -> u64 {
        self.pi.weight() + self.kappa.weight() + self.nu.weight()
    }
}

impl fmt::Display for TripleTj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.pi, self.kappa, self.nu)
    }
}

/// Every triple of `T_j` with total weight `w`, each exactly once.
pub fn enumerate_tj(j: u32, w: u32) -> Vec<TripleTj> {
    let mut out = Vec::new();
    for wp in 0..=w {
        let pis = enumerate_distinct_partitions(wp);
        for wk in 1..=w - wp {
            for kappa in enumerate_partitions(wk) {
                let peak = kappa.part(0);
                if peak < j {
                    continue;
                }
                for nu in enumerate_partitions_bounded(w - wp - wk, peak - j, usize::MAX) {
                    for pi in &pis {
                        out.push(TripleTj {
                            j,
                            pi: pi.clone(),
                            kappa: kappa.clone(),
                            nu: nu.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Fixed points of the first cancellation: `κ` is the peak alone and every
/// part of `π` exceeds it.
pub fn is_first_cancellation_fixed(t: &TripleTj) -> bool {
    t.kappa.len() == 1 && t.pi.smallest().is_none_or(|x| x > t.peak())
}

/// Moves the smallest part of `π` into `κ` when it is at most the smallest
/// part of `κ`; otherwise moves the smallest non-peak part of `κ` into `π`.
pub fn first_cancellation(t: &TripleTj) -> Step<TripleTj> {
    if is_first_cancellation_fixed(t) {
        return Step::fixed(t.clone());
    }
    let x = t.pi.smallest();
    let kappa_min = t.kappa.smallest().expect("kappa is nonempty");
    match x {
        Some(x) if x <= kappa_min => {
            let out = TripleTj {
                pi: t.pi.without_part(x).expect("x is a part of pi"),
                kappa: t.kappa.with_part(x),
                ..t.clone()
            };
            Step::moved(t.clone(), out, x, "pi", "kappa")
        }
        _ => {
            // κ has a non-peak part smaller than every part of π
            let y = kappa_min;
            let out = TripleTj {
                pi: t.pi.with_part(y),
                kappa: t.kappa.without_part(y).expect("y is a part of kappa"),
                ..t.clone()
            };
            Step::moved(t.clone(), out, y, "kappa", "pi")
        }
    }
}

/// Turns a fixed point of the first cancellation into an ordinary partition
/// plus the staircase `j, j+1, ..., j+r` that was subtracted (`r = ℓ(π)`).
pub fn peak_reduction(t: &TripleTj) -> Result<(Partition, Vec<u32>), BijectionError> {
    if !is_first_cancellation_fixed(t) {
        return Err(BijectionError::Precondition(format!(
            "{t} is not fixed by the first cancellation"
        )));
    }
    let j = t.j;
    let mut parts = vec![t.peak() - j];
    // smallest part of π first
    for (i, &p) in t.pi.parts().iter().rev().enumerate() {
        parts.push(p - (j + i as u32 + 1));
    }
    parts.extend_from_slice(t.nu.parts());
    let staircase = (0..=t.pi.len() as u32).map(|i| j + i).collect();
    Ok((
        Partition::from_unsorted(parts.into_iter().filter(|&p| p > 0)),
        staircase,
    ))
}

/// Inverse of [`peak_reduction`] for a staircase of length `r + 1`.
pub fn peak_reduction_inverse(
    lambda: &Partition,
    j: u32,
    r: usize,
) -> Result<TripleTj, BijectionError> {
    let n = lambda.part(r);
    if j == 0 && n == 0 {
        return Err(BijectionError::Precondition(format!(
            "for j = 0 the partition {lambda} needs more than {r} parts"
        )));
    }
    // λ_1..λ_r are the reduced parts of π, largest first
    let pi = (0..r).map(|i| lambda.part(i) + j + (r - i) as u32);
    let nu = lambda.parts().iter().skip(r + 1).copied();
    TripleTj::new(
        j,
        Partition::from_unsorted(pi),
        Partition::from_unsorted([n + j]),
        Partition::from_unsorted(nu),
    )
}

/// A triple after the rearrangement preceding the second cancellation:
/// `π` distinct, `κ` with `κ_{d+1} = d + j` for some `d >= 0` (parts are
/// 1-indexed and read as 0 past the end), `ν` arbitrary.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjustedTriple {
    pub j: u32,
    pub pi: Partition,
    pub kappa: Partition,
    pub nu: Partition,
}

/// The unique `d` with `κ_{d+1} = d + j`, if any.
fn corner(kappa: &Partition, j: u32) -> Option<usize> {
    (0..=kappa.len()).find(|&d| kappa.part(d) == d as u32 + j)
}

impl AdjustedTriple {
    pub fn new(
        j: u32,
        pi: Partition,
        kappa: Partition,
        nu: Partition,
    ) -> Result<Self, BijectionError> {
        if !pi.is_distinct() {
            return Err(BijectionError::Shape(format!(
                "pi = {pi} has repeated parts"
            )));
        }
        if corner(&kappa, j).is_none() {
            return Err(BijectionError::Shape(format!(
                "kappa = {kappa} has no row d + 1 of length d + {j}"
            )));
        }
        Ok(AdjustedTriple { j, pi, kappa, nu })
    }

    pub fn parse(j: u32, text: &str) -> Result<Self, BijectionError> {
        let (pi, kappa, nu) = parse_three(text)?;
        AdjustedTriple::new(j, pi, kappa, nu)
    }

    pub fn sign(&self) -> i8 {
        sign_of(&self.pi)
    }

    pub fn weight(&self) -> u64 {
        self.pi.weight() + self.kappa.weight() + self.nu.weight()
    }
}

impl fmt::Display for AdjustedTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.pi, self.kappa, self.nu)
    }
}

impl FromStr for AdjustedTriple {
    type Err = BijectionError;

    /// Parses with `j = 0`; use [`AdjustedTriple::parse`] for other `j`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AdjustedTriple::parse(0, s)
    }
}

/// Every adjusted triple with parameter `j` and weight `w`.
pub fn enumerate_adjusted(j: u32, w: u32) -> Vec<AdjustedTriple> {
    let mut out = Vec::new();
    for wp in 0..=w {
        let pis = enumerate_distinct_partitions(wp);
        for wk in 0..=w - wp {
            for kappa in enumerate_partitions(wk) {
                if corner(&kappa, j).is_none() {
                    continue;
                }
                for nu in enumerate_partitions(w - wp - wk) {
                    for pi in &pis {
                        out.push(AdjustedTriple {
                            j,
                            pi: pi.clone(),
                            kappa: kappa.clone(),
                            nu: nu.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// The rearrangement of a `T_j` triple before the second cancellation.
///
/// With peak `n + j`, the non-peak parts of `κ` have a `j`-Durfee rectangle
/// `d × (d+j)`. The parts to the right of it (at most `d` of them, each at
/// most `n - d`) are merged with the parts of `ν` in `[n-d+1, n]` by the
/// k-th excess bijection. The merged partition goes back to the right of
/// the rectangle, the peak is split into a row `d + j` of `κ` and a part
/// `n - d` of `ν`.
pub fn second_cancellation_adjust(t: &TripleTj) -> AdjustedTriple {
    let j = t.j;
    let n = t.peak() - j;
    let rest = &t.kappa.parts()[1..];
    let d = crate::partition::durfee_rect_of(rest, j);
    let width = d as u32 + j;
    let rho = Partition::from_unsorted(rest[..d].iter().map(|&p| p - width));
    let below = &rest[d..];
    let cut = n - d as u32;
    let (high, low): (Vec<u32>, Vec<u32>) = t.nu.parts().iter().partition(|&&p| p > cut);
    let sigma = kth_excess_merge(&Partition::from_unsorted(high), &rho, n, d)
        .expect("right-of-rectangle parts fit the box");
    let mut kappa: Vec<u32> = (0..d).map(|i| width + sigma.part(i)).collect();
    kappa.push(width);
    kappa.extend_from_slice(below);
    let mut nu = low;
    nu.push(cut);
    AdjustedTriple {
        j,
        pi: t.pi.clone(),
        kappa: Partition::from_unsorted(kappa.into_iter().filter(|&p| p > 0)),
        nu: Partition::from_unsorted(nu.into_iter().filter(|&p| p > 0)),
    }
}

/// Inverse of [`second_cancellation_adjust`]. For `j = 0` the triples
/// `(π; ∅; ∅)` are not in the image and are rejected.
pub fn second_cancellation_unadjust(a: &AdjustedTriple) -> Result<TripleTj, BijectionError> {
    let j = a.j;
    let d = corner(&a.kappa, j)
        .ok_or_else(|| BijectionError::Shape(format!("kappa = {} has no corner row", a.kappa)))?;
    if j == 0 && d == 0 && a.nu.is_empty() {
        return Err(BijectionError::Precondition(format!(
            "{a} is not the image of a triple with nonempty kappa"
        )));
    }
    let width = d as u32 + j;
    let cut = a.nu.largest().unwrap_or(0);
    let n = cut + d as u32;
    let sigma = Partition::from_unsorted((0..d).map(|i| a.kappa.part(i) - width));
    let (high, rho) = kth_excess_split(&sigma, n, d)?;
    let mut kappa = vec![n + j];
    kappa.extend((0..d).map(|i| width + rho.part(i)));
    kappa.extend_from_slice(&a.kappa.parts()[(d + 1).min(a.kappa.len())..]);
    let mut nu = a.nu.clone();
    if cut > 0 {
        nu = nu.without_part(cut).expect("cut is the largest part");
    }
    for &h in high.parts() {
        nu = nu.with_part(h);
    }
    TripleTj::new(j, a.pi.clone(), Partition::from_unsorted(kappa), nu)
}

/// Compares the smallest parts `x` of `π` and `y` of `ν`: if `x <= y`, `x`
/// moves to `ν`, otherwise `y` moves to `π`. Fixed iff both are empty.
pub fn second_cancellation(a: &AdjustedTriple) -> Step<AdjustedTriple> {
    match (a.pi.smallest(), a.nu.smallest()) {
        (None, None) => Step::fixed(a.clone()),
        (Some(x), y) if y.is_none_or(|y| x <= y) => {
            let out = AdjustedTriple {
                pi: a.pi.without_part(x).expect("x is a part of pi"),
                nu: a.nu.with_part(x),
                ..a.clone()
            };
            Step::moved(a.clone(), out, x, "pi", "nu")
        }
        (_, Some(y)) => {
            let out = AdjustedTriple {
                pi: a.pi.with_part(y),
                nu: a.nu.without_part(y).expect("y is a part of nu"),
                ..a.clone()
            };
            Step::moved(a.clone(), out, y, "nu", "pi")
        }
        (Some(_), None) => unreachable!("handled by the guard above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(j: u32, text: &str) -> TripleTj {
        TripleTj::parse(j, text).unwrap()
    }

    #[test]
    fn weight_five_triples_for_j3() {
        let mut got: Vec<String> = enumerate_tj(3, 5).iter().map(|t| t.to_string()).collect();
        got.sort();
        let mut want = vec![
            ";3,2;", ";3,1,1;", "2;3;", "1;3,1;", ";4,1;", "1;4;", ";4;1", ";5;",
        ];
        want.sort();
        assert_eq!(got, want);
        assert!(enumerate_tj(0, 0).is_empty());
    }

    #[test]
    fn triple_validation() {
        assert!(TripleTj::parse(3, "2,2;3;").is_err());
        assert!(TripleTj::parse(3, ";2;").is_err());
        assert!(TripleTj::parse(3, ";4;2").is_err());
        assert!(TripleTj::parse(0, ";;").is_err());
        assert!(TripleTj::parse(0, "1;1").is_err());
    }

    #[test]
    fn first_cancellation_examples() {
        let step = first_cancellation(&t(3, "2;3;"));
        assert_eq!(step.output, t(3, ";3,2;"));
        assert_eq!(
            step.to_string(),
            "2;3; → ;3,2; [moved: part 2 from pi to kappa]"
        );
        assert!(first_cancellation(&t(3, ";5;")).is_fixed());
        assert!(first_cancellation(&t(3, ";4;1")).is_fixed());
        assert_eq!(first_cancellation(&t(3, ";3,2;")).output, t(3, "2;3;"));
    }

    #[test]
    fn peak_reduction_examples() {
        assert_eq!(
            peak_reduction(&t(3, ";5;")).unwrap(),
            ("2".parse().unwrap(), vec![3])
        );
        assert_eq!(
            peak_reduction(&t(3, ";4;1")).unwrap(),
            ("1,1".parse().unwrap(), vec![3])
        );
        assert!(peak_reduction(&t(3, "2;3;")).is_err());
        // a reduced part of π may vanish when n = 0
        let (lambda, stairs) = peak_reduction(&t(3, "4;3;")).unwrap();
        assert_eq!((lambda.clone(), stairs), (Partition::empty(), vec![3, 4]));
        assert_eq!(peak_reduction_inverse(&lambda, 3, 1).unwrap(), t(3, "4;3;"));
    }

    #[test]
    fn peak_reduction_roundtrip() {
        for j in 0..=3 {
            for w in 0..=12 {
                for triple in enumerate_tj(j, w) {
                    if !is_first_cancellation_fixed(&triple) {
                        continue;
                    }
                    let (lambda, stairs) = peak_reduction(&triple).unwrap();
                    let stair_weight: u32 = stairs.iter().sum();
                    assert_eq!(lambda.weight() + u64::from(stair_weight), u64::from(w));
                    let back = peak_reduction_inverse(&lambda, j, stairs.len() - 1).unwrap();
                    assert_eq!(back, triple);
                }
            }
        }
    }

    #[test]
    fn adjust_example_at_j0() {
        let a = second_cancellation_adjust(&t(0, ";1;"));
        assert_eq!(a.to_string(), ";;1");
        let step = second_cancellation(&a);
        assert_eq!(step.output.to_string(), "1;;");
        assert!(second_cancellation_unadjust(&step.output).is_err());
    }

    #[test]
    fn adjust_is_a_bijection_onto_the_adjusted_domain() {
        use std::collections::HashSet;
        for j in 0..=3 {
            for w in 0..=11 {
                let mut image = HashSet::new();
                for triple in enumerate_tj(j, w) {
                    let a = second_cancellation_adjust(&triple);
                    assert_eq!(a.weight(), u64::from(w), "{triple}");
                    assert!(corner(&a.kappa, j).is_some(), "{triple} -> {a}");
                    assert_eq!(second_cancellation_unadjust(&a).unwrap(), triple);
                    assert!(image.insert(a));
                }
                let domain: HashSet<_> = enumerate_adjusted(j, w)
                    .into_iter()
                    .filter(|a| !(j == 0 && a.kappa.is_empty() && a.nu.is_empty()))
                    .collect();
                assert_eq!(image, domain, "j = {j}, w = {w}");
            }
        }
    }
}
