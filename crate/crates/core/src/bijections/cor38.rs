//! Sign-reversing involution on partitions with nonpositive crank.
//!
//! A partition `λ` with crank at most 0 and Durfee square `d × d` has at
//! least `d` parts equal to 1 below the square (the single exception is
//! `λ = (1)`, whose only 1 lies inside the square, so it is excluded). It
//! decomposes into
//!
//! - `π`: the parts below the square, minus `d` ones;
//! - `ν`: the conjugate of the part to the right of the square, so every
//!   part of `ν` is at most `d`.
//!
//! Moving parts between `π` and `ν` changes `ℓ(λ)` by one.

use super::{BijectionError, Step};
use crate::partition::{crank_of, for_each_partition, Partition};

struct Decomposed {
    d: usize,
    pi: Partition,
    nu: Partition,
}

fn decompose(p: &Partition) -> Result<Decomposed, BijectionError> {
    let crank = crank_of(p.parts());
    if crank > 0 {
        return Err(BijectionError::Precondition(format!(
            "crank({p})={crank} > 0"
        )));
    }
    let d = p.durfee();
    let below = &p.parts()[d..];
    let ones = below.iter().filter(|&&x| x == 1).count();
    if ones < d {
        return Err(BijectionError::Precondition(format!(
            "{p} has fewer than {d} parts 1 below its Durfee square"
        )));
    }
    let pi = Partition::from_unsorted(below[..below.len() - d].iter().copied());
    let right = Partition::from_unsorted(p.parts()[..d].iter().map(|&x| x - d as u32));
    Ok(Decomposed {
        d,
        pi,
        nu: right.conjugate(),
    })
}

fn assemble(dec: &Decomposed) -> Partition {
    let right = dec.nu.conjugate();
    let mut parts: Vec<u32> = (0..dec.d).map(|i| dec.d as u32 + right.part(i)).collect();
    parts.extend_from_slice(dec.pi.parts());
    parts.extend(std::iter::repeat_n(1, dec.d));
    Partition::from_unsorted(parts)
}

/// Smallest part of `π` occurring an odd number of times.
fn smallest_odd_multiplicity(pi: &Partition) -> Option<u32> {
    pi.parts()
        .iter()
        .rev()
        .copied()
        .find(|&x| pi.multiplicity(x) % 2 == 1)
}

/// Partitions of `n` in the involution's domain: crank at most 0, other
/// than `(1)`.
pub fn cor38_domain(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |parts| {
        if crank_of(parts) <= 0 && parts != [1] {
            out.push(Partition::from_unsorted(parts.iter().copied()));
        }
    });
    out
}

/// Fixed points: every part of `π` has even multiplicity and `ν` is empty.
pub fn is_cor38_fixed(p: &Partition) -> Result<bool, BijectionError> {
    let dec = decompose(p)?;
    Ok(dec.nu.is_empty() && smallest_odd_multiplicity(&dec.pi).is_none())
}

/// With `x` the smallest part of `π` of odd multiplicity and `y` the
/// smallest part of `ν`: if `x <= y` one copy of `x` moves to `ν`,
/// otherwise `y` moves to `π`.
pub fn cor38_involution(p: &Partition) -> Result<Step<Partition>, BijectionError> {
    let dec = decompose(p)?;
    let x = smallest_odd_multiplicity(&dec.pi);
    let y = dec.nu.smallest();
    let (next, part, from, to) = match (x, y) {
        (None, None) => return Ok(Step::fixed(p.clone())),
        (Some(x), y) if y.is_none_or(|y| x <= y) => (
            Decomposed {
                pi: dec.pi.without_part(x).expect("x is a part of pi"),
                nu: dec.nu.with_part(x),
                d: dec.d,
            },
            x,
            "pi",
            "nu",
        ),
        (_, Some(y)) => (
            Decomposed {
                pi: dec.pi.with_part(y),
                nu: dec.nu.without_part(y).expect("y is a part of nu"),
                d: dec.d,
            },
            y,
            "nu",
            "pi",
        ),
        (Some(_), None) => unreachable!("handled by the guard above"),
    };
    Ok(Step::moved(p.clone(), assemble(&next), part, from, to))
}

/// Sends a fixed point to a partition into distinct even parts: the square
/// and the `d` ones become rows `2d, 2d-2, ..., 2`, and the conjugate of
/// `π` (whose parts are even) is added row by row.
pub fn cor38_fixed_point_map(p: &Partition) -> Result<Step<Partition>, BijectionError> {
    if !is_cor38_fixed(p)? {
        return Err(BijectionError::Precondition(format!(
            "{p} is not fixed by the involution"
        )));
    }
    let dec = decompose(p)?;
    let pic = dec.pi.conjugate();
    let parts = (0..dec.d).map(|i| 2 * (dec.d - i) as u32 + pic.part(i));
    Ok(Step::mapped(p.clone(), Partition::from_unsorted(parts)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_distinct_partitions;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(cor38_involution(&p("2,1,1")).unwrap().output, p("3,1"));
        assert_eq!(cor38_involution(&p("3,1")).unwrap().output, p("2,1,1"));
        let step = cor38_involution(&p("1,1")).unwrap();
        assert!(step.is_fixed());
        assert_eq!(cor38_fixed_point_map(&p("1,1")).unwrap().output, p("2"));
        assert!(cor38_involution(&p("1")).is_err());
        assert!(cor38_involution(&p("2,2")).is_err());
        assert!(cor38_fixed_point_map(&p("2,1,1")).is_err());
    }

    #[test]
    fn involution_and_fixed_point_images() {
        use std::collections::BTreeSet;
        for n in 0..=20 {
            let mut images = BTreeSet::new();
            for q in cor38_domain(n) {
                let step = cor38_involution(&q).unwrap();
                let out = &step.output;
                assert_eq!(out.weight(), q.weight());
                assert!(crank_of(out.parts()) <= 0);
                assert_eq!(cor38_involution(out).unwrap().output, q);
                if step.is_fixed() {
                    let image = cor38_fixed_point_map(&q).unwrap().output;
                    assert_eq!(image.weight(), q.weight());
                    assert!(image.is_distinct());
                    assert!(image.parts().iter().all(|x| x % 2 == 0));
                    assert!(images.insert(image));
                } else {
                    assert_ne!(out.len() % 2, q.len() % 2);
                }
            }
            let expected: BTreeSet<Partition> = if n % 2 == 1 {
                BTreeSet::new()
            } else {
                enumerate_distinct_partitions(n / 2)
                    .into_iter()
                    .map(|d| Partition::from_unsorted(d.parts().iter().map(|&x| 2 * x)))
                    .collect()
            };
            assert_eq!(images, expected, "n = {n}");
        }
    }
}
