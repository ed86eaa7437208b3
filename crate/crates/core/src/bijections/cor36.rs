//! Cancellation on triples `(π; μ; ν)` with `π` into distinct even parts,
//! `μ` into odd parts and `ν` into distinct odd parts, signed by
//! `(-1)^{ℓ(π) + ℓ(μ)}`.

use std::fmt;

use super::{BijectionError, Step};
use crate::partition::{enumerate_distinct_partitions, enumerate_partitions, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cor36Triple {
    pub pi: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl Cor36Triple {
    pub fn new(pi: Partition, mu: Partition, nu: Partition) -> Result<Self, BijectionError> {
        let all = |p: &Partition, odd: bool| p.parts().iter().all(|&x| (x % 2 == 1) == odd);
        if !pi.is_distinct() || !all(&pi, false) {
            return Err(BijectionError::Shape(format!(
                "pi = {pi} must have distinct even parts"
            )));
        }
        if !all(&mu, true) {
            return Err(BijectionError::Shape(format!(
                "mu = {mu} must have odd parts"
            )));
        }
        if !nu.is_distinct() || !all(&nu, true) {
            return Err(BijectionError::Shape(format!(
                "nu = {nu} must have distinct odd parts"
            )));
        }
        Ok(Cor36Triple { pi, mu, nu })
    }

    pub fn parse(text: &str) -> Result<Self, BijectionError> {
        let fields: Vec<&str> = text.split(';').collect();
        if fields.len() != 3 {
            return Err(BijectionError::Shape(format!(
                "expected \"pi;mu;nu\", got {text:?}"
            )));
        }
        Cor36Triple::new(fields[0].parse()?, fields[1].parse()?, fields[2].parse()?)
    }

    pub fn sign(&self) -> i8 {
        if (self.pi.len() + self.mu.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn weight(&self) -> u64 {
        self.pi.weight() + self.mu.weight() + self.nu.weight()
    }
}

impl fmt::Display for Cor36Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.pi, self.mu, self.nu)
    }
}

/// All triples of weight `w`.
pub fn enumerate_cor36(w: u32) -> Vec<Cor36Triple> {
    let mut out = Vec::new();
    for wp in (0..=w).step_by(2) {
        let pis: Vec<_> = enumerate_distinct_partitions(wp / 2)
            .into_iter()
            .map(|p| Partition::from_unsorted(p.parts().iter().map(|&x| 2 * x)))
            .collect();
        for wm in 0..=w - wp {
            let mus: Vec<_> = enumerate_partitions(wm)
                .into_iter()
                .filter(|p| p.parts().iter().all(|&x| x % 2 == 1))
                .collect();
            let nus: Vec<_> = enumerate_distinct_partitions(w - wp - wm)
                .into_iter()
                .filter(|p| p.parts().iter().all(|&x| x % 2 == 1))
                .collect();
            for pi in &pis {
                for mu in &mus {
                    for nu in &nus {
                        out.push(Cor36Triple {
                            pi: pi.clone(),
                            mu: mu.clone(),
                            nu: nu.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// With `x` the smallest part of `μ` and `y` the smallest of `ν`: if `x < y`
/// then `x` moves to `ν`, otherwise `y` moves to `μ`. Fixed iff both are
/// empty.
pub fn cor36_involution(t: &Cor36Triple) -> Step<Cor36Triple> {
    match (t.mu.smallest(), t.nu.smallest()) {
        (None, None) => Step::fixed(t.clone()),
        (Some(x), y) if y.is_none_or(|y| x < y) => {
            let out = Cor36Triple {
                mu: t.mu.without_part(x).expect("x is a part of mu"),
                nu: t.nu.with_part(x),
                pi: t.pi.clone(),
            };
            Step::moved(t.clone(), out, x, "mu", "nu")
        }
        (_, Some(y)) => {
            let out = Cor36Triple {
                mu: t.mu.with_part(y),
                nu: t.nu.without_part(y).expect("y is a part of nu"),
                pi: t.pi.clone(),
            };
            Step::moved(t.clone(), out, y, "nu", "mu")
        }
        (Some(_), None) => unreachable!("handled by the guard above"),
    }
}
