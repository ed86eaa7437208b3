//! A fixed registry of generating-function identities.
//!
//! Each entry builds one or more [`Comparison`]s (left side, right side) at a
//! requested truncation order and the verifier compares them coefficient by
//! coefficient with exact integer equality. Where a counting interpretation
//! exists, an entry also compares against brute-force enumeration.

mod catalog;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::qseries::{Series, SeriesError, XYSeries, ZSeries};

pub use catalog::fine_comparisons;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    UnknownId(String),
    #[error("identity {id:?} needs parameter {param:?}")]
    MissingParam { id: String, param: String },
    #[error("identity {id:?} has no parameter {param:?}")]
    UnexpectedParam { id: String, param: String },
    #[error("parameter {param} = {value} is outside {min}..={max} for {id:?}")]
    ParamOutOfRange {
        id: String,
        param: String,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("order must be at least 1, got {0}")]
    OrderTooSmall(usize),
    #[error("comparison {0:?} has sides of different shape or order")]
    ShapeMismatch(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// One side of a comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Series(Series),
    Z(ZSeries),
    XY(XYSeries),
    /// Integer values indexed by `n`.
    Sequence(Vec<(u32, i64)>),
}

/// A left side and a right side that should agree exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub lhs: Shape,
    pub rhs: Shape,
}

impl Comparison {
    pub fn new(label: impl Into<String>, lhs: Shape, rhs: Shape) -> Self {
        Comparison {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

/// The first coefficient at which two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Which comparison of the entry failed.
    #[serde(skip)]
    pub label: String,
    /// `[q]`, `[q, z]`, `[x, y]` or `[n]` depending on the shape.
    pub exponents: Vec<i64>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: at {:?} lhs = {}, rhs = {}",
            self.label, self.exponents, self.lhs, self.rhs
        )
    }
}

fn mismatch(label: &str, exponents: Vec<i64>, lhs: &BigInt, rhs: &BigInt) -> Mismatch {
    Mismatch {
        label: label.to_string(),
        exponents,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// Compares one pair, reporting the smallest differing exponent: ascending
/// `q` (then `z`) for series, ascending total degree (then `x`) for
/// bivariate `x, y` series, ascending `n` for sequences.
pub fn compare(c: &Comparison) -> Result<Option<Mismatch>, IdentityError> {
    let shape_err = || IdentityError::ShapeMismatch(c.label.clone());
    match (&c.lhs, &c.rhs) {
        (Shape::Series(a), Shape::Series(b)) => {
            if a.order() != b.order() {
                return Err(shape_err());
            }
            Ok((0..=a.order())
                .find(|&e| a.coeff(e) != b.coeff(e))
                .map(|e| mismatch(&c.label, vec![e as i64], a.coeff(e), b.coeff(e))))
        }
        (Shape::Z(a), Shape::Z(b)) => {
            if a.order() != b.order() {
                return Err(shape_err());
            }
            let n_max = a.order() as i64;
            for n in 0..=a.order() {
                for m in -n_max..=n_max {
                    let (x, y) = (a.coeff(m, n), b.coeff(m, n));
                    if x != y {
                        return Ok(Some(mismatch(&c.label, vec![n as i64, m], &x, &y)));
                    }
                }
            }
            Ok(None)
        }
        (Shape::XY(a), Shape::XY(b)) => {
            if a.degree() != b.degree() {
                return Err(shape_err());
            }
            for total in 0..=a.degree() {
                for x in 0..=total {
                    let (p, q) = (a.coeff(x, total - x), b.coeff(x, total - x));
                    if p != q {
                        let exps = vec![x as i64, (total - x) as i64];
                        return Ok(Some(mismatch(&c.label, exps, &p, &q)));
                    }
                }
            }
            Ok(None)
        }
        (Shape::Sequence(a), Shape::Sequence(b)) => {
            if a.len() != b.len() || a.iter().zip(b).any(|(x, y)| x.0 != y.0) {
                return Err(shape_err());
            }
            Ok(a.iter()
                .zip(b)
                .find(|(x, y)| x.1 != y.1)
                .map(|(x, y)| mismatch(&c.label, vec![i64::from(x.0)], &x.1.into(), &y.1.into())))
        }
        _ => Err(shape_err()),
    }
}

/// The first mismatch over a list of comparisons, in list order.
pub fn check(comparisons: &[Comparison]) -> Result<Option<Mismatch>, IdentityError> {
    for c in comparisons {
        if let Some(m) = compare(c)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    SeriesVsSeries,
    SeriesVsEnumeration,
    CountVsCount,
}

/// A named integer parameter with its admissible range and default grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub max: i64,
    pub grid: Vec<i64>,
    /// Used when the caller does not supply the parameter.
    pub default: Option<i64>,
}

pub type Params = BTreeMap<String, i64>;

type Builder = fn(&Params, usize) -> Result<Vec<Comparison>, IdentityError>;

#[derive(Clone)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub kind: Kind,
    pub summary: &'static str,
    pub params: Vec<ParamSpec>,
    build: Builder,
}

impl fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("params", &self.params)
            .finish()
    }
}

impl IdentityEntry {
    /// Checks the parameters against the declared ranges and fills in
    /// defaults.
    pub fn resolve(&self, params: &Params) -> Result<Params, IdentityError> {
        for name in params.keys() {
            if !self.params.iter().any(|p| p.name == name) {
                return Err(IdentityError::UnexpectedParam {
                    id: self.id.to_string(),
                    param: name.clone(),
                });
            }
        }
        let mut out = Params::new();
        for spec in &self.params {
            let value = params
                .get(spec.name)
                .copied()
                .or(spec.default)
                .ok_or_else(|| IdentityError::MissingParam {
                    id: self.id.to_string(),
                    param: spec.name.to_string(),
                })?;
            if value < spec.min || value > spec.max {
                return Err(IdentityError::ParamOutOfRange {
                    id: self.id.to_string(),
                    param: spec.name.to_string(),
                    value,
                    min: spec.min,
                    max: spec.max,
                });
            }
            out.insert(spec.name.to_string(), value);
        }
        Ok(out)
    }

    /// Builds both sides of every comparison.
    pub fn build(&self, params: &Params, order: usize) -> Result<Vec<Comparison>, IdentityError> {
        if order < 1 {
            return Err(IdentityError::OrderTooSmall(order));
        }
        let params = self.resolve(params)?;
        (self.build)(&params, order)
    }

    /// The default parameter grid (the Cartesian product of every
    /// parameter's grid).
    pub fn default_grid(&self) -> Vec<Params> {
        let mut grid = vec![Params::new()];
        for spec in &self.params {
            grid = grid
                .into_iter()
                .flat_map(|base| {
                    spec.grid.iter().map(move |&v| {
                        let mut p = base.clone();
                        p.insert(spec.name.to_string(), v);
                        p
                    })
                })
                .collect();
        }
        grid
    }
}

/// Result of verifying one entry at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub params: Params,
    pub order: usize,
    pub pass: bool,
    pub first_mismatch: Option<Mismatch>,
    pub ms: u64,
}

/// Every entry, in its canonical order.
pub fn catalog() -> Vec<IdentityEntry> {
    catalog::entries()
}

pub fn find(id: &str) -> Result<IdentityEntry, IdentityError> {
    catalog()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| IdentityError::UnknownId(id.to_string()))
}

fn run(
    entry: &IdentityEntry,
    params: &Params,
    order: usize,
) -> Result<VerifyReport, IdentityError> {
    let start = Instant::now();
    let resolved = entry.resolve(params)?;
    let comparisons = entry.build(&resolved, order)?;
    let first_mismatch = check(&comparisons)?;
    Ok(VerifyReport {
        id: entry.id.to_string(),
        params: resolved,
        order,
        pass: first_mismatch.is_none(),
        first_mismatch,
        ms: start.elapsed().as_millis() as u64,
    })
}

/// Verifies one entry at one parameter point.
pub fn verify(id: &str, params: &Params, order: usize) -> Result<VerifyReport, IdentityError> {
    run(&find(id)?, params, order)
}

/// Verifies one entry over an explicit grid. An empty grid gives an empty
/// list.
pub fn verify_grid(
    id: &str,
    grid: &[Params],
    order: usize,
) -> Result<Vec<VerifyReport>, IdentityError> {
    let entry = find(id)?;
    if order < 1 {
        return Err(IdentityError::OrderTooSmall(order));
    }
    grid.par_iter().map(|p| run(&entry, p, order)).collect()
}

/// Verifies every entry over its default grid. Entries run concurrently;
/// the reports come back in catalog order.
pub fn verify_all(order: usize) -> Result<Vec<VerifyReport>, IdentityError> {
    if order < 1 {
        return Err(IdentityError::OrderTooSmall(order));
    }
    let jobs: Vec<(IdentityEntry, Params)> = catalog()
        .into_iter()
        .flat_map(|e| e.default_grid().into_iter().map(move |p| (e.clone(), p)))
        .collect();
    jobs.par_iter().map(|(e, p)| run(e, p, order)).collect()
}
