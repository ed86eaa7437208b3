//! Exact arithmetic for integer-partition statistics.
//!
//! The crate is split into four layers:
//!
//! - [`partition`]: the partition model, enumeration, the crank / mex /
//!   Frobenius statistics and brute-force counting. Everything else is
//!   checked against this layer.
//! - [`qseries`]: truncated power series over arbitrary-precision integers
//!   (univariate in `q`, Laurent in `z` times `q`, and bivariate in `x, y`),
//!   with builders for q-Pochhammer products, Gaussian polynomials and
//!   bilateral theta-type sums.
//! - [`identities`]: a fixed registry of generating-function identities, each
//!   verified coefficient by coefficient up to a chosen order.
//! - [`bijections`]: executable sign-reversing involutions and bijections on
//!   partitions and triples of partitions, plus an exhaustive checking harness.

pub mod bijections;
pub mod identities;
pub mod partition;
pub mod qseries;

pub use partition::{FrobeniusSymbol, Parity, Partition, PartitionError};
pub use qseries::{Series, SeriesError, XYSeries, ZSeries};
