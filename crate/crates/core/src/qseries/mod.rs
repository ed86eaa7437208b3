//! Truncated formal power series with arbitrary-precision integer
//! coefficients.
//!
//! Every series carries its truncation order `N` (coefficients of `q^0..=q^N`
//! are kept). Binary operations require both operands to have the same order
//! and fail with [`SeriesError::OrderMismatch`] otherwise.

mod builders;
mod series;
mod xyseries;
mod zseries;

use thiserror::Error;

pub use builders::{
    bilateral_sum, gaussian_binomial, gaussian_binomial_at, pentagonal_series, unilateral_sum,
    Count, QPochhammer,
};
pub use series::Series;
pub use xyseries::{carlitz_product, carlitz_theta, XYSeries};
pub use zseries::{crank_gf_bivariate, crank_le0_bivariate, ZSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series is not invertible: constant coefficient {0} is not a unit")]
    NotAUnit(String),
    #[error("q-Pochhammer factor (1 - q^0) vanishes")]
    ZeroFactor,
    #[error("q-Pochhammer step must be positive")]
    ZeroStep,
    #[error("Gaussian binomial [{n} choose {d}] is out of range")]
    BinomialRange { n: u64, d: u64 },
    #[error("exponent function is not coercive: still at most {order} after scanning to k = {k}")]
    NonCoercive { order: usize, k: i64 },
    #[error("exponent function produced a negative exponent {exponent} at k = {k}")]
    NegativeExponent { k: i64, exponent: i64 },
    #[error("coefficient is not divisible by {0}")]
    NotDivisible(i64),
    #[error("z-exponent {0} falls outside the stored range")]
    ZExponentOverflow(i64),
    #[error("substitution needs total degree at least {needed}, series has {have}")]
    InsufficientDegree { needed: usize, have: usize },
    #[error("monomial exponents must be positive for substitution")]
    ZeroSubstitution,
}
