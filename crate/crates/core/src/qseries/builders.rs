//! Builders for the standard products and sums.

use super::{Series, SeriesError};

/// Number of factors in a q-Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    Infinite,
}

/// `(a; q^step)_count` with `a = ±q^base`, i.e. the product of the factors
/// `1 - a q^(step*i)` for `i < count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QPochhammer {
    pub negated: bool,
    pub base: usize,
    pub step: usize,
    pub count: Count,
}

impl QPochhammer {
    /// `(q^base; q^step)_count`.
    pub fn new(base: usize, step: usize, count: Count) -> Self {
        QPochhammer {
            negated: false,
            base,
            step,
            count,
        }
    }

    /// `(q; q)_n`.
    pub fn q_n(n: usize) -> Self {
        QPochhammer::new(1, 1, Count::Finite(n))
    }

    /// `(q; q)_∞`.
    pub fn euler() -> Self {
        QPochhammer::new(1, 1, Count::Infinite)
    }

    /// Replaces `a = q^base` by `a = -q^base`.
    pub fn negated(mut self) -> Self {
        self.negated = !self.negated;
        self
    }

    fn validate(&self) -> Result<(), SeriesError> {
        if self.step == 0 {
            return Err(SeriesError::ZeroStep);
        }
        if !self.negated && self.base == 0 && self.count != Count::Finite(0) {
            return Err(SeriesError::ZeroFactor);
        }
        Ok(())
    }

    /// Exponents `base + step*i` of the factors that survive truncation.
    fn exponents(&self, order: usize) -> impl Iterator<Item = usize> {
        let limit = match self.count {
            Count::Finite(n) => n,
            Count::Infinite => usize::MAX,
        };
        let (base, step) = (self.base, self.step);
        (0..limit)
            .map(move |i| base + step * i)
            .take_while(move |&e| e <= order)
    }

    fn factor_coeff(&self) -> i64 {
        if self.negated {
            1
        } else {
            -1
        }
    }

    pub fn expand(&self, order: usize) -> Result<Series, SeriesError> {
        self.validate()?;
        let mut s = Series::one(order);
        let c = self.factor_coeff();
        for e in self.exponents(order) {
            s.mul_binomial(c, e);
        }
        Ok(s)
    }

    /// The reciprocal product, expanded factor by factor as geometric series.
    pub fn expand_inverse(&self, order: usize) -> Result<Series, SeriesError> {
        let mut s = Series::one(order);
        self.divide(&mut s)?;
        Ok(s)
    }

    /// In place: `s /= self`.
    pub fn divide(&self, s: &mut Series) -> Result<(), SeriesError> {
        self.validate()?;
        let c = self.factor_coeff();
        for e in self.exponents(s.order()) {
            s.div_binomial(c, e)?;
        }
        Ok(())
    }

    /// In place: `s *= self`.
    pub fn multiply(&self, s: &mut Series) -> Result<(), SeriesError> {
        self.validate()?;
        let c = self.factor_coeff();
        for e in self.exponents(s.order()) {
            s.mul_binomial(c, e);
        }
        Ok(())
    }
}

/// The Gaussian polynomial `[n choose d]` as an exact polynomial of order
/// `d(n-d)`.
pub fn gaussian_binomial(n: usize, d: usize) -> Result<Series, SeriesError> {
    if d > n {
        return Err(SeriesError::BinomialRange {
            n: n as u64,
            d: d as u64,
        });
    }
    let degree = d * (n - d);
    // work past the degree so that exactness of the division is checked
    let work = degree + n + 1;
    let mut s = QPochhammer::q_n(n).expand(work)?;
    QPochhammer::q_n(d).divide(&mut s)?;
    QPochhammer::q_n(n - d).divide(&mut s)?;
    debug_assert!(s.coeffs()[degree + 1..]
        .iter()
        .all(num_traits::Zero::is_zero));
    Ok(s.truncate(degree))
}

/// `[n choose d]` re-targeted to an arbitrary order.
pub fn gaussian_binomial_at(n: usize, d: usize, order: usize) -> Result<Series, SeriesError> {
    Ok(gaussian_binomial(n, d)?.polynomial_at(order))
}

fn scan<E, C>(
    order: usize,
    k0: i64,
    dir: i64,
    exponent: &E,
    coeff: &C,
    out: &mut Series,
) -> Result<(), SeriesError>
where
    E: Fn(i64) -> i64,
    C: Fn(i64) -> i64,
{
    let limit = 2 * order as i64 + 16;
    let mut beyond = 0;
    let mut k = k0;
    while beyond < 3 {
        if (k - k0).abs() > limit {
            return Err(SeriesError::NonCoercive { order, k });
        }
        let e = exponent(k);
        if e < 0 {
            return Err(SeriesError::NegativeExponent { k, exponent: e });
        }
        if e as u64 <= order as u64 {
            let e = e as usize;
            let updated = out.coeff(e) + coeff(k);
            out.set_coeff(e, updated);
            beyond = 0;
        } else {
            beyond += 1;
        }
        k += dir;
    }
    Ok(())
}

/// `Σ_{k ∈ Z} coeff(k) q^{exponent(k)}`, truncated at `order`.
///
/// The range of `k` is found by scanning outwards from 0 in both directions
/// until three consecutive exponents exceed the order.
pub fn bilateral_sum<E, C>(order: usize, exponent: E, coeff: C) -> Result<Series, SeriesError>
where
    E: Fn(i64) -> i64,
    C: Fn(i64) -> i64,
{
    let mut out = Series::zero(order);
    scan(order, 0, 1, &exponent, &coeff, &mut out)?;
    scan(order, -1, -1, &exponent, &coeff, &mut out)?;
    Ok(out)
}

/// `Σ_{k >= 0} coeff(k) q^{exponent(k)}`, truncated at `order`.
pub fn unilateral_sum<E, C>(order: usize, exponent: E, coeff: C) -> Result<Series, SeriesError>
where
    E: Fn(i64) -> i64,
    C: Fn(i64) -> i64,
{
    let mut out = Series::zero(order);
    scan(order, 0, 1, &exponent, &coeff, &mut out)?;
    Ok(out)
}

/// `Σ_k (-1)^k q^{k(3k-1)/2}`, the pentagonal series.
pub fn pentagonal_series(order: usize) -> Series {
    bilateral_sum(
        order,
        |k| k * (3 * k - 1) / 2,
        |k| if k.rem_euclid(2) == 0 { 1 } else { -1 },
    )
    .expect("pentagonal exponents are coercive and nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_products() {
        assert_eq!(
            QPochhammer::q_n(2).expand(5).unwrap(),
            Series::from_i64s(&[1, -1, -1, 1, 0, 0])
        );
        assert_eq!(QPochhammer::q_n(0).expand(4).unwrap(), Series::one(4));
    }

    #[test]
    fn euler_product_matches_pentagonal_series() {
        let euler = QPochhammer::euler().expand(12).unwrap();
        assert_eq!(
            euler,
            Series::from_monomials(12, &[(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)])
        );
        for order in [0, 1, 7, 30, 60] {
            assert_eq!(
                QPochhammer::euler().expand(order).unwrap(),
                pentagonal_series(order)
            );
        }
    }

    #[test]
    fn negated_even_product() {
        // (-q^2; q^2)_∞ = (1+q^2)(1+q^4)(1+q^6)...
        let s = QPochhammer::new(2, 2, Count::Infinite)
            .negated()
            .expand(6)
            .unwrap();
        assert_eq!(s, Series::from_i64s(&[1, 0, 1, 0, 1, 0, 2]));
    }

    #[test]
    fn product_errors() {
        assert_eq!(
            QPochhammer::new(0, 1, Count::Infinite).expand(5),
            Err(SeriesError::ZeroFactor)
        );
        assert_eq!(
            QPochhammer::new(1, 0, Count::Finite(3)).expand(5),
            Err(SeriesError::ZeroStep)
        );
        // (-1; q)_1 = 2 is not invertible over the integers
        assert!(matches!(
            QPochhammer::new(0, 1, Count::Finite(1))
                .negated()
                .expand_inverse(5),
            Err(SeriesError::NotAUnit(_))
        ));
    }

    #[test]
    fn euler_times_inverse_is_one() {
        for order in [0, 1, 5, 20, 40] {
            let e = QPochhammer::euler().expand(order).unwrap();
            let inv = e.inverse().unwrap();
            assert_eq!(e.mul(&inv).unwrap(), Series::one(order));
            assert_eq!(inv, QPochhammer::euler().expand_inverse(order).unwrap());
        }
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(
            gaussian_binomial(4, 2).unwrap(),
            Series::from_i64s(&[1, 1, 2, 1, 1])
        );
        assert_eq!(gaussian_binomial(7, 0).unwrap(), Series::one(0));
        assert!(gaussian_binomial(3, 4).is_err());
        for n in 0..=9 {
            for d in 0..=n {
                let g = gaussian_binomial(n, d).unwrap();
                assert_eq!(g, gaussian_binomial(n, n - d).unwrap());
                assert_eq!(g.order(), d * (n - d));
                assert!(g.coeffs().iter().all(|c| c >= &0.into()));
                assert_eq!(g.coeff(d * (n - d)), &1.into());
            }
        }
    }

    /// Brute force: [n choose d] counts partitions inside a d x (n-d) box.
    #[test]
    fn gaussian_counts_partitions_in_a_box() {
        use crate::partition::enumerate_partitions_bounded;
        for n in 0..=8usize {
            for d in 0..=n {
                let g = gaussian_binomial(n, d).unwrap();
                for w in 0..=d * (n - d) {
                    let count = enumerate_partitions_bounded(w as u32, (n - d) as u32, d).len();
                    assert_eq!(g.coeff(w), &count.into(), "[{n} {d}] at q^{w}");
                }
            }
        }
    }

    #[test]
    fn bilateral_triangular_sum() {
        let s = bilateral_sum(10, |k| k * (2 * k + 1), |_| 1).unwrap();
        assert_eq!(
            s,
            Series::from_monomials(10, &[(0, 1), (1, 1), (3, 1), (6, 1), (10, 1)])
        );
    }

    #[test]
    fn bilateral_rejects_bad_exponents() {
        assert!(matches!(
            bilateral_sum(10, |_| 0, |_| 1),
            Err(SeriesError::NonCoercive { .. })
        ));
        assert!(matches!(
            bilateral_sum(10, |k| k, |_| 1),
            Err(SeriesError::NegativeExponent { .. })
        ));
    }

    #[test]
    fn alternating_triangular_sum() {
        // Σ_{k>=0} (-q)^{k(k+1)/2} = 1 - q - q^3 + q^6 + q^10 - ...
        let s = unilateral_sum(
            10,
            |k| k * (k + 1) / 2,
            |k| {
                if (k * (k + 1) / 2) % 2 == 0 {
                    1
                } else {
                    -1
                }
            },
        )
        .unwrap();
        assert_eq!(
            s,
            Series::from_monomials(10, &[(0, 1), (1, -1), (3, -1), (6, 1), (10, 1)])
        );
    }

    #[test]
    fn pentagonal_coefficients_are_supported_on_pentagonal_numbers() {
        let s = pentagonal_series(60);
        let pentagonal: Vec<usize> = (-10i64..=10)
            .map(|k| (k * (3 * k - 1) / 2) as usize)
            .filter(|&g| g <= 60)
            .collect();
        for (e, c) in s.coeffs().iter().enumerate() {
            let c = i64::try_from(c).unwrap();
            assert!((-1..=1).contains(&c));
            assert_eq!(c != 0, pentagonal.contains(&e), "q^{e}");
        }
    }

    #[test]
    fn excess_factorisation_of_reciprocal_products() {
        // 1/(q;q)_d = [n choose d] / (q^{n-d+1}; q)_d
        let order = 30;
        for n in 0..=8usize {
            for d in 0..=n {
                let lhs = QPochhammer::q_n(d).expand_inverse(order).unwrap();
                let mut rhs = gaussian_binomial_at(n, d, order).unwrap();
                QPochhammer::new(n - d + 1, 1, Count::Finite(d))
                    .divide(&mut rhs)
                    .unwrap();
                assert_eq!(lhs, rhs, "n = {n}, d = {d}");
            }
        }
    }
}
