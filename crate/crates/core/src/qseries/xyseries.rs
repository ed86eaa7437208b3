//! Power series in two variables `x`, `y`, truncated by total degree.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XYSeries {
    degree: usize,
    // rows[a][b] is the coefficient of x^a y^b, with a + b <= degree
    rows: Vec<Vec<BigInt>>,
}

impl XYSeries {
    pub fn zero(degree: usize) -> Self {
        XYSeries {
            degree,
            rows: (0..=degree)
                .map(|a| vec![BigInt::zero(); degree - a + 1])
                .collect(),
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = XYSeries::zero(degree);
        s.rows[0][0] = BigInt::from(1);
        s
    }

    /// The total-degree truncation `D`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficient of `x^a y^b`; zero beyond the truncation.
    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        if a + b > self.degree {
            return BigInt::zero();
        }
        self.rows[a][b].clone()
    }

    /// Sets a coefficient; terms beyond the truncation are dropped.
    pub fn set_coeff(&mut self, a: usize, b: usize, c: impl Into<BigInt>) {
        if a + b <= self.degree {
            self.rows[a][b] = c.into();
        }
    }

    /// Nonzero terms as `(a, b, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.rows.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(b, c)| (a, b, c))
        })
    }

    fn check(&self, other: &XYSeries) -> Result<(), SeriesError> {
        if self.degree != other.degree {
            return Err(SeriesError::OrderMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &XYSeries) -> Result<XYSeries, SeriesError> {
        self.check(other)?;
        let mut out = self.clone();
        for (ro, ri) in out.rows.iter_mut().zip(&other.rows) {
            for (x, y) in ro.iter_mut().zip(ri) {
                *x += y;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &XYSeries) -> Result<XYSeries, SeriesError> {
        self.check(other)?;
        let mut out = self.clone();
        for (ro, ri) in out.rows.iter_mut().zip(&other.rows) {
            for (x, y) in ro.iter_mut().zip(ri) {
                *x -= y;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &XYSeries) -> Result<XYSeries, SeriesError> {
        self.check(other)?;
        let mut out = XYSeries::zero(self.degree);
        let rhs: Vec<_> = other.terms().collect();
        for (a1, b1, c1) in self.terms() {
            for &(a2, b2, c2) in &rhs {
                if a1 + a2 + b1 + b2 <= self.degree {
                    out.rows[a1 + a2][b1 + b2] += c1 * c2;
                }
            }
        }
        Ok(out)
    }

    /// In place: multiplies by `1 + c x^a y^b` with `a + b >= 1`.
    pub fn mul_binomial(&mut self, c: i64, a: usize, b: usize) {
        assert!(a + b >= 1, "factor must be non-constant");
        if a + b > self.degree {
            return;
        }
        let c = BigInt::from(c);
        // descending total degree so each source term is read before it is updated
        for total in (a + b..=self.degree).rev() {
            for i in a..=total - b {
                let j = total - i;
                if j < b {
                    continue;
                }
                let src = &self.rows[i - a][j - b];
                if src.is_zero() {
                    continue;
                }
                let add = src * &c;
                self.rows[i][j] += add;
            }
        }
    }

    /// Substitutes `x = q^alpha`, `y = q^beta` and truncates at `q^order`.
    ///
    /// Every monomial dropped by the total-degree truncation must land past
    /// `q^order`, which needs `(D + 1) * min(alpha, beta) > order`.
    pub fn substitute(
        &self,
        alpha: usize,
        beta: usize,
        order: usize,
    ) -> Result<Series, SeriesError> {
        if alpha == 0 || beta == 0 {
            return Err(SeriesError::ZeroSubstitution);
        }
        let needed = order / alpha.min(beta);
        if self.degree < needed {
            return Err(SeriesError::InsufficientDegree {
                needed,
                have: self.degree,
            });
        }
        let mut out = Series::zero(order);
        for (a, b, c) in self.terms() {
            let e = a * alpha + b * beta;
            if e <= order {
                let v = out.coeff(e) + c;
                out.set_coeff(e, v);
            }
        }
        Ok(out)
    }
}

/// `Π_{n>=1} (1 - x^n y^n)(1 + x^n y^{n-1})(1 + x^{n-1} y^n)` to total degree `D`.
pub fn carlitz_product(degree: usize) -> XYSeries {
    let mut s = XYSeries::one(degree);
    let mut n = 1;
    while 2 * n - 1 <= degree {
        s.mul_binomial(-1, n, n);
        s.mul_binomial(1, n, n - 1);
        s.mul_binomial(1, n - 1, n);
        n += 1;
    }
    s
}

/// `Σ_{n ∈ Z} x^{n(n+1)/2} y^{n(n-1)/2}` to total degree `D`.
pub fn carlitz_theta(degree: usize) -> XYSeries {
    let mut s = XYSeries::zero(degree);
    let mut n: i64 = 0;
    // total degree is n^2
    while (n * n) as usize <= degree {
        for k in if n == 0 { vec![0] } else { vec![n, -n] } {
            let a = (k * (k + 1) / 2) as usize;
            let b = (k * (k - 1) / 2) as usize;
            let v = s.coeff(a, b) + 1;
            s.set_coeff(a, b, v);
        }
        n += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_coefficients() {
        for s in [carlitz_product(10), carlitz_theta(10)] {
            assert_eq!(s.coeff(0, 0), 1.into());
            assert_eq!(s.coeff(1, 0), 1.into());
            assert_eq!(s.coeff(0, 1), 1.into());
            assert_eq!(s.coeff(1, 1), 0.into());
        }
    }

    #[test]
    fn carlitz_identity_to_degree_30() {
        assert_eq!(carlitz_product(30), carlitz_theta(30));
    }

    /// Expands the product term by term without the in-place update.
    #[test]
    fn in_place_factors_match_plain_multiplication() {
        let d = 12;
        let mut plain = XYSeries::one(d);
        for n in 1..=d {
            for (c, a, b) in [(-1, n, n), (1, n, n - 1), (1, n - 1, n)] {
                let mut f = XYSeries::one(d);
                f.set_coeff(a, b, c);
                plain = plain.mul(&f).unwrap();
            }
        }
        assert_eq!(plain, carlitz_product(d));
    }

    #[test]
    fn substitution_guards() {
        let s = carlitz_theta(10);
        assert_eq!(s.substitute(0, 1, 5), Err(SeriesError::ZeroSubstitution));
        assert_eq!(
            s.substitute(1, 1, 20),
            Err(SeriesError::InsufficientDegree {
                needed: 20,
                have: 10
            })
        );
        // x = q^3, y = q gives Σ q^{2k^2 + k}
        let t = s.substitute(3, 1, 10).unwrap();
        assert_eq!(
            t,
            Series::from_monomials(10, &[(0, 1), (1, 1), (3, 1), (6, 1), (10, 1)])
        );
    }
}
