use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::SeriesError;

/// A power series in `q` truncated after `q^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::monomial(order, 0, 1)
    }

    /// `coeff * q^exp`, or zero when `exp` exceeds the order.
    pub fn monomial(order: usize, exp: usize, coeff: impl Into<BigInt>) -> Self {
        let mut s = Series::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff.into();
        }
        s
    }

    /// Sum of `c * q^e` over `terms`; exponents above the order are dropped.
    pub fn from_monomials(order: usize, terms: &[(usize, i64)]) -> Self {
        let mut s = Series::zero(order);
        for &(e, c) in terms {
            if e <= order {
                s.coeffs[e] += c;
            }
        }
        s
    }

    /// Builds a series of order `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Series { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Series::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, exp: usize) -> &BigInt {
        &self.coeffs[exp]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, exp: usize, value: impl Into<BigInt>) {
        self.coeffs[exp] = value.into();
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Series) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Series { coeffs })
    }

    pub fn sub(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Series { coeffs })
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    pub fn scale(&self, factor: impl Into<BigInt>) -> Series {
        let factor = factor.into();
        Series {
            coeffs: self.coeffs.iter().map(|c| c * &factor).collect(),
        }
    }

    /// Multiplies by `q^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.order();
        let mut out = Series::zero(n);
        for e in k..=n {
            out.coeffs[e] = self.coeffs[e - k].clone();
        }
        out
    }

    /// In place: `self *= 1 + c q^e`.
    pub fn mul_binomial(&mut self, c: i64, e: usize) {
        let n = self.order();
        if e == 0 {
            let factor = BigInt::from(1 + c);
            for x in &mut self.coeffs {
                *x *= &factor;
            }
            return;
        }
        for i in (e..=n).rev() {
            let t = &self.coeffs[i - e] * c;
            self.coeffs[i] += t;
        }
    }

    /// In place: `self /= 1 + c q^e`, for `e >= 1`, by expanding the
    /// geometric series. With `e = 0` the factor must be a unit.
    pub fn div_binomial(&mut self, c: i64, e: usize) -> Result<(), SeriesError> {
        let n = self.order();
        if e == 0 {
            return match 1 + c {
                1 => Ok(()),
                -1 => {
                    *self = self.neg();
                    Ok(())
                }
                _ => Err(SeriesError::NotAUnit((1 + c).to_string())),
            };
        }
        for i in e..=n {
            let t = &self.coeffs[i - e] * c;
            self.coeffs[i] -= t;
        }
        Ok(())
    }

    /// Multiplicative inverse; the constant coefficient must be `1` or `-1`.
    pub fn inverse(&self) -> Result<Series, SeriesError> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(SeriesError::NotAUnit(c0.to_string()));
        }
        let n = self.order();
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = c0.clone();
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv[k - i];
                }
            }
            // c0 is its own inverse
            inv[k] = -(acc * c0);
        }
        Ok(Series { coeffs: inv })
    }

    /// Divides every coefficient by `k`, failing unless the division is exact.
    pub fn div_exact(&self, k: i64) -> Result<Series, SeriesError> {
        let k_big = BigInt::from(k);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quot, rem) = c.div_rem(&k_big);
            if !rem.is_zero() {
                return Err(SeriesError::NotDivisible(k));
            }
            coeffs.push(quot);
        }
        Ok(Series { coeffs })
    }

    /// Drops coefficients past `order`.
    ///
    /// # Panics
    /// If `order` exceeds the current order.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot truncate upwards");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Re-targets an exact polynomial to `order`, padding with zeros or
    /// truncating. Only meaningful when the series is known to be a
    /// polynomial of degree at most its current order.
    pub fn polynomial_at(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigInt::zero());
        Series { coeffs }
    }

    /// `q -> q^s` at the same order.
    pub fn substitute_power(&self, s: usize) -> Result<Series, SeriesError> {
        if s == 0 {
            return Err(SeriesError::ZeroSubstitution);
        }
        let n = self.order();
        let mut out = Series::zero(n);
        for (e, c) in self.coeffs.iter().enumerate() {
            if e * s > n {
                break;
            }
            out.coeffs[e * s] = c.clone();
        }
        Ok(out)
    }

    /// Coefficients as `i64`, when all of them fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn geometric_telescopes() {
        let n = 10;
        let geometric = Series::from_monomials(n, &(0..=n).map(|k| (k, 1)).collect::<Vec<_>>());
        let one_minus_q = Series::from_monomials(n, &[(0, 1), (1, -1)]);
        assert_eq!(one_minus_q.mul(&geometric).unwrap(), Series::one(n));
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let s = Series::from_monomials(3, &[(0, 1), (1, -1)]);
        assert_eq!(s.inverse().unwrap(), Series::from_i64s(&[1, 1, 1, 1]));
        let neg = Series::from_monomials(3, &[(0, -1), (2, 1)]);
        let inv = neg.inverse().unwrap();
        assert_eq!(neg.mul(&inv).unwrap(), Series::one(3));
    }

    #[test]
    fn errors() {
        let a = Series::one(3);
        let b = Series::one(4);
        assert_eq!(a.add(&b), Err(SeriesError::OrderMismatch(3, 4)));
        assert_eq!(a.mul(&b), Err(SeriesError::OrderMismatch(3, 4)));
        let two = Series::from_monomials(3, &[(0, 2)]);
        assert!(matches!(two.inverse(), Err(SeriesError::NotAUnit(_))));
        assert_eq!(
            Series::from_i64s(&[2, 3]).div_exact(2),
            Err(SeriesError::NotDivisible(2))
        );
    }

    #[test]
    fn binomial_factors_invert_each_other() {
        let mut s = Series::from_i64s(&[1, 4, -2, 7, 0, 3, 1]);
        let original = s.clone();
        s.mul_binomial(-3, 2);
        s.div_binomial(-3, 2).unwrap();
        assert_eq!(s, original);
    }

    #[test]
    fn display_and_json() {
        let s = Series::from_i64s(&[1, -1, -1, 0, 0, 1]);
        assert_eq!(s.to_string(), "1 - q - q^2 + q^5 + O(q^6)");
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"["1","-1","-1","0","0","1"]"#
        );
    }

    fn sparse_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec((0..=order, -20i64..20), 0..6)
            .prop_map(move |terms| Series::from_monomials(order, &terms))
    }

    proptest! {
        #[test]
        fn multiplication_commutes(a in sparse_series(12), b in sparse_series(12)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        #[test]
        fn multiplication_distributes(a in sparse_series(10), b in sparse_series(10), c in sparse_series(10)) {
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn unit_series_times_inverse_is_one(tail in sparse_series(15), negate in any::<bool>()) {
            let mut s = tail.clone();
            s.set_coeff(0, if negate { -1 } else { 1 });
            let inv = s.inverse().unwrap();
            prop_assert_eq!(s.mul(&inv).unwrap(), Series::one(15));
        }
    }
}
