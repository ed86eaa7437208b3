//! Series in `q` whose coefficients are Laurent polynomials in `z`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};

use super::{QPochhammer, Series, SeriesError};

/// A bivariate series truncated after `q^order`, with `z`-exponents kept in
/// `[-order, order]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSeries {
    order: usize,
    // rows[n][m + order] is the coefficient of z^m q^n
    rows: Vec<Vec<BigInt>>,
}

impl ZSeries {
    pub fn zero(order: usize) -> Self {
        ZSeries {
            order,
            rows: vec![vec![BigInt::zero(); 2 * order + 1]; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = ZSeries::zero(order);
        s.rows[0][order] = BigInt::from(1);
        s
    }

    /// `c z^m q^n`, or zero if `q^n` is past the truncation.
    pub fn monomial(
        order: usize,
        m: i64,
        n: usize,
        c: impl Into<BigInt>,
    ) -> Result<Self, SeriesError> {
        let mut s = ZSeries::zero(order);
        if n <= order {
            let idx = s.index(m)?;
            s.rows[n][idx] = c.into();
        }
        Ok(s)
    }

    /// Embeds a series in `q` as the `z^0` slice.
    pub fn from_series(s: &Series) -> Self {
        let order = s.order();
        let mut z = ZSeries::zero(order);
        for (n, c) in s.coeffs().iter().enumerate() {
            z.rows[n][order] = c.clone();
        }
        z
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn index(&self, m: i64) -> Result<usize, SeriesError> {
        if m.unsigned_abs() > self.order as u64 {
            return Err(SeriesError::ZExponentOverflow(m));
        }
        Ok((m + self.order as i64) as usize)
    }

    /// Coefficient of `z^m q^n`; zero outside the stored range.
    pub fn coeff(&self, m: i64, n: usize) -> BigInt {
        match self.index(m) {
            Ok(idx) if n <= self.order => self.rows[n][idx].clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn set_coeff(&mut self, m: i64, n: usize, c: impl Into<BigInt>) -> Result<(), SeriesError> {
        let idx = self.index(m)?;
        if n <= self.order {
            self.rows[n][idx] = c.into();
        }
        Ok(())
    }

    /// Nonzero terms as `(m, n, coeff)`, sorted by `(n, m)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, usize, &BigInt)> + '_ {
        let off = self.order as i64;
        self.rows.iter().enumerate().flat_map(move |(n, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (i as i64 - off, n, c))
        })
    }

    fn check_order(&self, other: &ZSeries) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &ZSeries) -> Result<ZSeries, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (ro, ri) in out.rows.iter_mut().zip(&other.rows) {
            for (a, b) in ro.iter_mut().zip(ri) {
                *a += b;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ZSeries) -> Result<ZSeries, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (ro, ri) in out.rows.iter_mut().zip(&other.rows) {
            for (a, b) in ro.iter_mut().zip(ri) {
                *a -= b;
            }
        }
        Ok(out)
    }

    /// Truncated product. Fails if a nonzero product term lands outside the
    /// stored `z` range.
    pub fn mul(&self, other: &ZSeries) -> Result<ZSeries, SeriesError> {
        self.check_order(other)?;
        let mut out = ZSeries::zero(self.order);
        let lhs: Vec<_> = self.terms().collect();
        let rhs: Vec<_> = other.terms().collect();
        for &(m1, n1, c1) in &lhs {
            for &(m2, n2, c2) in &rhs {
                let n = n1 + n2;
                if n > self.order {
                    continue;
                }
                let idx = out.index(m1 + m2)?;
                out.rows[n][idx] += c1 * c2;
            }
        }
        Ok(out)
    }

    /// Multiplies every `z`-slice by a series in `q`.
    pub fn mul_series(&self, s: &Series) -> Result<ZSeries, SeriesError> {
        if s.order() != self.order {
            return Err(SeriesError::OrderMismatch(self.order, s.order()));
        }
        let width = 2 * self.order + 1;
        let mut out = ZSeries::zero(self.order);
        for i in 0..width {
            for n1 in 0..=self.order {
                let a = &self.rows[n1][i];
                if a.is_zero() {
                    continue;
                }
                for n2 in 0..=self.order - n1 {
                    let b = s.coeff(n2);
                    if !b.is_zero() {
                        out.rows[n1 + n2][i] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// In place: divides by `1 - z^s q^k` (`s = ±1`, `k >= 1`) by expanding
    /// the geometric series.
    pub fn div_geometric(&mut self, s: i64, k: usize) -> Result<(), SeriesError> {
        if k == 0 {
            return Err(SeriesError::NotAUnit("1 - z^s".to_string()));
        }
        let width = self.rows[0].len() as i64;
        for n in k..=self.order {
            let prev = self.rows[n - k].clone();
            for (j, c) in prev.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = j as i64 + s;
                if t < 0 || t >= width {
                    return Err(SeriesError::ZExponentOverflow(t - self.order as i64));
                }
                self.rows[n][t as usize] += c;
            }
        }
        Ok(())
    }

    /// The series in `q` obtained by setting `z = v`. Negative powers of `z`
    /// require `v = ±1`.
    pub fn substitute_z(&self, v: i64) -> Result<Series, SeriesError> {
        let off = self.order as i64;
        let mut out = Series::zero(self.order);
        for (n, row) in self.rows.iter().enumerate() {
            let mut acc = BigInt::zero();
            for (i, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let m = i as i64 - off;
                acc += c * pow_laurent(v, m)?;
            }
            out.set_coeff(n, acc);
        }
        Ok(out)
    }

    /// The coefficient of `z^m` as a series in `q`.
    pub fn z_coefficient(&self, m: i64) -> Series {
        let mut out = Series::zero(self.order);
        if let Ok(idx) = self.index(m) {
            for (n, row) in self.rows.iter().enumerate() {
                out.set_coeff(n, row[idx].clone());
            }
        }
        out
    }
}

fn pow_laurent(v: i64, m: i64) -> Result<BigInt, SeriesError> {
    if m < 0 && v != 1 && v != -1 {
        return Err(SeriesError::NotAUnit(v.to_string()));
    }
    Ok(num_traits::pow(BigInt::from(v), m.unsigned_abs() as usize))
}

struct Term<'a>(i64, usize, &'a BigInt);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("z", &self.0)?;
        map.serialize_entry("q", &self.1)?;
        map.serialize_entry("c", &self.2.to_string())?;
        map.end()
    }
}

impl Serialize for ZSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (m, n, c) in terms {
            seq.serialize_element(&Term(m, n, c))?;
        }
        seq.end()
    }
}

impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, n, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})z^{m}q^{n}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// `(q;q)_∞ / ((zq;q)_∞ (q/z;q)_∞)` to `q`-order `order`: the crank
/// generating function, whose `z^m q^n` coefficient is `M(m, n)`.
pub fn crank_gf_bivariate(order: usize) -> ZSeries {
    let euler = QPochhammer::euler()
        .expand(order)
        .expect("(q;q) has no zero factor");
    let mut s = ZSeries::from_series(&euler);
    for k in 1..=order {
        s.div_geometric(1, k)
            .expect("z-degree stays below q-degree");
        s.div_geometric(-1, k)
            .expect("z-degree stays below q-degree");
    }
    s
}

/// `Σ_n z^{2n} q^{n(n+1)} / ((zq;q)_n (q;q)_n)`: partitions with crank at
/// most 0, with `z` marking the number of parts.
pub fn crank_le0_bivariate(order: usize) -> ZSeries {
    let mut total = ZSeries::zero(order);
    let mut n = 0usize;
    while n * (n + 1) <= order {
        let mut term =
            ZSeries::monomial(order, 2 * n as i64, n * (n + 1), 1).expect("2n <= n(n+1) <= order");
        for k in 1..=n {
            term.div_geometric(1, k)
                .expect("z-degree stays below q-degree");
        }
        let mut inv = Series::one(order);
        QPochhammer::q_n(n)
            .divide(&mut inv)
            .expect("(q;q)_n is invertible");
        term = term.mul_series(&inv).expect("same order");
        total = total.add(&term).expect("same order");
        n += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crank_gf_low_coefficients() {
        let s = crank_gf_bivariate(6);
        assert_eq!(s.coeff(0, 0), 1.into());
        assert_eq!(s.coeff(0, 1), (-1).into());
        assert_eq!(s.coeff(1, 1), 1.into());
        assert_eq!(s.coeff(-1, 1), 1.into());
        // z = 1 collapses to the partition generating function
        let at_one = s.substitute_z(1).unwrap();
        assert_eq!(at_one.to_i64s().unwrap(), [1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn crank_gf_is_symmetric_and_bounded() {
        let s = crank_gf_bivariate(20);
        for (m, n, _) in s.terms() {
            assert!(n < 2 || m.unsigned_abs() as usize <= n, "z^{m} q^{n}");
        }
        for n in 0..=20 {
            for m in 0..=20 {
                assert_eq!(s.coeff(m, n), s.coeff(-m, n));
            }
        }
    }

    #[test]
    fn crank_le0_examples() {
        let s = crank_le0_bivariate(30);
        assert_eq!(s.coeff(0, 0), 1.into());
        assert_eq!(s.coeff(2, 2), 1.into());
        assert_eq!(s.coeff(1, 1), 0.into());
        let collapsed = s.substitute_z(-1).unwrap();
        let mut expected = Series::zero(30);
        let mut n = 0;
        while n * (n + 1) <= 30 {
            let mut t = Series::monomial(30, n * (n + 1), 1);
            crate::qseries::QPochhammer::new(2, 2, crate::qseries::Count::Finite(n))
                .divide(&mut t)
                .unwrap();
            expected = expected.add(&t).unwrap();
            n += 1;
        }
        assert_eq!(collapsed, expected);
    }

    #[test]
    fn mul_and_overflow() {
        let a = ZSeries::monomial(2, 2, 1, 1).unwrap();
        let b = ZSeries::monomial(2, 1, 1, 1).unwrap();
        assert_eq!(a.mul(&b), Err(SeriesError::ZExponentOverflow(3)));
        let c = ZSeries::monomial(2, -1, 1, 3).unwrap();
        let p = a.mul(&c).unwrap();
        assert_eq!(p.coeff(1, 2), 3.into());
        assert_eq!(
            ZSeries::one(3).mul(&ZSeries::one(4)),
            Err(SeriesError::OrderMismatch(3, 4))
        );
        assert!(c.substitute_z(2).is_err());
        assert_eq!(a.substitute_z(2).unwrap().coeff(1), &4.into());
    }

    #[test]
    fn json_terms_are_sorted_by_q_then_z() {
        let s = crank_gf_bivariate(1);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"[{"z":0,"q":0,"c":"1"},{"z":-1,"q":1,"c":"1"},{"z":0,"q":1,"c":"-1"},{"z":1,"q":1,"c":"1"}]"#
        );
    }
}
