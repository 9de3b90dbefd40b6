//! Truncated formal power series with exact integer coefficients.
//!
//! A series holds coefficients of q^0 through q^order. Binary operations
//! require both operands to share the same order: coercing would silently
//! drop information, so a mismatch is an error instead. Inversion is only
//! defined for constant term +1 or -1, which keeps every computation exact
//! over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigInt>, // always order + 1 entries
}

/// Outcome of comparing two series coefficientwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesComparison {
    Equal,
    /// Smallest exponent where the coefficients differ, with both values.
    Mismatch {
        exponent: usize,
        left: BigInt,
        right: BigInt,
    },
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// The series coeff * q^exponent. Exponents beyond the order truncate
    /// to the zero series.
    pub fn monomial(coeff: BigInt, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = coeff;
        }
        s
    }

    /// Builds a series from its coefficient vector; the order is the last
    /// index. The vector must be non-empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the q^0 coefficient"
        );
        TruncatedSeries {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, exponent: usize) -> &BigInt {
        &self.coeffs[exponent]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check_order(&self, rhs: &Self) -> Result<(), Error> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self::from_coeffs(coeffs))
    }

    /// Cauchy product, truncated to the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        self.check_order(rhs)?;
        let mut coeffs = vec![BigInt::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b, c) in rhs.coeffs[..=self.order - i]
                .iter()
                .zip(coeffs[i..].iter_mut())
            {
                if !b.is_zero() {
                    *c += a * b;
                }
            }
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplies by q^exponent, truncating at the same order.
    pub fn shift_up(&self, exponent: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i + exponent > self.order {
                break;
            }
            coeffs[i + exponent] = a.clone();
        }
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    /// Multiplicative inverse by the usual recurrence. Only constant term
    /// +1 or -1 is accepted; then every division is by a unit and the
    /// result is exact.
    pub fn invert(&self) -> Result<Self, Error> {
        let a0 = &self.coeffs[0];
        if !(a0 == &BigInt::one() || a0 == &(-BigInt::one())) {
            return Err(Error::NonUnitConstant);
        }
        let mut inv = vec![BigInt::zero(); self.order + 1];
        inv[0] = a0.clone();
        for n in 1..=self.order {
            let mut s = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    s += &self.coeffs[k] * &inv[n - k];
                }
            }
            // a0 * inv[n] + s = 0 and a0^2 = 1, so inv[n] = -s * a0.
            inv[n] = -s * a0;
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: inv,
        })
    }

    /// Coefficientwise comparison, reporting the smallest exponent that
    /// disagrees.
    pub fn compare(&self, rhs: &Self) -> Result<SeriesComparison, Error> {
        self.check_order(rhs)?;
        for (e, (a, b)) in self.coeffs.iter().zip(&rhs.coeffs).enumerate() {
            if a != b {
                return Ok(SeriesComparison::Mismatch {
                    exponent: e,
                    left: a.clone(),
                    right: b.clone(),
                });
            }
        }
        Ok(SeriesComparison::Equal)
    }
}

/// Exact integer entries indexed by (m, n): coefficient of x^m q^n in a
/// two-variable expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateTable {
    max_m: usize,
    max_n: usize,
    entries: Vec<Vec<BigInt>>, // entries[m][n]
}

/// Outcome of comparing two tables entrywise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableComparison {
    Equal,
    /// First mismatch scanning by exponent n, then by part count m.
    Mismatch {
        parts: usize,
        exponent: usize,
        left: BigInt,
        right: BigInt,
    },
}

impl BivariateTable {
    pub fn zero(max_m: usize, max_n: usize) -> Self {
        BivariateTable {
            max_m,
            max_n,
            entries: vec![vec![BigInt::zero(); max_n + 1]; max_m + 1],
        }
    }

    pub fn max_m(&self) -> usize {
        self.max_m
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn get(&self, m: usize, n: usize) -> &BigInt {
        &self.entries[m][n]
    }

    pub fn set(&mut self, m: usize, n: usize, value: BigInt) {
        self.entries[m][n] = value;
    }

    /// Row m as a series in q, truncated at max_n.
    pub fn row(&self, m: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.entries[m].clone())
    }

    /// Sums all rows: the series at x = 1.
    pub fn row_sum(&self) -> TruncatedSeries {
        let mut coeffs = vec![BigInt::zero(); self.max_n + 1];
        for row in &self.entries {
            for (c, v) in coeffs.iter_mut().zip(row) {
                *c += v;
            }
        }
        TruncatedSeries::from_coeffs(coeffs)
    }

    pub fn compare(&self, rhs: &Self) -> Result<TableComparison, Error> {
        if self.max_m != rhs.max_m || self.max_n != rhs.max_n {
            return Err(Error::ShapeMismatch {
                left: (self.max_m, self.max_n),
                right: (rhs.max_m, rhs.max_n),
            });
        }
        for n in 0..=self.max_n {
            for m in 0..=self.max_m {
                if self.entries[m][n] != rhs.entries[m][n] {
                    return Ok(TableComparison::Mismatch {
                        parts: m,
                        exponent: n,
                        left: self.entries[m][n].clone(),
                        right: rhs.entries[m][n].clone(),
                    });
                }
            }
        }
        Ok(TableComparison::Equal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn mul_binomial_square() {
        let one_plus_q = s(&[1, 1, 0]);
        assert_eq!(one_plus_q.mul(&one_plus_q).unwrap(), s(&[1, 2, 1]));
    }

    #[test]
    fn mul_one_is_identity() {
        let f = s(&[3, 0, -2, 7]);
        assert_eq!(f.mul(&TruncatedSeries::one(3)).unwrap(), f);
    }

    #[test]
    fn mul_truncates() {
        let a = s(&[1, 0, 1, 0, 0, 0, 0, 0, 0, 0]); // 1 + q^2
        let b = s(&[1, 0, 0, 0, 0, 1, 0, 0, 0, 0]); // 1 + q^5
        let expect = s(&[1, 0, 1, 0, 0, 1, 0, 1, 0, 0]); // 1 + q^2 + q^5 + q^7
        assert_eq!(a.mul(&b).unwrap(), expect);
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::one(4);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch { left: 3, right: 4 }));
        assert!(a.add(&b).is_err());
        assert!(a.compare(&b).is_err());
    }

    #[test]
    fn invert_geometric() {
        // 1/(1 - q) = 1 + q + q^2 + ...
        let f = s(&[1, -1, 0, 0, 0]);
        assert_eq!(f.invert().unwrap(), s(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn invert_negative_unit() {
        let f = s(&[-1, 1, 0]);
        let inv = f.invert().unwrap();
        assert_eq!(f.mul(&inv).unwrap(), TruncatedSeries::one(2));
    }

    #[test]
    fn invert_roundtrip() {
        let f = s(&[1, 4, -3, 0, 2, 9]);
        let inv = f.invert().unwrap();
        assert_eq!(f.mul(&inv).unwrap(), TruncatedSeries::one(5));
    }

    #[test]
    fn invert_requires_unit_constant() {
        assert_eq!(s(&[2, 1]).invert(), Err(Error::NonUnitConstant));
        assert_eq!(s(&[0, 1]).invert(), Err(Error::NonUnitConstant));
    }

    #[test]
    fn monomial_past_order_is_zero() {
        let m = TruncatedSeries::monomial(BigInt::from(5), 9, 4);
        assert_eq!(m, TruncatedSeries::zero(4));
    }

    #[test]
    fn shift_up_truncates() {
        let f = s(&[1, 1, 1]);
        assert_eq!(f.shift_up(2), s(&[0, 0, 1]));
    }

    #[test]
    fn compare_reports_smallest_exponent() {
        let a = s(&[1, 1, 5]);
        let b = s(&[1, 2, 6]);
        assert_eq!(
            a.compare(&b).unwrap(),
            SeriesComparison::Mismatch {
                exponent: 1,
                left: BigInt::from(1),
                right: BigInt::from(2),
            }
        );
        assert_eq!(a.compare(&a).unwrap(), SeriesComparison::Equal);
    }

    #[test]
    fn table_compare_scans_exponent_first() {
        let mut a = BivariateTable::zero(2, 3);
        let mut b = BivariateTable::zero(2, 3);
        a.set(2, 1, BigInt::from(1));
        a.set(0, 2, BigInt::from(4));
        b.set(0, 2, BigInt::from(4));
        match a.compare(&b).unwrap() {
            TableComparison::Mismatch {
                parts, exponent, ..
            } => {
                assert_eq!((parts, exponent), (2, 1));
            }
            TableComparison::Equal => panic!("tables differ"),
        }
        assert!(a.compare(&BivariateTable::zero(1, 3)).is_err());
    }

    #[test]
    fn row_sum_adds_rows() {
        let mut t = BivariateTable::zero(2, 2);
        t.set(0, 0, BigInt::from(1));
        t.set(1, 1, BigInt::from(2));
        t.set(2, 1, BigInt::from(3));
        assert_eq!(t.row_sum(), s(&[1, 5, 0]));
    }
}
