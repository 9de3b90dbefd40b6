//! q-Pochhammer products and two specializations of the universal mock
//! theta functions g2 and g3.
//!
//! All products live in base q^step for a modulus step >= 1. Infinite
//! products are truncated by dropping every factor whose smallest exponent
//! exceeds the order, which is exact for the retained coefficients.
//!
//! The specializations expanded here are g2(-q^r; q^d) and g3(-q^r; q^d):
//!
//!   g2: sum over n >= 0 of (-q^d; q^d)_n q^(d n(n+1)/2)
//!       / ((-q^r; q^d)_{n+1} (-q^(d-r); q^d)_{n+1})
//!
//!   g3: sum over n >= 0 of q^(d n(n+1))
//!       / ((-q^r; q^d)_{n+1} (-q^(d-r); q^d)_{n+1})
//!
//! Each summand's lowest exponent is the q-power in its numerator, so the
//! sum stops as soon as that power passes the truncation order. Every
//! denominator has constant term 1 and inverts exactly over the integers.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A Pochhammer argument of the form sign * q^exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monomial {
    pub sign: Sign,
    pub exponent: usize,
}

impl Monomial {
    pub fn plus(exponent: usize) -> Self {
        Monomial {
            sign: Sign::Plus,
            exponent,
        }
    }

    pub fn minus(exponent: usize) -> Self {
        Monomial {
            sign: Sign::Minus,
            exponent,
        }
    }
}

/// The single factor 1 - arg * q^(step * index), truncated at order.
pub(crate) fn factor(arg: Monomial, step: usize, index: usize, order: usize) -> TruncatedSeries {
    let exponent = arg.exponent + step * index;
    let coeff = match arg.sign {
        Sign::Plus => -BigInt::one(),
        Sign::Minus => BigInt::one(),
    };
    TruncatedSeries::one(order)
        .add(&TruncatedSeries::monomial(coeff, exponent, order))
        .expect("orders match")
}

/// Finite product (arg; q^step)_count = prod_{i=0}^{count-1} (1 - arg q^(step i)).
pub fn poch_finite(arg: Monomial, step: usize, count: usize, order: usize) -> TruncatedSeries {
    assert!(step >= 1, "Pochhammer modulus must be positive");
    let mut p = TruncatedSeries::one(order);
    for i in 0..count {
        if arg.exponent + step * i > order {
            break; // every later factor is 1 at this truncation
        }
        p = p.mul(&factor(arg, step, i, order)).expect("orders match");
    }
    p
}

/// Infinite product (a1, ..., ak; q^step)_infinity over all given arguments.
/// Arguments must have exponent >= 1; a constant argument would repeat the
/// same factor forever.
pub fn poch_infinite(
    args: &[Monomial],
    step: usize,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    assert!(step >= 1, "Pochhammer modulus must be positive");
    let mut p = TruncatedSeries::one(order);
    for &arg in args {
        if arg.exponent == 0 {
            return Err(Error::DivergentProduct);
        }
        let mut i = 0;
        while arg.exponent + step * i <= order {
            p = p.mul(&factor(arg, step, i, order)).expect("orders match");
            i += 1;
        }
    }
    Ok(p)
}

/// 1 / (q^step; q^step)_infinity: the generating function for partitions
/// into parts divisible by step, computed directly by the standard
/// part-by-part recurrence.
pub fn inv_poch_infinite(step: usize, order: usize) -> TruncatedSeries {
    assert!(step >= 1, "Pochhammer modulus must be positive");
    let mut coeffs = vec![BigInt::from(0); order + 1];
    coeffs[0] = BigInt::one();
    let mut part = step;
    while part <= order {
        for e in part..=order {
            let prev = coeffs[e - part].clone();
            coeffs[e] += prev;
        }
        part += step;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

fn check_special_params(d: u64, r: u64) -> Result<(), Error> {
    if r >= 1 && 2 * r < d {
        Ok(())
    } else {
        Err(Error::InvalidParameters { d, r })
    }
}

/// Shared summation for the two specializations. lead(n) gives the q-power
/// of the n-th summand's numerator; with_numerator_product says whether the
/// summand carries the extra (-q^d; q^d)_n factor (g2 does, g3 does not).
fn special_sum(
    d: usize,
    r: usize,
    order: usize,
    lead: impl Fn(usize) -> usize,
    with_numerator_product: bool,
) -> TruncatedSeries {
    let mut sum = TruncatedSeries::zero(order);
    // State for summand n: numer = (-q^d; q^d)_n (or 1), denom_inv the
    // inverse of (-q^r; q^d)_{n+1} (-q^(d-r); q^d)_{n+1}.
    let mut numer = TruncatedSeries::one(order);
    let mut denom_inv = factor(Monomial::minus(r), d, 0, order)
        .mul(&factor(Monomial::minus(d - r), d, 0, order))
        .expect("orders match")
        .invert()
        .expect("constant term 1");
    let mut n = 0;
    while lead(n) <= order {
        if n > 0 {
            if with_numerator_product {
                numer = numer
                    .mul(&factor(Monomial::minus(d), d, n - 1, order))
                    .expect("orders match");
            }
            denom_inv = denom_inv
                .mul(
                    &factor(Monomial::minus(r), d, n, order)
                        .invert()
                        .expect("constant term 1"),
                )
                .expect("orders match")
                .mul(
                    &factor(Monomial::minus(d - r), d, n, order)
                        .invert()
                        .expect("constant term 1"),
                )
                .expect("orders match");
        }
        let term = numer
            .mul(&denom_inv)
            .expect("orders match")
            .shift_up(lead(n));
        sum = sum.add(&term).expect("orders match");
        n += 1;
    }
    sum
}

/// g2(-q^r; q^d) truncated at order. Requires 1 <= r < d/2.
pub fn g2_special(d: u64, r: u64, order: usize) -> Result<TruncatedSeries, Error> {
    check_special_params(d, r)?;
    let (d, r) = (d as usize, r as usize);
    Ok(special_sum(d, r, order, |n| d * n * (n + 1) / 2, true))
}

/// g3(-q^r; q^d) truncated at order. Requires 1 <= r < d/2.
pub fn g3_special(d: u64, r: u64, order: usize) -> Result<TruncatedSeries, Error> {
    check_special_params(d, r)?;
    let (d, r) = (d as usize, r as usize);
    Ok(special_sum(d, r, order, |n| d * n * (n + 1), false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn coeffs_i64(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).expect("fits i64"))
            .collect()
    }

    /// Independent expansion of a product of distinct factors (1 + q^e):
    /// the coefficient of q^n counts subsets of the exponent list summing
    /// to n.
    fn subset_sum_counts(exponents: &[usize], order: usize) -> Vec<i64> {
        let mut counts = vec![0i64; order + 1];
        counts[0] = 1;
        for &e in exponents {
            for n in (e..=order).rev() {
                counts[n] += counts[n - e];
            }
        }
        counts
    }

    /// Independent count of partitions of n into parts divisible by step.
    fn divisible_partition_counts(step: usize, order: usize) -> Vec<i64> {
        let mut counts = vec![0i64; order + 1];
        counts[0] = 1;
        let mut part = step;
        while part <= order {
            for n in part..=order {
                counts[n] += counts[n - part];
            }
            part += step;
        }
        counts
    }

    #[test]
    fn poch_finite_empty_product() {
        assert_eq!(
            poch_finite(Monomial::minus(2), 7, 0, 5),
            TruncatedSeries::one(5)
        );
    }

    #[test]
    fn poch_finite_two_factors() {
        // (-q^2; q^7)_2 = (1 + q^2)(1 + q^9)
        let p = poch_finite(Monomial::minus(2), 7, 2, 11);
        assert_eq!(coeffs_i64(&p), vec![1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn poch_finite_plus_sign() {
        let p = poch_finite(Monomial::plus(1), 1, 1, 3);
        assert_eq!(coeffs_i64(&p), vec![1, -1, 0, 0]);
    }

    #[test]
    fn poch_infinite_empty_args() {
        assert_eq!(poch_infinite(&[], 3, 8).unwrap(), TruncatedSeries::one(8));
    }

    #[test]
    fn poch_infinite_schur_product() {
        // (-q^2, -q^5; q^7)_infinity: distinct parts congruent to 2 or 5 mod 7.
        let p = poch_infinite(&[Monomial::minus(2), Monomial::minus(5)], 7, 9).unwrap();
        assert_eq!(coeffs_i64(&p), vec![1, 0, 1, 0, 0, 1, 0, 1, 0, 1]);
        // Cross-check against direct subset-sum expansion of the factors.
        assert_eq!(coeffs_i64(&p), subset_sum_counts(&[2, 5, 9], 9));
    }

    #[test]
    fn poch_infinite_matches_subset_sums_deeper() {
        let order = 40;
        let p = poch_infinite(&[Monomial::minus(2), Monomial::minus(5)], 7, order).unwrap();
        let mut exps = Vec::new();
        for e in (2..=order).step_by(7) {
            exps.push(e);
        }
        for e in (5..=order).step_by(7) {
            exps.push(e);
        }
        assert_eq!(coeffs_i64(&p), subset_sum_counts(&exps, order));
    }

    #[test]
    fn poch_infinite_single_factor_at_order() {
        let p = poch_infinite(&[Monomial::minus(1)], 3, 1).unwrap();
        assert_eq!(coeffs_i64(&p), vec![1, 1]);
    }

    #[test]
    fn poch_infinite_rejects_constant_argument() {
        assert_eq!(
            poch_infinite(&[Monomial::minus(0)], 3, 5),
            Err(Error::DivergentProduct)
        );
    }

    #[test]
    fn inv_poch_counts_partitions() {
        assert_eq!(coeffs_i64(&inv_poch_infinite(1, 4)), vec![1, 1, 2, 3, 5]);
        let inv = inv_poch_infinite(14, 28);
        assert_eq!(*inv.coeff(0), BigInt::from(1));
        assert_eq!(*inv.coeff(14), BigInt::from(1));
        assert_eq!(*inv.coeff(28), BigInt::from(2));
        assert_eq!(
            coeffs_i64(&inv_poch_infinite(6, 45)),
            divisible_partition_counts(6, 45)
        );
    }

    #[test]
    fn inv_poch_step_past_order() {
        assert_eq!(inv_poch_infinite(9, 5), TruncatedSeries::one(5));
    }

    #[test]
    fn inv_poch_inverts_the_product() {
        let order = 30;
        let inv = inv_poch_infinite(3, order);
        let prod = poch_finite(Monomial::plus(3), 3, order / 3 + 1, order);
        assert_eq!(inv.mul(&prod).unwrap(), TruncatedSeries::one(order));
    }

    #[test]
    fn g2_order_zero() {
        assert_eq!(coeffs_i64(&g2_special(7, 2, 0).unwrap()), vec![1]);
    }

    #[test]
    fn g2_low_order_is_first_summand() {
        // Below q^7 only n = 0 contributes: 1 / ((1 + q^2)(1 + q^5)).
        let g = g2_special(7, 2, 5).unwrap();
        assert_eq!(coeffs_i64(&g), vec![1, 0, -1, 0, 1, -1]);
    }

    #[test]
    fn g3_order_zero_and_low_order() {
        assert_eq!(coeffs_i64(&g3_special(7, 2, 0).unwrap()), vec![1]);
        // Below q^14 only n = 0 contributes, same summand as g2's first.
        let g = g3_special(7, 2, 5).unwrap();
        assert_eq!(coeffs_i64(&g), vec![1, 0, -1, 0, 1, -1]);
    }

    #[test]
    fn g2_and_g3_diverge_once_later_summands_enter() {
        let g2 = g2_special(7, 2, 20).unwrap();
        let g3 = g3_special(7, 2, 20).unwrap();
        assert_ne!(g2, g3);
    }

    #[test]
    fn specials_reject_bad_parameters() {
        assert_eq!(
            g2_special(7, 4, 10),
            Err(Error::InvalidParameters { d: 7, r: 4 })
        );
        assert_eq!(
            g3_special(4, 2, 10),
            Err(Error::InvalidParameters { d: 4, r: 2 })
        );
        assert_eq!(
            g2_special(3, 0, 10),
            Err(Error::InvalidParameters { d: 3, r: 0 })
        );
    }

    #[test]
    fn g2_matches_unrolled_definition() {
        // Assemble the first summands directly from public pieces.
        let order = 25;
        let d = 7usize;
        let r = 2usize;
        let mut expect = TruncatedSeries::zero(order);
        for n in 0..3usize {
            let lead = d * n * (n + 1) / 2;
            if lead > order {
                break;
            }
            let numer = poch_finite(Monomial::minus(d), d, n, order);
            let denom = poch_finite(Monomial::minus(r), d, n + 1, order)
                .mul(&poch_finite(Monomial::minus(d - r), d, n + 1, order))
                .unwrap();
            let term = numer.mul(&denom.invert().unwrap()).unwrap().shift_up(lead);
            expect = expect.add(&term).unwrap();
        }
        assert_eq!(g2_special(7, 2, order).unwrap(), expect);
        assert!(!expect.coeff(7).is_zero() || !expect.coeff(14).is_zero());
    }
}
