//! Truncated power series with exact rational coefficients.
//!
//! A [`TruncatedPowerSeries`] holds the coefficients c_0..c_N of a formal
//! series Σ c_k s^k modulo s^{N+1}. All arithmetic is exact over
//! arbitrary-precision rationals, so a residual that prints as zero *is*
//! zero — there is no floating-point wiggle room in the identity checks
//! built on top of this type.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational series truncated at a fixed order.
///
/// Binary operations truncate to the smaller of the two orders, which keeps
/// every operation closed: the result never pretends to know coefficients
/// past what both inputs can support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPowerSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedPowerSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// The series c·s^degree of the given order.
    ///
    /// A degree past the order yields the zero series (the monomial is
    /// invisible modulo s^{order+1}).
    pub fn monomial(coeff: BigRational, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = coeff;
        }
        s
    }

    /// Builds a series from explicit coefficients c_0..c_N.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the c_0 entry");
        Self { coeffs }
    }

    /// Truncation order N; the series has exactly N+1 coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of s^k; zero when k exceeds the order.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-truncates to a (usually smaller) order; extending pads with zeros.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &other.coeffs[k])
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    /// Termwise derivative; drops the order by one.
    ///
    /// Differentiating an order-0 series gives the zero series of order 0.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=self.order())
            .map(|k| &self.coeffs[k] * BigRational::from(BigInt::from(k)))
            .collect();
        Self { coeffs }
    }

    /// Multiplicative inverse modulo s^{order+1}.
    ///
    /// Returns `None` when the constant term vanishes (no inverse exists in
    /// the truncated ring).
    pub fn inverse(&self) -> Option<Self> {
        if self.coeffs[0].is_zero() {
            return None;
        }
        let order = self.order();
        let c0_inv = BigRational::one() / &self.coeffs[0];
        let mut inv = vec![BigRational::zero(); order + 1];
        inv[0] = c0_inv.clone();
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[n - j];
                }
            }
            inv[n] = -acc * &c0_inv;
        }
        Some(Self { coeffs: inv })
    }

    /// Small non-negative integer power by repeated multiplication.
    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exponent {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates the truncated polynomial at a floating point, Horner style.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x + c.to_f64().expect("rational-to-float conversion")
        })
    }

    /// Smallest index with a non-zero coefficient (the order of vanishing),
    /// or `None` for the zero series.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Largest absolute coefficient value, as a rational.
    pub fn max_abs_coeff(&self) -> BigRational {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

impl std::fmt::Display for TruncatedPowerSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*s")?,
                _ => write!(f, "({c})*s^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(s^{})", self.order() + 1)
    }
}

/// Convenience rational constructor used heavily in tests.
pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(vals: &[(i64, i64)]) -> TruncatedPowerSeries {
        TruncatedPowerSeries::from_coeffs(vals.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn product_of_binomials() {
        // (1 + s)^2 = 1 + 2s + s^2
        let p = series(&[(1, 1), (1, 1), (0, 1)]);
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(0), rat(1, 1));
        assert_eq!(sq.coeff(1), rat(2, 1));
        assert_eq!(sq.coeff(2), rat(1, 1));
    }

    #[test]
    fn truncation_is_closed() {
        // Multiplying order-2 series keeps order 2 and drops s^3, s^4.
        let p = series(&[(1, 1), (1, 1), (1, 1)]);
        let q = p.mul(&p);
        assert_eq!(q.order(), 2);
        assert_eq!(q.coeff(2), rat(3, 1));
        assert_eq!(q.coeff(3), rat(0, 1)); // out-of-range reads as zero
    }

    #[test]
    fn derivative_shifts_and_scales() {
        // d/ds (1 + s + s^2/2 + s^3/6) = 1 + s + s^2/2
        let p = series(&[(1, 1), (1, 1), (1, 2), (1, 6)]);
        let d = p.derivative();
        assert_eq!(d.order(), 2);
        assert_eq!(d.coeff(0), rat(1, 1));
        assert_eq!(d.coeff(1), rat(1, 1));
        assert_eq!(d.coeff(2), rat(1, 2));
    }

    #[test]
    fn inverse_of_one_plus_s_squared_is_alternating() {
        // 1/(1+s^2) = 1 - s^2 + s^4 - s^6 ...
        let mut p = TruncatedPowerSeries::one(8);
        p = p.add(&TruncatedPowerSeries::monomial(rat(1, 1), 2, 8));
        let inv = p.inverse().unwrap();
        for k in 0..=8 {
            let expect = if k % 2 == 1 {
                rat(0, 1)
            } else if (k / 2) % 2 == 0 {
                rat(1, 1)
            } else {
                rat(-1, 1)
            };
            assert_eq!(inv.coeff(k), expect, "coefficient of s^{k}");
        }
        // inverse really inverts (product is 1 modulo s^9)
        let prod = p.mul(&inv);
        assert_eq!(prod, TruncatedPowerSeries::one(8));
    }

    #[test]
    fn inverse_requires_a_unit() {
        let p = TruncatedPowerSeries::monomial(rat(1, 1), 1, 4);
        assert!(p.inverse().is_none());
    }

    #[test]
    fn eval_matches_geometric_sum() {
        // 1 + x + x^2 + x^3 at x = 1/2 is 1.875
        let p = series(&[(1, 1), (1, 1), (1, 1), (1, 1)]);
        assert!((p.eval_f64(0.5) - 1.875).abs() < 1e-15);
    }

    #[test]
    fn display_is_readable() {
        let p = series(&[(1, 1), (0, 1), (-1, 3)]);
        assert_eq!(format!("{p}"), "1 + (-1/3)*s^2 + O(s^3)");
    }
}
