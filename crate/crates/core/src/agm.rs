//! The arithmetic–geometric mean and the series for 1/M(1+x, 1-x).
//!
//! Interleaving arithmetic and geometric means,
//! a_{n+1} = (a_n + b_n)/2 and b_{n+1} = sqrt(a_n b_n), squeezes both
//! sequences onto a common limit M(a, b). The reciprocal 1/M(1+x, 1-x)
//! expands as Σ A_k x^{2k} with A_k = ((1·3···(2k-1)) / (2·4···(2k)))².
//!
//! Two exact checks pin the series down:
//!
//! * [`verify_functional_equation`] — under x = 2t/(1+t²) the reciprocal
//!   picks up a factor: Σ A_k (2t/(1+t²))^{2k} = (1+t²) · Σ A_k t^{4k}.
//!   The residual of the truncated identity is exactly zero through order
//!   2·k_max.
//! * [`verify_agm_ode`] — y = Σ A_k x^{2k} annihilates
//!   (x³-x) y'' + (3x²-1) y' + x y through order 2·k_max - 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::TruncatedPowerSeries;

/// Limit of the AGM iteration together with the full trace.
#[derive(Debug, Clone)]
pub struct AgmResult {
    /// The common limit M(a, b), reported as the final midpoint.
    pub limit: f64,
    /// Number of iterations performed (at least 1 for positive inputs).
    pub iterations: usize,
    /// (a_n, b_n) pairs, starting from the ordering-normalized inputs.
    pub trace: Vec<(f64, f64)>,
}

/// Iterates the AGM of two non-negative reals to a relative gap tolerance.
///
/// Inputs are normalized so a ≥ b before iterating, which makes the
/// sandwich b_n ≤ b_{n+1} ≤ a_{n+1} ≤ a_n hold along the whole trace.
/// The degenerate b = 0 short-circuits to limit 0: the geometric mean pins
/// b_n at zero while a_n only halves, so no finite iteration count meets a
/// relative gap tolerance.
pub fn agm(a: f64, b: f64, rel_tol: f64) -> Result<AgmResult> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::invalid(format!("agm needs finite inputs; got ({a}, {b})")));
    }
    if a <= 0.0 || b < 0.0 {
        return Err(Error::invalid(format!(
            "agm needs a > 0 and b >= 0; got ({a}, {b})"
        )));
    }
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::invalid(format!(
            "relative tolerance must lie in (0, 1); got {rel_tol}"
        )));
    }

    let (mut hi, mut lo) = if a >= b { (a, b) } else { (b, a) };
    let mut trace = vec![(hi, lo)];
    if lo == 0.0 {
        return Ok(AgmResult { limit: 0.0, iterations: 0, trace });
    }

    const MAX_ITERATIONS: usize = 64;
    for iterations in 1..=MAX_ITERATIONS {
        let next_hi = 0.5 * (hi + lo);
        let next_lo = (hi * lo).sqrt();
        // rounding can flip the pair when hi == lo to machine precision
        let (next_hi, next_lo) = if next_hi >= next_lo {
            (next_hi, next_lo)
        } else {
            (next_lo, next_hi)
        };
        trace.push((next_hi, next_lo));
        hi = next_hi;
        lo = next_lo;
        if hi - lo <= rel_tol * hi {
            return Ok(AgmResult {
                limit: 0.5 * (hi + lo),
                iterations,
                trace,
            });
        }
    }
    Err(Error::Convergence(format!(
        "agm({a}, {b}) did not reach relative gap {rel_tol} within {MAX_ITERATIONS} iterations"
    )))
}

/// The exact coefficients A_0..A_K of 1/M(1+x, 1-x) = Σ A_k x^{2k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussSeries {
    coeffs: Vec<BigRational>,
}

impl GaussSeries {
    /// A_k as an exact rational.
    pub fn coefficient(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn k_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Embeds the coefficients into a series in x of order 2·k_max
    /// (odd positions are zero).
    pub fn to_series_in_x(&self) -> TruncatedPowerSeries {
        let order = 2 * self.k_max();
        let mut out = vec![BigRational::zero(); order + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[2 * k] = a.clone();
        }
        TruncatedPowerSeries::from_coeffs(out)
    }

    /// Partial sum Σ A_k x^{2k} in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let x2 = x * x;
        let mut power = 1.0;
        let mut acc = 0.0;
        for a in &self.coeffs {
            acc += a.to_f64().expect("coefficient fits in f64") * power;
            power *= x2;
        }
        acc
    }
}

/// Builds A_0..A_{k_max} from the closed form, incrementally and exactly:
/// A_0 = 1 and A_k = A_{k-1} · ((2k-1)/(2k))².
pub fn gauss_series(k_max: usize) -> Result<GaussSeries> {
    if k_max > 200 {
        return Err(Error::limit(format!(
            "gauss_series is capped at k_max = 200 (got {k_max})"
        )));
    }
    let mut coeffs = Vec::with_capacity(k_max + 1);
    let mut a = BigRational::one();
    coeffs.push(a.clone());
    for k in 1..=k_max {
        let step = BigRational::new(BigInt::from(2 * k - 1), BigInt::from(2 * k));
        a *= &step * &step;
        coeffs.push(a.clone());
    }
    Ok(GaussSeries { coeffs })
}

/// Exact residual of the substitution identity
/// Σ A_k (2t/(1+t²))^{2k} - (1+t²) · Σ A_k t^{4k}, truncated at order
/// 4·k_max in t.
///
/// With both sums truncated at k_max, the first unknown contribution on the
/// left enters at order 2·k_max + 2, so the residual is exactly zero through
/// order 2·k_max; coefficients beyond that are truncation artifacts and are
/// returned as computed.
pub fn verify_functional_equation(k_max: usize) -> Result<TruncatedPowerSeries> {
    if k_max > 60 {
        return Err(Error::limit(format!(
            "verify_functional_equation is capped at k_max = 60 (got {k_max})"
        )));
    }
    let order = 4 * k_max;
    let coeffs = gauss_series(k_max)?;

    // u = 2t / (1 + t^2), expanded to the working order.
    let one_plus_t2 = TruncatedPowerSeries::one(order)
        .add(&TruncatedPowerSeries::monomial(BigRational::one(), 2, order));
    let u = TruncatedPowerSeries::monomial(BigRational::from(BigInt::from(2)), 1, order)
        .mul(&one_plus_t2.inverse().expect("unit constant term"));
    let u_squared = u.mul(&u);

    let mut lhs = TruncatedPowerSeries::zero(order);
    let mut u_power = TruncatedPowerSeries::one(order);
    for k in 0..=k_max {
        if k > 0 {
            u_power = u_power.mul(&u_squared);
        }
        lhs = lhs.add(&u_power.scale(coeffs.coefficient(k)));
    }

    let mut out = vec![BigRational::zero(); order + 1];
    for k in 0..=k_max {
        if 4 * k <= order {
            out[4 * k] = coeffs.coefficient(k).clone();
        }
    }
    let quartic = TruncatedPowerSeries::from_coeffs(out);
    let rhs = one_plus_t2.mul(&quartic);

    Ok(lhs.sub(&rhs))
}

/// Exact residual of (x³-x) y'' + (3x²-1) y' + x y for the truncated
/// y = Σ_{k ≤ k_max} A_k x^{2k}, reported through order 2·k_max - 1.
///
/// The dropped tail of y first reaches the operator output at order
/// 2·k_max (through the y'' term), hence the reporting cut-off.
pub fn verify_agm_ode(k_max: usize) -> Result<TruncatedPowerSeries> {
    if k_max == 0 {
        return Err(Error::invalid("k_max must be at least 1".to_string()));
    }
    if k_max > 100 {
        return Err(Error::limit(format!(
            "verify_agm_ode is capped at k_max = 100 (got {k_max})"
        )));
    }
    // Work a few orders past the answer so every product is polynomially exact.
    let work = 2 * k_max + 4;
    let y = gauss_series(k_max)?.to_series_in_x().truncate(work);
    let y1 = y.derivative().truncate(work);
    let y2 = y1.derivative().truncate(work);

    let x = |c: i64, d: usize| TruncatedPowerSeries::monomial(BigRational::from(BigInt::from(c)), d, work);
    let cubic = x(1, 3).add(&x(-1, 1)); // x^3 - x
    let quad = x(3, 2).add(&x(-1, 0)); // 3x^2 - 1

    let residual = cubic
        .mul(&y2)
        .add(&quad.mul(&y1))
        .add(&x(1, 1).mul(&y));
    Ok(residual.truncate(2 * k_max - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn fixed_point_converges_in_one_iteration() {
        let r = agm(1.0, 1.0, 1e-15).unwrap();
        assert_eq!(r.limit, 1.0);
        assert_eq!(r.iterations, 1);
    }

    #[test]
    fn homogeneity_under_scaling_by_two() {
        let r1 = agm(2.0, 8.0, 1e-15).unwrap();
        let r2 = agm(1.0, 4.0, 1e-15).unwrap();
        assert!((r1.limit - 2.0 * r2.limit).abs() <= 1e-14 * r1.limit);
    }

    #[test]
    fn zero_branch_is_degenerate() {
        let r = agm(1.0, 0.0, 1e-15).unwrap();
        assert_eq!(r.limit, 0.0);
        assert_eq!(r.trace, vec![(1.0, 0.0)]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(agm(-1.0, 2.0, 1e-15).is_err());
        assert!(agm(1.0, -2.0, 1e-15).is_err());
        assert!(agm(f64::NAN, 2.0, 1e-15).is_err());
        assert!(agm(1.0, 2.0, 0.0).is_err());
        assert!(agm(1.0, 2.0, 1.5).is_err());
    }

    #[test]
    fn trace_is_sandwiched() {
        let r = agm(1000.0, 0.001, 1e-15).unwrap();
        assert!(r.iterations <= 10);
        for w in r.trace.windows(2).skip(1) {
            let (a0, b0) = w[0];
            let (a1, b1) = w[1];
            let slack = 1e-15 * a0;
            assert!(b0 <= b1 + slack && b1 <= a1 + slack && a1 <= a0 + slack);
        }
        assert!(r.limit >= 0.001 && r.limit <= 1000.0);
    }

    #[test]
    fn gauss_coefficients_match_closed_form() {
        let g = gauss_series(3).unwrap();
        assert_eq!(g.coefficient(0), &rat(1, 1));
        assert_eq!(g.coefficient(1), &rat(1, 4));
        assert_eq!(g.coefficient(2), &rat(9, 64));
        assert_eq!(g.coefficient(3), &rat(25, 256));
    }

    #[test]
    fn gauss_series_zero_terms() {
        let g = gauss_series(0).unwrap();
        assert_eq!(g.coefficients(), &[rat(1, 1)]);
    }

    #[test]
    fn gauss_double_factorial_ratio_squared() {
        // spot check the closed form ((2k-1)!!/(2k)!!)^2 at k = 5
        let g = gauss_series(5).unwrap();
        // (1*3*5*7*9) / (2*4*6*8*10) = 945/3840 = 63/256
        assert_eq!(g.coefficient(5), &rat(63 * 63, 256 * 256));
    }

    #[test]
    fn functional_equation_residual_vanishes() {
        for k_max in [0usize, 5, 20] {
            let residual = verify_functional_equation(k_max).unwrap();
            for m in 0..=2 * k_max {
                assert_eq!(
                    residual.coeff(m),
                    rat(0, 1),
                    "k_max = {k_max}: nonzero residual at order {m}"
                );
            }
        }
    }

    #[test]
    fn functional_equation_artifacts_start_past_double_order() {
        // with k_max = 2 the first artifact appears at order 2*k_max + 2
        let residual = verify_functional_equation(2).unwrap();
        assert_eq!(residual.first_nonzero(), Some(6));
    }

    #[test]
    fn agm_ode_residual_vanishes() {
        for k_max in [1usize, 10, 50] {
            let residual = verify_agm_ode(k_max).unwrap();
            assert_eq!(residual.order(), 2 * k_max - 1);
            assert!(
                residual.is_zero(),
                "nonzero residual for k_max = {k_max}: {residual}"
            );
        }
    }

    #[test]
    fn reciprocal_series_tracks_agm_numerically() {
        // partial sums against 1/agm(1+x, 1-x) and evenness in x
        let g = gauss_series(60).unwrap();
        for &x in &[0.1, 0.3, 0.5] {
            let direct = 1.0 / agm(1.0 + x, 1.0 - x, 1e-15).unwrap().limit;
            let series = g.eval_f64(x);
            assert!(
                (direct - series).abs() <= 1e-12 * direct,
                "x = {x}: {direct} vs {series}"
            );
            let mirrored = 1.0 / agm(1.0 - x, 1.0 + x, 1e-15).unwrap().limit;
            assert!((direct - mirrored).abs() <= 1e-14 * direct);
        }
    }
}
