//! The complete elliptic integral of the first kind, three independent ways.
//!
//! K(k) = ∫_0^{π/2} dφ / sqrt(1 - k² sin²φ) for a modulus 0 ≤ k < 1.
//!
//! * [`ellip_k_agm`] — K(k) = (π/2) / M(1+k, 1-k), the production route;
//! * [`ellip_k_series`] — (π/2) Σ A_j k^{2j} with the exact series
//!   coefficients, good up to k ≤ 0.95 where the term ratio k² still decays
//!   usefully;
//! * [`ellip_k_quadrature`] — direct adaptive integration of the defining
//!   integral, the oracle the other two are measured against.
//!
//! [`hypergeom_2f1`] evaluates the general Gauss series
//! F(α, β; γ; x) = 1 + (αβ/γ) x/1! + ... ; the special case
//! F(1/2, 1/2; 1; k²) = (2/π) K(k) ties it into the same web.

use std::f64::consts::FRAC_PI_2;

use num_traits::ToPrimitive;

use crate::agm::agm;
use crate::error::{Error, Result};
use crate::quadrature;

/// Elliptic modulus restricted to [0, 1); K diverges at k = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus(f64);

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        if !(k.is_finite() && (0.0..1.0).contains(&k)) {
            return Err(Error::invalid(format!(
                "modulus must satisfy 0 <= k < 1; got {k}"
            )));
        }
        Ok(Modulus(k))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Relative gap tolerance driving every internal AGM call.
pub const AGM_TOL: f64 = 1e-15;

/// K(k) through the arithmetic–geometric mean: (π/2) / M(1+k, 1-k).
pub fn ellip_k_agm(k: Modulus) -> f64 {
    let m = agm(1.0 + k.0, 1.0 - k.0, AGM_TOL)
        .expect("AGM of (1+k, 1-k) is well-posed for 0 <= k < 1")
        .limit;
    FRAC_PI_2 / m
}

/// K(k) by adaptive quadrature of the defining integral. The oracle.
pub fn ellip_k_quadrature(k: Modulus, abs_tol: f64) -> Result<f64> {
    let k2 = k.0 * k.0;
    quadrature::integrate(
        &|phi: f64| {
            let s = phi.sin();
            1.0 / (1.0 - k2 * s * s).sqrt()
        },
        0.0,
        FRAC_PI_2,
        abs_tol,
    )
}

/// Parameters of the general hypergeometric series F(α, β; γ; x).
#[derive(Debug, Clone, Copy)]
pub struct HypergeomParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub argument: f64,
    pub n_terms: usize,
}

impl HypergeomParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, argument: f64, n_terms: usize) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if !v.is_finite() {
                return Err(Error::invalid(format!("{name} must be finite; got {v}")));
            }
        }
        let is_nonpositive_integer = gamma <= 0.0 && gamma == gamma.round();
        if is_nonpositive_integer {
            return Err(Error::invalid(format!(
                "gamma must not be zero or a negative integer; got {gamma}"
            )));
        }
        if !(argument.is_finite() && argument.abs() < 1.0) {
            return Err(Error::invalid(format!(
                "the series argument needs |x| < 1; got {argument}"
            )));
        }
        if n_terms == 0 {
            return Err(Error::invalid("n_terms must be positive".to_string()));
        }
        Ok(Self { alpha, beta, gamma, argument, n_terms })
    }
}

/// Partial sum of the hypergeometric series plus a crude error gauge.
#[derive(Debug, Clone, Copy)]
pub struct Hyp2f1Sum {
    pub value: f64,
    /// Magnitude of the last term added; a heuristic remainder estimate.
    pub error_estimate: f64,
}

/// Sums F(α, β; γ; x) to exactly `n_terms` terms by the term recurrence
/// term_{n+1} = term_n · (α+n)(β+n) x / ((γ+n)(n+1)).
pub fn hypergeom_2f1(p: &HypergeomParams) -> Result<Hyp2f1Sum> {
    let mut term = 1.0f64;
    let mut acc = 1.0f64;
    for n in 0..p.n_terms - 1 {
        let nf = n as f64;
        term *= (p.alpha + nf) * (p.beta + nf) * p.argument / ((p.gamma + nf) * (nf + 1.0));
        acc += term;
        if !acc.is_finite() {
            return Err(Error::Numeric(format!(
                "hypergeometric sum became non-finite after {} terms",
                n + 1
            )));
        }
    }
    Ok(Hyp2f1Sum { value: acc, error_estimate: term.abs() })
}

/// Largest modulus the series route accepts.
pub const SERIES_MODULUS_MAX: f64 = 0.95;

/// K(k) from the exact series coefficients: (π/2) Σ A_j k^{2j}.
///
/// The coefficients are generated exactly (the same recurrence as
/// [`crate::agm::gauss_series`]) and converted to floating point one at a
/// time; summation stops when a term drops below 1e-17 of the running sum
/// or after 500 terms.
pub fn ellip_k_series(k: Modulus) -> Result<f64> {
    if k.0 > SERIES_MODULUS_MAX {
        return Err(Error::invalid(format!(
            "ellip_k_series accepts k <= {SERIES_MODULUS_MAX} (got {}); \
             use ellip_k_agm for larger moduli",
            k.0
        )));
    }
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::One;

    let k2 = k.0 * k.0;
    let mut coeff = BigRational::one();
    let mut power = 1.0f64;
    let mut acc = 0.0f64;
    for j in 0..=500usize {
        if j > 0 {
            let step = BigRational::new(BigInt::from(2 * j - 1), BigInt::from(2 * j));
            coeff *= &step * &step;
            power *= k2;
        }
        let term = coeff.to_f64().expect("coefficient magnitude is <= 1") * power;
        acc += term;
        if j > 0 && term < 1e-17 * acc {
            break;
        }
    }
    Ok(FRAC_PI_2 * acc)
}
