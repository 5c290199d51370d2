//! Adaptive Simpson integration with interval bisection.
//!
//! Classic scheme: each interval is accepted when the two-panel refinement
//! agrees with the one-panel estimate to 15× the local tolerance share, and
//! the Richardson term (S2 - S1)/15 is folded into the running total. Used
//! as the integration oracle elsewhere in the crate.

use crate::error::{Error, Result};

/// Hard ceiling on integrand evaluations per call.
const MAX_EVALS: usize = 2_000_000;
/// Maximum bisection depth.
const MAX_DEPTH: usize = 60;

/// Integrates `f` over [a, b] to the requested absolute tolerance.
///
/// Fails with a convergence error when the subdivision budget runs out
/// before the tolerance is met.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    if !(abs_tol > 0.0) {
        return Err(Error::invalid(format!(
            "absolute tolerance must be positive; got {abs_tol}"
        )));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::invalid("integration bounds must be finite".to_string()));
    }
    let mut evals = 0usize;
    let mut eval = |x: f64| -> Result<f64> {
        evals += 1;
        if evals > MAX_EVALS {
            return Err(Error::Convergence(format!(
                "quadrature exceeded {MAX_EVALS} evaluations before reaching {abs_tol}"
            )));
        }
        let y = f(x);
        if !y.is_finite() {
            return Err(Error::Numeric(format!("integrand not finite at x = {x}")));
        }
        Ok(y)
    };

    let m = 0.5 * (a + b);
    let fa = eval(a)?;
    let fm = eval(m)?;
    let fb = eval(b)?;
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&mut eval, a, b, fa, fm, fb, whole, abs_tol, MAX_DEPTH)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<E: FnMut(f64) -> Result<f64>>(
    eval: &mut E,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = eval(lm)?;
    let frm = eval(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::Convergence(format!(
            "quadrature bisection bottomed out on [{a}, {b}] with error estimate {:e}",
            delta.abs() / 15.0
        )));
    }
    let half = 0.5 * tol;
    let l = adaptive(eval, a, m, fa, flm, fm, left, half, depth - 1)?;
    let r = adaptive(eval, m, b, fm, frm, fb, right, half, depth - 1)?;
    Ok(l + r)
}
