//! Bracketing bisection on strictly monotone functions.

use crate::{Error, Result};

/// Stopping rule: equation residual, or bracket width relative to the root.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BisectTol {
    pub residual: f64,
    pub width_rel: f64,
}

impl BisectTol {
    pub(crate) fn residual(residual: f64) -> Result<Self> {
        if !(residual > 0.0) || !residual.is_finite() {
            return Err(Error::Validation(format!(
                "bisection tolerance must be positive and finite, got {residual}"
            )));
        }
        Ok(Self { residual, width_rel: 1e-13 })
    }
}

const MAX_ITER: usize = 200;
const LO_START: f64 = 1e-8;
const LO_FLOOR: f64 = 1e-250;

/// Solve `f(x) = target` for strictly monotone `f` on `(0, hi_cap]`.
///
/// The initial bracket is `[1e-8, 1]`; the upper end doubles until the
/// target is crossed or `hi_cap` is hit (a domain error: the root would
/// need the underlying series outside its accuracy domain). The lower end
/// shrinks geometrically in the rare case the root sits below `1e-8`.
pub(crate) fn solve_monotone<F>(
    f: F,
    target: f64,
    increasing: bool,
    hi_cap: f64,
    tol: BisectTol,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !target.is_finite() {
        return Err(Error::Validation(format!("root target must be finite, got {target}")));
    }
    // signed so that the residual of an increasing problem rises through 0
    let signed = |x: f64| -> Result<f64> {
        let v = f(x)?;
        Ok(if increasing { v - target } else { target - v })
    };

    let mut lo = LO_START.min(0.5 * hi_cap);
    let mut f_lo = signed(lo)?;
    while f_lo > 0.0 {
        lo *= 0.25;
        if lo < LO_FLOOR {
            return Err(Error::NonConvergence(format!(
                "no bracket: the root of the monotone equation lies at or below {LO_FLOOR}"
            )));
        }
        f_lo = signed(lo)?;
    }
    if f_lo == 0.0 {
        return Ok(lo);
    }

    let mut hi = 1.0_f64.min(hi_cap).max(2.0 * lo);
    let mut f_hi = signed(hi)?;
    while f_hi < 0.0 {
        if hi >= hi_cap {
            return Err(Error::Domain(format!(
                "no bracket below x = {hi_cap}: the root lies outside the accuracy domain"
            )));
        }
        lo = hi;
        f_lo = f_hi;
        hi = (hi * 2.0).min(hi_cap);
        f_hi = signed(hi)?;
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    debug_assert!(f_lo < 0.0 && f_hi > 0.0);

    let mut mid = 0.5 * (lo + hi);
    for _ in 0..MAX_ITER {
        mid = 0.5 * (lo + hi);
        let f_mid = signed(mid)?;
        if f_mid.abs() <= tol.residual {
            return Ok(mid);
        }
        if f_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol.width_rel * mid.max(1.0) {
            return Ok(0.5 * (lo + hi));
        }
    }
    Err(Error::NonConvergence(format!(
        "bisection did not meet its tolerance within {MAX_ITER} iterations (last x = {mid})"
    )))
}
