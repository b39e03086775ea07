//! Special functions for time-fractional diffusion.
//!
//! Provides the Gamma function and its reciprocal, the error functions, the
//! Wright function `W(z; a, b) = Σ_{n≥0} zⁿ/(n! Γ(na + b))` for real `z ≤ 0`
//! with `a ∈ (−1, 0)`, the Mainardi function `M_ν(x) = W(−x; −ν, 1−ν)`, and
//! three auxiliary combinations with proven monotonicity that the coefficient
//! solvers bisect on:
//!
//! | function | definition                         | behaviour on x > 0          |
//! |----------|------------------------------------|-----------------------------|
//! | [`g3`]   | `1 − W(−x; −α/2, 1)`               | increasing, 0 → 1           |
//! | [`f4`]   | `x · g3(x) / M_{α/2}(x)`           | increasing, 0 → ∞           |
//! | [`f5`]   | `g3(x) / x`                        | decreasing, 1/Γ(1−α/2) → 0  |
//!
//! The Wright series is summed with compensated (Neumaier) accumulation: for
//! `z < 0` the terms alternate in sign and grow before they decay, so plain
//! summation loses digits to cancellation. Arguments are capped at
//! [`Z_MAX`]; near the cap the attainable absolute accuracy degrades by
//! roughly `|z|·log₁₀e` digits, which is why the root-finding brackets in
//! [`crate::inverse`] never leave this domain.
//!
//! At `α = 1` the `b = 1` instance of the series collapses to the error
//! function, `W(−x; −1/2, 1) = erfc(x/2)`, and [`g3`] uses that closed form
//! directly; the Mainardi function is always summed as a series.

use crate::{Error, Result};
use std::f64::consts::PI;

/// Largest `|z|` accepted by the Wright/Mainardi series (accuracy domain).
pub const Z_MAX: f64 = 10.0;

/// Smallest Mainardi value [`f4`] will divide by before reporting that the
/// quotient has left the accuracy domain.
pub const MAINARDI_FLOOR: f64 = 1e-8;

/// Truncation policy for the special-function series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// Relative tolerance against the running partial sum.
    pub rel_tol: f64,
    /// Absolute floor below which a term always counts as negligible.
    pub abs_tol: f64,
    /// Hard cap on the number of series terms.
    pub max_terms: usize,
}

impl SeriesControl {
    pub fn new(rel_tol: f64, abs_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0) || !(abs_tol > 0.0) || max_terms < 16 {
            return Err(Error::Validation(format!(
                "series control requires rel_tol > 0, abs_tol > 0, max_terms >= 16 \
                 (got {rel_tol}, {abs_tol}, {max_terms})"
            )));
        }
        Ok(Self { rel_tol, abs_tol, max_terms })
    }

    fn check(&self) -> Result<()> {
        Self::new(self.rel_tol, self.abs_tol, self.max_terms).map(|_| ())
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self { rel_tol: 1e-14, abs_tol: 1e-300, max_terms: 400 }
    }
}

/// Order and shift of the Wright series, validated at construction.
///
/// The only regime the crate needs is `a = −α/2` with fractional order
/// `α ∈ (0, 1)`; the Mainardi function of order `ν` corresponds to
/// `a = −ν`, `b = 1 − ν`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightParams {
    a: f64,
    b: f64,
}

impl WrightParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > -1.0 && a < 0.0) || !b.is_finite() {
            return Err(Error::Validation(format!(
                "Wright parameters require -1 < a < 0 and finite b (got a={a}, b={b})"
            )));
        }
        Ok(Self { a, b })
    }

    /// Parameters of the Mainardi function of order `nu ∈ (0, 1)`.
    pub fn mainardi(nu: f64) -> Result<Self> {
        if !(nu > 0.0 && nu < 1.0) {
            return Err(Error::Validation(format!(
                "Mainardi order must lie in (0, 1), got {nu}"
            )));
        }
        Self::new(-nu, 1.0 - nu)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

// ---------------------------------------------------------------------------
// Gamma and error functions
// ---------------------------------------------------------------------------

/// Gamma function Γ(x).
///
/// Rejects the poles at x ∈ {0, −1, −2, …}; use [`rgamma`] where a pole must
/// map to zero instead of an error.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || (x <= 0.0 && x == x.floor()) {
        return Err(Error::Domain(format!("gamma is undefined at {x}")));
    }
    Ok(libm::tgamma(x))
}

/// Γ at an argument known to be positive; used by the closed-form
/// coefficient expressions where the argument is 1 ± α/2.
pub(crate) fn gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    libm::tgamma(x)
}

/// Reciprocal Gamma 1/Γ(x), entire: exactly 0 at x ∈ {0, −1, −2, …}.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    if x >= 0.5 {
        // 1/inf = 0 past the Γ overflow threshold, which is the right limit
        return 1.0 / libm::tgamma(x);
    }
    // reflection: 1/Γ(x) = Γ(1−x)·sin(πx)/π
    let y = 1.0 - x;
    let s = sin_pi(x);
    if y > 171.0 {
        // Γ(1−x) overflows f64; assemble through logs
        let ln = libm::lgamma(y) + s.abs().ln() - PI.ln();
        return s.signum() * ln.exp();
    }
    libm::tgamma(y) * s / PI
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Complementary error function 1 − erf(x).
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// sin(πx) with the integer part reduced exactly (period 2 in x).
fn sin_pi(x: f64) -> f64 {
    (PI * (x % 2.0)).sin()
}

// ---------------------------------------------------------------------------
// Wright / Mainardi series
// ---------------------------------------------------------------------------

/// Neumaier-compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Wright function W(z; a, b) for real z ≤ 0, |z| ≤ [`Z_MAX`].
///
/// The series is truncated once two consecutive terms fall below
/// `max(abs_tol, rel_tol·|partial sum|)`; requiring two in a row avoids
/// stopping on a term that vanishes only because `na + b` hit a Γ pole.
pub fn wright(z: f64, params: WrightParams, ctrl: &SeriesControl) -> Result<f64> {
    check_series_arg(z, true)?;
    wright_sum(z, params.a, params.b, ctrl, 0)
}

/// Mainardi function M_ν(x) = W(−x; −ν, 1−ν) for x ≥ 0.
///
/// Strictly positive and strictly decreasing on the accuracy domain.
pub fn mainardi(nu: f64, x: f64, ctrl: &SeriesControl) -> Result<f64> {
    let params = WrightParams::mainardi(nu)?;
    check_series_arg(-x, true)?;
    wright_sum(-x, params.a, params.b, ctrl, 0)
}

/// G₃ function: `1 − W(−x; −α/2, 1)` for fractional order α ∈ (0, 1], x ≥ 0.
///
/// Increases strictly from 0 at x = 0 towards 1. At α = 1 this is exactly
/// erf(x/2). For α < 1 the leading 1 of the Wright series cancels
/// symbolically and the remainder is summed from n = 1, which keeps the
/// value relatively accurate near x = 0.
pub fn g3(alpha: f64, x: f64) -> Result<f64> {
    check_alpha_closed(alpha)?;
    check_series_arg(-x, true)?;
    if alpha == 1.0 {
        return Ok(erf(0.5 * x));
    }
    let tail = wright_sum(-x, -0.5 * alpha, 1.0, &SeriesControl::default(), 1)?;
    Ok(-tail)
}

/// F₄ function: `x · g3(α, x) / M_{α/2}(x)` for x > 0.
///
/// Positive and strictly increasing, F₄(0⁺) = 0, F₄(+∞) = +∞. Errors once
/// the Mainardi denominator drops below [`MAINARDI_FLOOR`], where the
/// quotient is no longer trustworthy in double precision.
pub fn f4(alpha: f64, x: f64) -> Result<f64> {
    check_alpha_closed(alpha)?;
    if !(x > 0.0) {
        return Err(Error::Domain(format!("f4 requires x > 0, got {x}")));
    }
    let m = mainardi(0.5 * alpha, x, &SeriesControl::default())?;
    if m < MAINARDI_FLOOR {
        return Err(Error::Domain(format!(
            "Mainardi value {m:.3e} at x = {x} is below the positivity floor; \
             f4 left its accuracy domain"
        )));
    }
    Ok(x * g3(alpha, x)? / m)
}

/// F₅ function: `g3(α, x) / x` for x > 0.
///
/// Positive and strictly decreasing, F₅(0⁺) = 1/Γ(1−α/2), F₅(+∞) = 0.
pub fn f5(alpha: f64, x: f64) -> Result<f64> {
    check_alpha_closed(alpha)?;
    if !(x > 0.0) {
        return Err(Error::Domain(format!("f5 requires x > 0, got {x}")));
    }
    Ok(g3(alpha, x)? / x)
}

fn check_alpha_closed(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Validation(format!(
            "fractional order must lie in (0, 1], got {alpha}"
        )));
    }
    Ok(())
}

fn check_series_arg(z: f64, require_nonpositive: bool) -> Result<()> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("series argument must be finite, got {z}")));
    }
    if require_nonpositive && z > 0.0 {
        return Err(Error::Domain(format!("series argument must be ≤ 0, got {z}")));
    }
    if z.abs() > Z_MAX {
        return Err(Error::Domain(format!(
            "series argument {z} exceeds the accuracy domain |z| ≤ {Z_MAX}"
        )));
    }
    Ok(())
}

/// Σ_{n≥start} zⁿ/(n! Γ(na + b)) with compensated accumulation.
fn wright_sum(z: f64, a: f64, b: f64, ctrl: &SeriesControl, start: usize) -> Result<f64> {
    ctrl.check()?;
    debug_assert!(a > -1.0 && a < 0.0);

    let mut acc = CompensatedSum::default();
    // pow = z^n / n!, advanced by the exact recurrence pow *= z/(n+1)
    debug_assert!(start <= 1);
    let mut pow = if start == 0 { 1.0 } else { z };

    let mut consecutive_small = 0;
    for n in start..ctrl.max_terms {
        let arg = a * n as f64 + b;
        let term = if arg < -170.0 {
            log_space_term(z, n, arg)?
        } else {
            pow * rgamma(arg)
        };
        acc.add(term);

        let threshold = ctrl.abs_tol.max(ctrl.rel_tol * acc.value().abs());
        if term.abs() <= threshold {
            consecutive_small += 1;
            if consecutive_small >= 2 && n > start {
                return Ok(acc.value());
            }
        } else {
            consecutive_small = 0;
        }

        pow *= z / (n + 1) as f64;
    }
    Err(Error::NonConvergence(format!(
        "Wright series at z = {z}, a = {a}, b = {b} did not settle within {} terms",
        ctrl.max_terms
    )))
}

/// Term zⁿ/(n! Γ(na+b)) when Γ(1 − (na+b)) would overflow: assembled from
/// logarithms so a huge reciprocal Gamma against a tiny power stays finite.
fn log_space_term(z: f64, n: usize, arg: f64) -> Result<f64> {
    if z == 0.0 || arg == arg.floor() {
        return Ok(0.0);
    }
    let s = sin_pi(arg);
    let ln_term = (n as f64) * z.abs().ln() - libm::lgamma(n as f64 + 1.0)
        + libm::lgamma(1.0 - arg)
        + s.abs().ln()
        - PI.ln();
    if ln_term > 700.0 {
        return Err(Error::NonConvergence(format!(
            "Wright series term at n = {n} overflows; the sum is meaningless here"
        )));
    }
    let sign_pow = if z < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    Ok(sign_pow * s.signum() * ln_term.exp())
}
