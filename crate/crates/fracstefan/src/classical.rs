//! Classical (α = 1) closed forms, independent of the Wright series.
//!
//! At order one the melt front follows `s(t) = 2 λ μ √t` and every case
//! reduces to elementary functions of μ: erf, exp and √π. This module
//! solves the four cases on that closed-form route and compares the
//! fractional ξ against `2μ` as α → 1⁻, which is the crate's built-in
//! cross-check of the series machinery.

use crate::inverse::{self, ThermalData, UnknownCoefficient};
use crate::root::{solve_monotone, BisectTol};
use crate::specfun::erf;
use crate::{Error, Result};
use std::f64::consts::PI;

/// Upper bracket for the classical dimensionless coefficient μ.
const MU_MAX: f64 = 12.0;

/// Result of one classical recovery case.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalSolution {
    pub case: UnknownCoefficient,
    /// Dimensionless coefficient in `s(t) = 2 λ μ √t`; relates to the
    /// fractional scaling by ξ = 2μ at α = 1.
    pub mu: f64,
    pub coefficient: f64,
    pub lambda: f64,
}

/// One row of a fractional-versus-classical comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitRow {
    pub alpha: f64,
    pub xi: f64,
    pub two_mu: f64,
    /// |ξ(α) − 2μ|
    pub xi_gap: f64,
    /// Relative gap between the recovered coefficient at α and at 1.
    pub coeff_gap: f64,
}

fn classical_margin(case: UnknownCoefficient, d: &ThermalData) -> Result<f64> {
    let dt = d.delta_t();
    match case {
        UnknownCoefficient::SpecificHeat => {
            let (k, rho, ell, q0) = (req(d, "k")?, req(d, "rho")?, req(d, "ell")?, req(d, "q0")?);
            Ok(k * rho * ell * dt / (2.0 * q0 * q0))
        }
        UnknownCoefficient::LatentHeat => {
            let (k, rho, c, q0) = (req(d, "k")?, req(d, "rho")?, req(d, "c")?, req(d, "q0")?);
            Ok(dt / q0 * (rho * c * k / PI).sqrt())
        }
        UnknownCoefficient::Conductivity | UnknownCoefficient::Density => Ok(0.0),
    }
}

fn req(d: &ThermalData, name: &str) -> Result<f64> {
    let v = match name {
        "k" => d.k,
        "rho" => d.rho,
        "c" => d.c,
        "ell" => d.ell,
        "q0" => d.q0,
        _ => unreachable!(),
    };
    v.ok_or_else(|| Error::Validation(format!("field {name} is required but missing")))
}

/// Solve one case of the classical problem. Requires `d.alpha == 1`.
pub fn solve_classical(
    case: UnknownCoefficient,
    d: &ThermalData,
    tol: f64,
) -> Result<ClassicalSolution> {
    if d.alpha != 1.0 {
        return Err(Error::Validation(format!(
            "the classical solver requires alpha = 1, got {}",
            d.alpha
        )));
    }
    // reuse the fractional validator for positivity and field presence
    inverse::restriction(case, d)?;
    let margin = classical_margin(case, d)?;
    if matches!(
        case,
        UnknownCoefficient::SpecificHeat | UnknownCoefficient::LatentHeat
    ) && !(margin < 1.0)
    {
        return Err(Error::Restriction { margin });
    }

    let dt = d.delta_t();
    let tol = BisectTol::residual(tol)?;
    let mu = match case {
        UnknownCoefficient::SpecificHeat => {
            // erf(x)·e^{−x²}/x falls from 2/√π to 0
            let (k, rho, ell, q0) = (req(d, "k")?, req(d, "rho")?, req(d, "ell")?, req(d, "q0")?);
            let target = k * rho * ell * dt / (q0 * q0 * PI.sqrt());
            solve_monotone(
                |x| Ok(erf(x) * (-x * x).exp() / x),
                target,
                false,
                MU_MAX,
                tol,
            )?
        }
        UnknownCoefficient::LatentHeat => solve_monotone(|x| Ok(erf(x)), margin, true, MU_MAX, tol)?,
        UnknownCoefficient::Conductivity | UnknownCoefficient::Density => {
            let (c, ell) = (req(d, "c")?, req(d, "ell")?);
            let target = c * dt / (ell * PI.sqrt());
            solve_monotone(
                |x| Ok(x * (x * x).exp() * erf(x)),
                target,
                true,
                MU_MAX,
                tol,
            )?
        }
    };

    let (coefficient, lambda) = match case {
        UnknownCoefficient::SpecificHeat => {
            let (k, rho, q0) = (req(d, "k")?, req(d, "rho")?, req(d, "q0")?);
            let c = PI * q0 * q0 * erf(mu).powi(2) / (rho * k * dt * dt);
            let lambda = k * dt / (q0 * PI.sqrt() * erf(mu));
            (c, lambda)
        }
        UnknownCoefficient::LatentHeat => {
            let (k, rho, c, q0) = (req(d, "k")?, req(d, "rho")?, req(d, "c")?, req(d, "q0")?);
            let ell = q0 * (c / (rho * k)).sqrt() * (-mu * mu).exp() / mu;
            (ell, (k / (rho * c)).sqrt())
        }
        UnknownCoefficient::Conductivity => {
            let (rho, c, ell, q0) = (req(d, "rho")?, req(d, "c")?, req(d, "ell")?, req(d, "q0")?);
            let k = PI * q0 * q0 * erf(mu).powi(2) / (rho * c * dt * dt);
            let lambda = q0 * (-mu * mu).exp() / (rho * ell * mu);
            (k, lambda)
        }
        UnknownCoefficient::Density => {
            let (k, c, q0) = (req(d, "k")?, req(d, "c")?, req(d, "q0")?);
            let rho = PI * q0 * q0 * erf(mu).powi(2) / (k * c * dt * dt);
            let lambda = k * dt / (q0 * PI.sqrt() * erf(mu));
            (rho, lambda)
        }
    };

    Ok(ClassicalSolution { case, mu, coefficient, lambda })
}

/// Inverse error function by bisection over [`erf`]; |y| < 1.
pub fn erf_inv(y: f64) -> Result<f64> {
    if !(y > -1.0 && y < 1.0) {
        return Err(Error::Domain(format!("erf_inv requires |y| < 1, got {y}")));
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    let x = solve_monotone(
        |x| Ok(erf(x)),
        y.abs(),
        true,
        MU_MAX,
        BisectTol { residual: 1e-15, width_rel: 1e-15 },
    )?;
    Ok(if y < 0.0 { -x } else { x })
}

/// Run the fractional solver at each listed order and report the gap to
/// the classical solution. The classical μ is computed once from the same
/// data with α set to 1; the data must satisfy the case restriction at
/// every listed α and at α = 1.
pub fn limit_compare(
    case: UnknownCoefficient,
    d: &ThermalData,
    alphas: &[f64],
    tol: f64,
) -> Result<Vec<LimitRow>> {
    let mut at_one = d.clone();
    at_one.alpha = 1.0;
    let classical = solve_classical(case, &at_one, tol)?;
    let mut rows = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let mut da = d.clone();
        da.alpha = alpha;
        let sol = inverse::solve_case(case, &da, tol)?;
        rows.push(LimitRow {
            alpha,
            xi: sol.xi,
            two_mu: 2.0 * classical.mu,
            xi_gap: (sol.xi - 2.0 * classical.mu).abs(),
            coeff_gap: (sol.coefficient - classical.coefficient).abs()
                / classical.coefficient.abs(),
        });
    }
    Ok(rows)
}
