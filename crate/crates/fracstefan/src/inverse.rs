//! Recovery of one unknown thermal coefficient from over-specified data.
//!
//! With the face temperature `t0` and the flux coefficient `q0` both
//! prescribed, one of the four material coefficients can be determined:
//!
//! | case | unknown | equation for ξ                      | solvable          |
//! |------|---------|-------------------------------------|-------------------|
//! | 1    | `c`     | `g3(ξ)·M_{α/2}(ξ)/ξ = const` (↓)    | margin < 1        |
//! | 2    | `ℓ`     | `g3(ξ) = const` (↑)                 | margin < 1        |
//! | 3    | `k`     | `f4(ξ) = const` (↑)                 | any positive data |
//! | 4    | `ρ`     | `f4(ξ) = const` (↑)                 | any positive data |
//!
//! Each right-hand side is a dimensionless combination of the known data;
//! strict monotonicity of the left-hand sides makes bracketing bisection
//! unconditionally convergent. For cases 1 and 2 a dimensionless margin
//! decides existence: the equation has a positive root exactly when the
//! margin is below 1, and the gate uses the strict inequality with no
//! slack (at margin 1 the root degenerates to ξ = 0).
//!
//! Case 1 is solved in the product form `g3·M/ξ = const`, a strictly
//! decreasing function of proven-monotone factors, rather than with the
//! Mainardi term on the right-hand side.

use crate::root::{solve_monotone, BisectTol};
use crate::specfun::{f4, f5, g3, gamma_pos, mainardi, SeriesControl, Z_MAX};
use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Which thermal coefficient is treated as unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnknownCoefficient {
    /// Case 1: specific heat `c`.
    SpecificHeat,
    /// Case 2: latent heat of fusion `ℓ`.
    LatentHeat,
    /// Case 3: thermal conductivity `k`.
    Conductivity,
    /// Case 4: mass density `ρ`.
    Density,
}

impl UnknownCoefficient {
    pub const ALL: [UnknownCoefficient; 4] = [
        UnknownCoefficient::SpecificHeat,
        UnknownCoefficient::LatentHeat,
        UnknownCoefficient::Conductivity,
        UnknownCoefficient::Density,
    ];

    /// Short field name, matching the CLI flag spelling.
    pub fn name(&self) -> &'static str {
        match self {
            UnknownCoefficient::SpecificHeat => "c",
            UnknownCoefficient::LatentHeat => "ell",
            UnknownCoefficient::Conductivity => "k",
            UnknownCoefficient::Density => "rho",
        }
    }
}

impl fmt::Display for UnknownCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UnknownCoefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c" => Ok(UnknownCoefficient::SpecificHeat),
            "ell" => Ok(UnknownCoefficient::LatentHeat),
            "k" => Ok(UnknownCoefficient::Conductivity),
            "rho" => Ok(UnknownCoefficient::Density),
            other => Err(Error::Validation(format!(
                "unknown coefficient tag {other:?}; expected one of c, ell, k, rho"
            ))),
        }
    }
}

/// Physical data of the melting problem in caller-consistent units.
///
/// Coefficients are optional so that the one being determined can be left
/// out; each operation validates that the fields it needs are present and
/// positive. `q0` carries the α-dependent unit flux × time^{α/2}.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalData {
    /// Fractional order of the time derivative, in (0, 1].
    pub alpha: f64,
    /// Thermal conductivity.
    pub k: Option<f64>,
    /// Mass density.
    pub rho: Option<f64>,
    /// Specific heat.
    pub c: Option<f64>,
    /// Latent heat of fusion.
    pub ell: Option<f64>,
    /// Fixed-face temperature, must exceed `tm`.
    pub t0: f64,
    /// Melting temperature.
    pub tm: f64,
    /// Flux coefficient at the fixed face.
    pub q0: Option<f64>,
}

impl ThermalData {
    /// Temperature excess `t0 − tm` driving the melt.
    pub fn delta_t(&self) -> f64 {
        self.t0 - self.tm
    }

    fn validate_base(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::Validation(format!(
                "fractional order must lie in (0, 1], got {}",
                self.alpha
            )));
        }
        if !self.t0.is_finite() || !self.tm.is_finite() || !(self.t0 > self.tm) {
            return Err(Error::Validation(format!(
                "face temperature must exceed the melting temperature, got t0 = {}, tm = {}",
                self.t0, self.tm
            )));
        }
        for (name, v) in [
            ("k", self.k),
            ("rho", self.rho),
            ("c", self.c),
            ("ell", self.ell),
            ("q0", self.q0),
        ] {
            if let Some(v) = v {
                if !(v > 0.0) || !v.is_finite() {
                    return Err(Error::Validation(format!(
                        "{name} must be positive and finite, got {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn require(&self, name: &str) -> Result<f64> {
        let v = match name {
            "k" => self.k,
            "rho" => self.rho,
            "c" => self.c,
            "ell" => self.ell,
            "q0" => self.q0,
            _ => unreachable!("unknown field {name}"),
        };
        v.ok_or_else(|| Error::Validation(format!("field {name} is required but missing")))
    }

    /// Validate the data for one recovery case: everything except the
    /// unknown coefficient must be present.
    fn validate_for(&self, case: UnknownCoefficient) -> Result<()> {
        self.validate_base()?;
        self.require("q0")?;
        for coef in ["k", "rho", "c", "ell"] {
            if coef != case.name() {
                self.require(coef)?;
            }
        }
        Ok(())
    }
}

/// Result of one coefficient-recovery case.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseSolution {
    pub case: UnknownCoefficient,
    /// Dimensionless free-boundary coefficient in `s(t) = λ ξ t^{α/2}`.
    pub xi: f64,
    /// Recovered value of the unknown coefficient.
    pub coefficient: f64,
    /// Diffusion-scale coefficient, `λ² = k/(ρc)` with the recovered value.
    pub lambda: f64,
    /// Value of the case's restriction expression (cases 3–4 report 0).
    pub restriction_margin: f64,
}

/// Forward problem: all four coefficients known, flux coefficient derived.
#[derive(Debug, Clone, PartialEq)]
pub struct ForwardSolution {
    pub xi: f64,
    pub q0: f64,
    pub lambda: f64,
}

/// Dimensionless restriction expression of a case. The case is solvable
/// exactly when the returned value is < 1; cases 3 and 4 always return 0.
pub fn restriction(case: UnknownCoefficient, d: &ThermalData) -> Result<f64> {
    d.validate_for(case)?;
    let dt = d.delta_t();
    let gm = gamma_pos(1.0 - 0.5 * d.alpha);
    match case {
        UnknownCoefficient::SpecificHeat => {
            let (k, rho, ell, q0) = (
                d.require("k")?,
                d.require("rho")?,
                d.require("ell")?,
                d.require("q0")?,
            );
            let gp = gamma_pos(1.0 + 0.5 * d.alpha);
            Ok(k * rho * ell * dt * gp / (q0 * q0 * gm))
        }
        UnknownCoefficient::LatentHeat => {
            let (k, rho, c, q0) = (
                d.require("k")?,
                d.require("rho")?,
                d.require("c")?,
                d.require("q0")?,
            );
            Ok((rho * c * k).sqrt() * dt / (q0 * gm))
        }
        UnknownCoefficient::Conductivity | UnknownCoefficient::Density => Ok(0.0),
    }
}

/// Solve the case's monotone transcendental equation for ξ.
///
/// `tol` bounds the equation residual at the returned root; the bracket
/// width criterion of the bisection still applies.
pub fn solve_xi(case: UnknownCoefficient, d: &ThermalData, tol: f64) -> Result<f64> {
    let margin = restriction(case, d)?;
    solve_xi_gated(case, d, tol, margin)
}

fn solve_xi_gated(
    case: UnknownCoefficient,
    d: &ThermalData,
    tol: f64,
    margin: f64,
) -> Result<f64> {
    if matches!(
        case,
        UnknownCoefficient::SpecificHeat | UnknownCoefficient::LatentHeat
    ) && !(margin < 1.0)
    {
        return Err(Error::Restriction { margin });
    }
    let tol = BisectTol::residual(tol)?;
    let alpha = d.alpha;
    let dt = d.delta_t();
    let gm = gamma_pos(1.0 - 0.5 * alpha);
    let gp = gamma_pos(1.0 + 0.5 * alpha);
    match case {
        UnknownCoefficient::SpecificHeat => {
            // g3(x)·M(x)/x decreases from 1/Γ²(1−α/2); the target is the
            // margin divided by Γ²(1−α/2), so margin < 1 brackets a root
            let (k, rho, ell, q0) = (
                d.require("k")?,
                d.require("rho")?,
                d.require("ell")?,
                d.require("q0")?,
            );
            let target = k * rho * ell * dt * gp / (q0 * q0 * gm * gm * gm);
            let ctrl = SeriesControl::default();
            let f = |x: f64| Ok(f5(alpha, x)? * mainardi(0.5 * alpha, x, &ctrl)?);
            solve_monotone(f, target, false, Z_MAX, tol)
        }
        UnknownCoefficient::LatentHeat => {
            solve_monotone(|x| g3(alpha, x), margin, true, Z_MAX, tol)
        }
        UnknownCoefficient::Conductivity | UnknownCoefficient::Density => {
            let (c, ell) = (d.require("c")?, d.require("ell")?);
            let target = c * dt * gm / (ell * gp);
            solve_monotone(|x| f4(alpha, x), target, true, Z_MAX, tol)
        }
    }
}

/// Recover the unknown coefficient from the solved ξ.
pub fn recover_coefficient(case: UnknownCoefficient, d: &ThermalData, xi: f64) -> Result<f64> {
    d.validate_for(case)?;
    if !(xi > 0.0) || !xi.is_finite() {
        return Err(Error::Validation(format!("xi must be positive, got {xi}")));
    }
    let alpha = d.alpha;
    let dt = d.delta_t();
    let gm = gamma_pos(1.0 - 0.5 * alpha);
    let gp = gamma_pos(1.0 + 0.5 * alpha);
    match case {
        UnknownCoefficient::SpecificHeat => {
            let ell = d.require("ell")?;
            Ok(ell * gp * f4(alpha, xi)? / (dt * gm))
        }
        UnknownCoefficient::LatentHeat => {
            let c = d.require("c")?;
            Ok(c * dt * gm / (gp * f4(alpha, xi)?))
        }
        UnknownCoefficient::Conductivity => {
            let (rho, c, q0) = (d.require("rho")?, d.require("c")?, d.require("q0")?);
            let g = g3(alpha, xi)?;
            Ok(q0 * q0 * gm * gm * g * g / (rho * c * dt * dt))
        }
        UnknownCoefficient::Density => {
            let (k, c, q0) = (d.require("k")?, d.require("c")?, d.require("q0")?);
            let g = g3(alpha, xi)?;
            Ok(q0 * q0 * gm * gm * g * g / (k * c * dt * dt))
        }
    }
}

/// Diffusion-scale coefficient λ for the solved case.
///
/// Each case uses its own closed form; all four are algebraically
/// equivalent to `λ² = k/(ρc)` once ξ solves the case equation, and the
/// tests assert that consistency.
pub fn recover_lambda(
    case: UnknownCoefficient,
    d: &ThermalData,
    xi: f64,
    coefficient: f64,
) -> Result<f64> {
    d.validate_for(case)?;
    if !(xi > 0.0) || !(coefficient > 0.0) {
        return Err(Error::Validation(format!(
            "xi and coefficient must be positive, got xi = {xi}, coefficient = {coefficient}"
        )));
    }
    let alpha = d.alpha;
    let dt = d.delta_t();
    let gm = gamma_pos(1.0 - 0.5 * alpha);
    let gp = gamma_pos(1.0 + 0.5 * alpha);
    match case {
        UnknownCoefficient::SpecificHeat => {
            let (k, rho, ell) = (d.require("k")?, d.require("rho")?, d.require("ell")?);
            let m = mainardi(0.5 * alpha, xi, &SeriesControl::default())?;
            let lam2 = k * dt * gm * m / (rho * ell * gp * xi * g3(alpha, xi)?);
            Ok(lam2.sqrt())
        }
        UnknownCoefficient::LatentHeat => {
            let (k, rho, c) = (d.require("k")?, d.require("rho")?, d.require("c")?);
            Ok((k / (rho * c)).sqrt())
        }
        UnknownCoefficient::Conductivity => {
            let (rho, c, q0) = (d.require("rho")?, d.require("c")?, d.require("q0")?);
            Ok(q0 * gm * g3(alpha, xi)? / (rho * c * dt))
        }
        UnknownCoefficient::Density => {
            let (k, q0) = (d.require("k")?, d.require("q0")?);
            Ok(k * dt / (q0 * gm * g3(alpha, xi)?))
        }
    }
}

/// Full pipeline for one case: restriction gate, ξ solve, coefficient and
/// diffusion-scale recovery.
pub fn solve_case(
    case: UnknownCoefficient,
    d: &ThermalData,
    tol: f64,
) -> Result<InverseSolution> {
    let margin = restriction(case, d)?;
    let xi = solve_xi_gated(case, d, tol, margin)?;
    let coefficient = recover_coefficient(case, d, xi)?;
    let lambda = recover_lambda(case, d, xi, coefficient)?;
    Ok(InverseSolution {
        case,
        xi,
        coefficient,
        lambda,
        restriction_margin: margin,
    })
}

/// Forward problem: with all four coefficients known, determine the front
/// coefficient ξ and the flux coefficient q0 the data imply. This is the
/// data-generating oracle for the round-trip tests.
pub fn forward_problem(d: &ThermalData, tol: f64) -> Result<ForwardSolution> {
    d.validate_base()?;
    let (k, rho, c, ell) = (
        d.require("k")?,
        d.require("rho")?,
        d.require("c")?,
        d.require("ell")?,
    );
    let alpha = d.alpha;
    let dt = d.delta_t();
    let gm = gamma_pos(1.0 - 0.5 * alpha);
    let gp = gamma_pos(1.0 + 0.5 * alpha);
    let target = c * dt * gm / (ell * gp);
    let xi = solve_monotone(
        |x| f4(alpha, x),
        target,
        true,
        Z_MAX,
        BisectTol::residual(tol)?,
    )?;
    let lambda = (k / (rho * c)).sqrt();
    let q0 = k * dt / (lambda * gm * g3(alpha, xi)?);
    Ok(ForwardSolution { xi, q0, lambda })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_PI: f64 = 1.772453850905516;

    fn data(alpha: f64) -> ThermalData {
        ThermalData {
            alpha,
            k: Some(1.0),
            rho: Some(1.0),
            c: Some(1.0),
            ell: Some(1.0),
            t0: 1.0,
            tm: 0.0,
            q0: Some(1.0),
        }
    }

    #[test]
    fn restriction_known_values() {
        // case 1 at α = 1 with unit data: Γ(3/2)/Γ(1/2) = 1/2
        let m = restriction(UnknownCoefficient::SpecificHeat, &data(1.0)).unwrap();
        assert!((m - 0.5).abs() < 1e-14, "got {m}");
        // case 2 at α = 1 with unit data: 1/√π
        let m = restriction(UnknownCoefficient::LatentHeat, &data(1.0)).unwrap();
        assert!((m - 1.0 / SQRT_PI).abs() < 1e-14, "got {m}");
        // cases 3 and 4 are unconditional
        for case in [UnknownCoefficient::Conductivity, UnknownCoefficient::Density] {
            assert_eq!(restriction(case, &data(0.7)).unwrap(), 0.0);
        }
    }

    #[test]
    fn validation_rejects_bad_data() {
        let mut d = data(0.5);
        d.t0 = 0.0; // equal to tm
        assert!(matches!(
            restriction(UnknownCoefficient::SpecificHeat, &d),
            Err(Error::Validation(_))
        ));
        let mut d = data(0.5);
        d.alpha = 1.5;
        assert!(restriction(UnknownCoefficient::SpecificHeat, &d).is_err());
        let mut d = data(0.5);
        d.k = Some(-1.0);
        assert!(restriction(UnknownCoefficient::SpecificHeat, &d).is_err());
        let mut d = data(0.5);
        d.ell = None; // required for case 1
        assert!(restriction(UnknownCoefficient::SpecificHeat, &d).is_err());
    }

    #[test]
    fn solve_xi_case2_alpha_one_erf_target() {
        // choose q0 so the case-2 target is exactly 1/2: erf(ξ/2) = 1/2
        let mut d = data(1.0);
        d.q0 = Some(2.0 / SQRT_PI);
        let margin = restriction(UnknownCoefficient::LatentHeat, &d).unwrap();
        assert!((margin - 0.5).abs() < 1e-14);
        let xi = solve_xi(UnknownCoefficient::LatentHeat, &d, 1e-13).unwrap();
        // frozen: 2·erfinv(1/2) from the bisection-over-erf oracle
        assert!((xi - 0.9538725524089398).abs() < 1e-10, "got {xi}");
    }

    #[test]
    fn solve_xi_case3_plugback_root_at_two() {
        // pick c·Δt/ℓ so the f4 target equals f4(1, 2); then ξ = 2
        let f4_at_2 = crate::specfun::f4(1.0, 2.0).unwrap();
        let mut d = data(1.0);
        // target = c·Δt·Γ(1/2)/(ℓ·Γ(3/2)) = 2·c·Δt/ℓ
        d.c = Some(0.5 * f4_at_2);
        let xi = solve_xi(UnknownCoefficient::Conductivity, &d, 1e-13).unwrap();
        assert!((xi - 2.0).abs() < 1e-11, "got {xi}");
    }

    #[test]
    fn solve_xi_rejects_violated_restriction() {
        // scale the unit case-1 data so the margin is 1.5
        let mut d = data(1.0);
        d.q0 = Some((0.5 / 1.5_f64).sqrt());
        let m = restriction(UnknownCoefficient::SpecificHeat, &d).unwrap();
        assert!((m - 1.5).abs() < 1e-12);
        let err = solve_xi(UnknownCoefficient::SpecificHeat, &d, 1e-12).unwrap_err();
        match err {
            Error::Restriction { margin } => assert!((margin - 1.5).abs() < 1e-12),
            other => panic!("expected restriction error, got {other:?}"),
        }
    }

    #[test]
    fn cases_one_and_two_invert_each_other() {
        // recover c from case 1, feed it to case 2 at the same ξ: ℓ returns
        let d1 = data(0.6);
        let xi = 1.3;
        let c = recover_coefficient(UnknownCoefficient::SpecificHeat, &d1, xi).unwrap();
        let mut d2 = data(0.6);
        d2.c = Some(c);
        d2.ell = None;
        let ell = recover_coefficient(UnknownCoefficient::LatentHeat, &d2, xi).unwrap();
        assert!((ell - 1.0).abs() < 1e-12, "got {ell}");
    }

    #[test]
    fn cases_three_and_four_are_symmetric() {
        // with k = c = 1 in case 4 and ρ = c = 1 in case 3, same value
        let d = data(0.45);
        let xi = 0.8;
        let k = recover_coefficient(UnknownCoefficient::Conductivity, &d, xi).unwrap();
        let rho = recover_coefficient(UnknownCoefficient::Density, &d, xi).unwrap();
        assert!((k - rho).abs() < 1e-15);
    }

    #[test]
    fn case3_alpha_one_matches_classical_form() {
        // k = π q0² erf²(μ)/(ρ c Δt²) with μ = ξ/2 at α = 1
        let d = data(1.0);
        let xi = 1.7;
        let k = recover_coefficient(UnknownCoefficient::Conductivity, &d, xi).unwrap();
        let mu = 0.5 * xi;
        let classical = std::f64::consts::PI * crate::specfun::erf(mu).powi(2);
        assert!((k - classical).abs() < 1e-12, "{k} vs {classical}");
    }

    #[test]
    fn lambda_consistent_with_diffusivity_on_solved_instances() {
        for case in UnknownCoefficient::ALL {
            let fwd_data = data(0.7);
            let fwd = forward_problem(&fwd_data, 1e-13).unwrap();
            let mut d = data(0.7);
            d.q0 = Some(fwd.q0);
            match case {
                UnknownCoefficient::SpecificHeat => d.c = None,
                UnknownCoefficient::LatentHeat => d.ell = None,
                UnknownCoefficient::Conductivity => d.k = None,
                UnknownCoefficient::Density => d.rho = None,
            }
            let sol = solve_case(case, &d, 1e-13).unwrap();
            let (k, rho, c) = match case {
                UnknownCoefficient::Conductivity => (sol.coefficient, 1.0, 1.0),
                UnknownCoefficient::Density => (1.0, sol.coefficient, 1.0),
                UnknownCoefficient::SpecificHeat => (1.0, 1.0, sol.coefficient),
                UnknownCoefficient::LatentHeat => (1.0, 1.0, 1.0),
            };
            let lam2 = k / (rho * c);
            let rel = (sol.lambda * sol.lambda - lam2).abs() / lam2;
            assert!(rel < 1e-10, "case {case}: relative gap {rel}");
        }
    }

    #[test]
    fn solve_case_round_trips_forward_data() {
        for case in UnknownCoefficient::ALL {
            for &alpha in &[0.4, 0.85, 1.0] {
                let truth = data(alpha);
                let fwd = forward_problem(&truth, 1e-13).unwrap();
                let mut d = truth.clone();
                d.q0 = Some(fwd.q0);
                match case {
                    UnknownCoefficient::SpecificHeat => d.c = None,
                    UnknownCoefficient::LatentHeat => d.ell = None,
                    UnknownCoefficient::Conductivity => d.k = None,
                    UnknownCoefficient::Density => d.rho = None,
                }
                let sol = solve_case(case, &d, 1e-13).unwrap();
                assert!(
                    (sol.coefficient - 1.0).abs() < 1e-6,
                    "case {case}, alpha {alpha}: coefficient {}",
                    sol.coefficient
                );
                assert!(
                    (sol.xi - fwd.xi).abs() < 1e-8,
                    "case {case}, alpha {alpha}: xi {} vs {}",
                    sol.xi,
                    fwd.xi
                );
            }
        }
    }

    #[test]
    fn restriction_gate_both_sides() {
        for case in [UnknownCoefficient::SpecificHeat, UnknownCoefficient::LatentHeat] {
            for &(margin, solvable) in &[(0.9, true), (1.1, false)] {
                let mut d = data(0.5);
                // invert the margin expression for q0
                let gm = gamma_pos(0.75);
                let gp = gamma_pos(1.25);
                d.q0 = Some(match case {
                    UnknownCoefficient::SpecificHeat => (gp / (margin * gm)).sqrt(),
                    UnknownCoefficient::LatentHeat => 1.0 / (margin * gm),
                    _ => unreachable!(),
                });
                let got = restriction(case, &d).unwrap();
                assert!((got - margin).abs() < 1e-12, "margin setup: {got}");
                let res = solve_case(case, &d, 1e-12);
                assert_eq!(res.is_ok(), solvable, "case {case}, margin {margin}");
                if !solvable {
                    assert!(matches!(res, Err(Error::Restriction { .. })));
                }
            }
        }
    }

    #[test]
    fn case2_xi_decreases_as_q0_grows() {
        let mut d = data(0.65);
        d.q0 = Some(1.0);
        let xi_a = solve_xi(UnknownCoefficient::LatentHeat, &d, 1e-13).unwrap();
        d.q0 = Some(1.3);
        let xi_b = solve_xi(UnknownCoefficient::LatentHeat, &d, 1e-13).unwrap();
        assert!(xi_b < xi_a, "{xi_b} !< {xi_a}");
    }

    #[test]
    fn cases_three_four_share_xi_independent_of_k_rho() {
        let mut d3 = data(0.55);
        d3.k = Some(17.0);
        d3.rho = Some(0.03);
        let xi3 = solve_xi(UnknownCoefficient::Conductivity, &d3, 1e-13).unwrap();
        let mut d4 = data(0.55);
        d4.k = Some(0.2);
        d4.rho = Some(9.0);
        let xi4 = solve_xi(UnknownCoefficient::Density, &d4, 1e-13).unwrap();
        assert!((xi3 - xi4).abs() < 1e-12);
    }

    #[test]
    fn forward_problem_examples() {
        // α = 0.5, unit data: the f4 target is Γ(0.75)/Γ(1.25)
        let d = data(0.5);
        let fwd = forward_problem(&d, 1e-13).unwrap();
        let target = gamma_pos(0.75) / gamma_pos(1.25);
        assert!((f4(0.5, fwd.xi).unwrap() - target).abs() < 1e-11);
        assert!((fwd.lambda - 1.0).abs() < 1e-15);

        // huge latent heat freezes the front: ξ → 0
        let mut d = data(1.0);
        d.ell = Some(1e12);
        let fwd = forward_problem(&d, 1e-16).unwrap();
        assert!(fwd.xi < 1e-5, "xi = {}", fwd.xi);

        // ξ depends on c·Δt only through the product
        let mut a = data(0.8);
        a.t0 = 2.0;
        a.c = Some(0.5);
        let b = data(0.8);
        let fa = forward_problem(&a, 1e-13).unwrap();
        let fb = forward_problem(&b, 1e-13).unwrap();
        assert!((fa.xi - fb.xi).abs() < 1e-11);
    }

    #[test]
    fn coefficient_tags_parse_and_print() {
        for case in UnknownCoefficient::ALL {
            let round: UnknownCoefficient = case.name().parse().unwrap();
            assert_eq!(round, case);
        }
        assert!("latent".parse::<UnknownCoefficient>().is_err());
    }
}
