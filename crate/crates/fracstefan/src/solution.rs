//! Evaluation of the explicit solution: temperature field, gradient, free
//! boundary, fluxes, and sampled profiles.
//!
//! With every coefficient resolved the solution is self-similar: the
//! temperature depends on position and time only through `x / (λ t^{α/2})`,
//!
//! ```text
//! T(x, t) = t0 − (t0 − tm) · g3(α, x/(λ t^{α/2})) / g3(α, ξ),   x ≤ s(t),
//! s(t)    = λ ξ t^{α/2},
//! ```
//!
//! and `T ≡ tm` ahead of the front (the one-phase model keeps the solid at
//! the melting temperature, so the formula is never evaluated past `s(t)`).

use crate::inverse::{ForwardSolution, InverseSolution, ThermalData, UnknownCoefficient};
use crate::specfun::{g3, gamma_pos, mainardi, SeriesControl};
use crate::{Error, Result};

/// A fully resolved instance of the melting problem.
#[derive(Debug, Clone, PartialEq)]
pub struct StefanSolution {
    pub alpha: f64,
    /// Diffusion-scale coefficient, `λ² = k/(ρc)`.
    pub lambda: f64,
    /// Dimensionless front coefficient.
    pub xi: f64,
    pub t0: f64,
    pub tm: f64,
    pub q0: f64,
    pub k: f64,
    pub rho: f64,
    pub c: f64,
    pub ell: f64,
}

impl StefanSolution {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alpha: f64,
        lambda: f64,
        xi: f64,
        t0: f64,
        tm: f64,
        q0: f64,
        k: f64,
        rho: f64,
        c: f64,
        ell: f64,
    ) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Validation(format!(
                "fractional order must lie in (0, 1], got {alpha}"
            )));
        }
        if !(t0 > tm) {
            return Err(Error::Validation(format!(
                "face temperature must exceed the melting temperature, got t0 = {t0}, tm = {tm}"
            )));
        }
        for (name, v) in [
            ("lambda", lambda),
            ("xi", xi),
            ("q0", q0),
            ("k", k),
            ("rho", rho),
            ("c", c),
            ("ell", ell),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Validation(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Self { alpha, lambda, xi, t0, tm, q0, k, rho, c, ell })
    }

    /// Assemble from inverse data plus a solved case, filling the unknown
    /// coefficient with its recovered value.
    pub fn from_inverse(d: &ThermalData, sol: &InverseSolution) -> Result<Self> {
        let pick = |own: Option<f64>, case: UnknownCoefficient| {
            if sol.case == case { Some(sol.coefficient) } else { own }
        };
        let k = pick(d.k, UnknownCoefficient::Conductivity);
        let rho = pick(d.rho, UnknownCoefficient::Density);
        let c = pick(d.c, UnknownCoefficient::SpecificHeat);
        let ell = pick(d.ell, UnknownCoefficient::LatentHeat);
        let missing = || Error::Validation("data incomplete for the solved case".into());
        Self::new(
            d.alpha,
            sol.lambda,
            sol.xi,
            d.t0,
            d.tm,
            d.q0.ok_or_else(missing)?,
            k.ok_or_else(missing)?,
            rho.ok_or_else(missing)?,
            c.ok_or_else(missing)?,
            ell.ok_or_else(missing)?,
        )
    }

    /// Assemble from fully known data plus the forward solution that
    /// determined its front coefficient and flux.
    pub fn from_forward(d: &ThermalData, fwd: &ForwardSolution) -> Result<Self> {
        let missing = |n: &str| Error::Validation(format!("field {n} is required but missing"));
        Self::new(
            d.alpha,
            fwd.lambda,
            fwd.xi,
            d.t0,
            d.tm,
            fwd.q0,
            d.k.ok_or_else(|| missing("k"))?,
            d.rho.ok_or_else(|| missing("rho"))?,
            d.c.ok_or_else(|| missing("c"))?,
            d.ell.ok_or_else(|| missing("ell"))?,
        )
    }

    pub fn delta_t(&self) -> f64 {
        self.t0 - self.tm
    }

    /// Similarity length scale λ t^{α/2}.
    fn length_scale(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("time must be positive, got {t}")));
        }
        Ok(self.lambda * t.powf(0.5 * self.alpha))
    }

    /// Position of the melt front, `s(t) = λ ξ t^{α/2}`; tends to 0 as
    /// t → 0⁺.
    pub fn free_boundary(&self, t: f64) -> Result<f64> {
        Ok(self.xi * self.length_scale(t)?)
    }

    /// Temperature at position x ≥ 0 and time t > 0. Ahead of the front
    /// the solid sits exactly at the melting temperature.
    pub fn temperature(&self, x: f64, t: f64) -> Result<f64> {
        let scale = self.length_scale(t)?;
        if !(x >= 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!("position must be ≥ 0, got {x}")));
        }
        if x > self.xi * scale {
            return Ok(self.tm);
        }
        let eta = x / scale;
        Ok(self.t0 - self.delta_t() * g3(self.alpha, eta)? / g3(self.alpha, self.xi)?)
    }

    /// Spatial temperature gradient for 0 ≤ x ≤ s(t); strictly negative on
    /// the melt region.
    pub fn temperature_gradient(&self, x: f64, t: f64) -> Result<f64> {
        let scale = self.length_scale(t)?;
        if !(x >= 0.0) || !x.is_finite() || x > self.xi * scale {
            return Err(Error::Domain(format!(
                "gradient is defined on the melt region 0 ≤ x ≤ s(t), got x = {x}"
            )));
        }
        self.gradient_at_eta(x / scale, scale)
    }

    fn gradient_at_eta(&self, eta: f64, scale: f64) -> Result<f64> {
        let m = mainardi(0.5 * self.alpha, eta, &SeriesControl::default())?;
        Ok(-self.delta_t() * m / (g3(self.alpha, self.xi)? * scale))
    }

    /// Relative defect in the energy balance at the front: compares the
    /// conductive flux arriving at s(t) with the latent heat absorbed by
    /// the front's fractional-rate motion. Zero (to tolerance) exactly
    /// when ξ solves the coefficient system.
    pub fn stefan_residual(&self, t: f64) -> Result<f64> {
        let scale = self.length_scale(t)?;
        let lhs = -self.k * self.gradient_at_eta(self.xi, scale)?;
        let gp = gamma_pos(1.0 + 0.5 * self.alpha);
        let gm = gamma_pos(1.0 - 0.5 * self.alpha);
        let rhs = self.rho * self.ell * self.lambda * self.xi * (gp / gm)
            * t.powf(-0.5 * self.alpha);
        Ok((lhs - rhs).abs() / rhs)
    }

    /// Sample the solution on a grid. Tiny negative overshoots of `T − tm`
    /// from series roundoff are clamped to `tm` and counted in
    /// [`Profile::clamped_count`].
    pub fn emit_profile(&self, grid: &GridSpec) -> Result<Profile> {
        let mut temperatures = Vec::with_capacity(grid.times.len());
        let mut front = Vec::with_capacity(grid.times.len());
        let mut clamped = 0usize;
        for &t in &grid.times {
            let s = self.free_boundary(t)?;
            let mut row = Vec::with_capacity(grid.positions.len());
            for &x in &grid.positions {
                let mut temp = self.temperature(x, t)?;
                if temp < self.tm {
                    temp = self.tm;
                    clamped += 1;
                }
                row.push(temp);
            }
            front.push(s);
            temperatures.push(row);
        }
        Ok(Profile {
            times: grid.times.clone(),
            positions: grid.positions.clone(),
            temperatures,
            front,
            clamped_count: clamped,
        })
    }
}

/// Sampling grid: strictly ascending times (> 0) and positions (≥ 0), at
/// least two of each.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    times: Vec<f64>,
    positions: Vec<f64>,
}

impl GridSpec {
    pub fn new(times: Vec<f64>, positions: Vec<f64>) -> Result<Self> {
        let ascending = |v: &[f64]| v.windows(2).all(|w| w[0] < w[1]);
        if times.len() < 2 || positions.len() < 2 {
            return Err(Error::Validation(
                "the grid needs at least two times and two positions".into(),
            ));
        }
        if !times.iter().all(|t| t.is_finite() && *t > 0.0) || !ascending(&times) {
            return Err(Error::Validation(
                "times must be finite, positive and strictly ascending".into(),
            ));
        }
        if !positions.iter().all(|x| x.is_finite() && *x >= 0.0) || !ascending(&positions) {
            return Err(Error::Validation(
                "positions must be finite, non-negative and strictly ascending".into(),
            ));
        }
        Ok(Self { times, positions })
    }

    /// Uniform grid: `nt` times ending at `tmax` (starting at `tmax/nt`)
    /// and `nx` positions spanning `[0, xmax]`.
    pub fn uniform(xmax: f64, tmax: f64, nx: usize, nt: usize) -> Result<Self> {
        if !(xmax > 0.0) || !(tmax > 0.0) || nx < 2 || nt < 2 {
            return Err(Error::Validation(format!(
                "uniform grid requires xmax > 0, tmax > 0, nx ≥ 2, nt ≥ 2 \
                 (got {xmax}, {tmax}, {nx}, {nt})"
            )));
        }
        let times = (1..=nt).map(|i| tmax * i as f64 / nt as f64).collect();
        let positions = (0..nx).map(|j| xmax * j as f64 / (nx - 1) as f64).collect();
        Self::new(times, positions)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }
}

/// Sampled temperature field and front trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub times: Vec<f64>,
    pub positions: Vec<f64>,
    /// `temperatures[i][j]` is T at (positions\[j\], times\[i\]).
    pub temperatures: Vec<Vec<f64>>,
    /// Front position per time row.
    pub front: Vec<f64>,
    /// Number of samples clamped up to `tm` against series roundoff.
    pub clamped_count: usize,
}
