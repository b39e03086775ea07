//! One-phase time-fractional Stefan melting problem with an unknown
//! thermal coefficient.
//!
//! A semi-infinite phase-change material, initially solid at its melting
//! temperature `tm`, is melted by holding the fixed face `x = 0` at a
//! temperature `t0 > tm`. The governing diffusion equation carries a Caputo
//! time derivative of order `α ∈ (0, 1]`, and the melt front follows the
//! similarity law `s(t) = λ ξ t^{α/2}`. Prescribing both the face
//! temperature and the face heat flux over-determines the problem by one
//! datum, which is exactly enough to recover one unknown material
//! coefficient: the specific heat `c`, the latent heat `ℓ`, the
//! conductivity `k`, or the density `ρ`.
//!
//! Each of the four recovery cases reduces to a single strictly monotone
//! transcendental equation for the dimensionless front coefficient `ξ`,
//! built from the Wright function on the negative real axis and the
//! Mainardi function. The crate is organised accordingly:
//!
//! - [`specfun`] — Gamma, erf/erfc, the Wright and Mainardi series, and the
//!   auxiliary monotone combinations the solvers bisect on.
//! - [`inverse`] — the four coefficient-recovery cases, their solvability
//!   restrictions, and the forward (data-generating) problem.
//! - [`solution`] — evaluation of the temperature field, its gradient, the
//!   free boundary, and sampled profiles.
//! - [`classical`] — the `α = 1` closed forms in terms of erf/exp, used as
//!   an independent check and as the limit of the fractional solution.
//! - [`verify`] — an L1 discretisation of the Caputo derivative used to
//!   check the closed-form solution against the differential equation.
//!
//! All quantities are plain `f64` in caller-consistent units; the flux
//! coefficient `q0` carries the α-dependent unit flux × time^{α/2}.

// validation guards are written as negated comparisons so NaN fails them too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classical;
pub mod inverse;
pub mod solution;
pub mod specfun;
pub mod verify;

mod error;
mod root;

pub use error::{Error, Result};
