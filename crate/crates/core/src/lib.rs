//! Exact Fourier coefficients of `η(q)^-24`, the three families of
//! Vafa–Witten invariants of K3 surfaces built from them, and numerical
//! checks of their asymptotics and higher-order Turán inequalities.
//!
//! The crate is organised bottom-up:
//!
//! - [`qseries`]: exact integer coefficients `a(n)` of `η(q)^-24`, by a
//!   divisor-sum recurrence and by an independent pentagonal-number oracle.
//! - [`dedekind`]: Dedekind sums `s(h,k)` and the multiplier phase `ω_{h,k}^24`.
//! - [`rademacher`]: the convergent Bessel-series formula for `a(n)`.
//! - [`cyclotomic`]: exact arithmetic in `ℚ(ζ_m)`.
//! - [`invariants`]: closed forms `α₁`, `α₂`, `α₃` and direct expansion of
//!   the generating functions.
//! - [`asymptotics`]: leading Bessel terms and observed relative errors.
//! - [`poly`] and [`turan`]: exact polynomials, Sturm counts, Jensen
//!   polynomials, Hermite limits and Turán scans.
//! - [`verify`] and [`cli`]: the `k3vw` command-line front end.

pub mod asymptotics;
pub mod bigreal;
pub mod cli;
pub mod cyclotomic;
pub mod dedekind;
mod error;
pub mod invariants;
pub mod poly;
pub mod qseries;
pub mod rademacher;
pub mod turan;
pub mod verify;

pub use error::{Error, Result};
pub use qseries::CoefficientTable;
