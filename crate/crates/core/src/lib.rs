//! Numerical kernels for studying the local energy stability of split-form
//! and entropy-conserving high-order collocation schemes.
//!
//! The crate provides
//! - diagonal-norm summation-by-parts operators on Legendre-Gauss-Lobatto
//!   nodes ([`sbp`]),
//! - two-point numerical fluxes with their entropy algebra for Burgers
//!   ([`burgers::flux`]) and the compressible Euler equations
//!   ([`euler::flux`]),
//! - periodic split-form DGSEM semidiscretizations in 1D ([`burgers::dg`])
//!   and flux-differencing form in 2D ([`euler::dg2d`]),
//! - finite-difference Jacobians and dense eigenspectra of the semidiscrete
//!   operators ([`spectral`]),
//! - explicit Runge-Kutta time integration with CFL-based step control
//!   ([`timeint`]).

pub mod burgers;
pub mod euler;
pub mod mesh;
pub mod reference;
mod rhs;
pub mod sbp;
pub mod spectral;
pub mod timeint;

pub use rhs::{InadmissibleState, OffendingVariable, Rhs, RhsError};
