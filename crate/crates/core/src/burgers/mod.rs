//! Burgers equation: two-point numerical fluxes, entropy algebra, and the
//! periodic split-form DGSEM / finite-volume semidiscretizations.

pub mod dg;
pub mod flux;

pub use dg::{BurgersDg, BurgersField, BurgersFv, BurgersSchemeConfig, Inhomogeneous};
pub use flux::BurgersFlux;
