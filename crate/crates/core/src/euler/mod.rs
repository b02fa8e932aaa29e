//! Compressible Euler equations: states, entropy algebra, two-point
//! volume/surface fluxes, and the periodic 2D tensor-product DGSEM with
//! flux-differencing volume terms.

pub mod dg2d;
pub mod flux;
pub mod state;

pub use dg2d::{CrashReport, DensityErrorGauge, EulerDg2d, EulerField2D};
pub use flux::EulerFlux;
pub use state::{Axis, EulerState, GAMMA};
