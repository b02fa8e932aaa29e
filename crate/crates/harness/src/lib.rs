//! Experiment driver for the split-form stability laboratory: named
//! presets, run orchestration, trace recording, and output writing on top
//! of `splitstab-core`.

pub mod config;
pub mod output;
pub mod presets;
pub mod runs;
pub mod sweep;

pub use config::{ConfigError, ExperimentConfig};
pub use runs::{
    check_mrfvk, fit_growth_rate, run_burgers_growth, run_euler_wave, run_spectrum,
    saturation_time, RunError,
};
