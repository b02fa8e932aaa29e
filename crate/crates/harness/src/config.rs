//! Experiment configuration: JSON-serializable descriptions of every run.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use splitstab_core::burgers::dg::{BurgersConfigError, BurgersSchemeConfig};
use splitstab_core::burgers::flux::{BurgersFlux, FluxError};
use splitstab_core::euler::flux::{EulerFlux, EulerFluxError};
use splitstab_core::mesh::MeshError;
use splitstab_core::sbp::{OperatorError, ProjectionKind};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error(transparent)]
    Flux(#[from] FluxError),
    #[error(transparent)]
    EulerFlux(#[from] EulerFluxError),
    #[error(transparent)]
    Scheme(#[from] BurgersConfigError),
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("unknown preset '{0}'; run `list-presets` for the available names")]
    UnknownPreset(String),
    #[error("could not read config {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("could not parse config: {0}")]
    Parse(#[from] serde_json::Error),
}

/// What a run produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunMode {
    /// Finite-difference Jacobian and its eigenspectrum.
    Spectrum,
    /// Time integration with trace recording.
    Simulate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntegratorChoice {
    Ssprk3,
    Lsrk54,
}

impl IntegratorChoice {
    pub fn to_core(self) -> splitstab_core::timeint::Integrator {
        match self {
            IntegratorChoice::Ssprk3 => splitstab_core::timeint::Integrator::SspRk3,
            IntegratorChoice::Lsrk54 => splitstab_core::timeint::Integrator::LsRk54,
        }
    }
}

/// Initial fluctuation added to the baseflow.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Perturbation {
    None,
    /// Eigenmode of the largest-real-part eigenvalue, scaled to this peak.
    WorstMode { peak: f64 },
    /// Smooth fluctuation `amplitude * cos(pi x)`.
    Cosine { amplitude: f64 },
}

/// Burgers experiment: scheme, mesh, and baseflow.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BurgersSetup {
    pub num_elements: usize,
    pub degree: usize,
    /// Volume split parameter.
    pub alpha: f64,
    /// Surface flux id: central, alpha-split, ec, tadmor, ed-rusanov,
    /// es-rusanov.
    pub surface_flux: String,
    #[serde(default)]
    pub carpenter_volume_mod: bool,
    /// Baseflow `sin(freq * pi * x - 0.7) + 2`.
    #[serde(default = "default_frequency")]
    pub baseflow_frequency: f64,
    /// Degree the baseflow is reduced to per element.
    #[serde(default = "default_baseflow_degree")]
    pub baseflow_degree: usize,
    #[serde(default = "default_projection")]
    pub baseflow_projection: ProjectionChoice,
    pub perturbation: Perturbation,
}

fn default_frequency() -> f64 {
    1.0
}

fn default_baseflow_degree() -> usize {
    1
}

fn default_projection() -> ProjectionChoice {
    ProjectionChoice::GaussInterpolation
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProjectionChoice {
    /// Interpolation at the target-degree Gauss points; reproduces the
    /// reference spectra and is the default.
    GaussInterpolation,
    /// Discrete L2 projection with the working-degree quadrature.
    L2,
    /// Interpolation at the target-degree LGL points.
    Interpolation,
}

impl ProjectionChoice {
    pub fn to_core(self) -> ProjectionKind {
        match self {
            ProjectionChoice::GaussInterpolation => ProjectionKind::GaussInterpolation,
            ProjectionChoice::L2 => ProjectionKind::L2,
            ProjectionChoice::Interpolation => ProjectionKind::Interpolation,
        }
    }
}

impl BurgersSetup {
    pub fn scheme_config(&self) -> Result<BurgersSchemeConfig, ConfigError> {
        let flux = BurgersFlux::from_name(&self.surface_flux, self.alpha)?;
        let mut config = BurgersSchemeConfig::new(self.alpha, flux)?;
        config.carpenter_volume_mod = self.carpenter_volume_mod;
        Ok(config)
    }
}

/// 2D Euler density-wave experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EulerSetup {
    pub elements_x: usize,
    pub elements_y: usize,
    pub degree: usize,
    /// Volume flux id: euler-central, euler-ec-chandrashekar, euler-kg.
    pub volume_flux: String,
    /// Surface flux id; additionally euler-rusanov.
    pub surface_flux: String,
    /// Density-wave amplitude in [0, 1).
    pub amplitude: f64,
}

impl EulerSetup {
    pub fn volume(&self) -> Result<EulerFlux, ConfigError> {
        Ok(EulerFlux::from_name(&self.volume_flux)?)
    }
    pub fn surface(&self) -> Result<EulerFlux, ConfigError> {
        Ok(EulerFlux::from_name(&self.surface_flux)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "equation", rename_all = "kebab-case")]
pub enum Setup {
    Burgers(BurgersSetup),
    Euler2d(EulerSetup),
}

/// A complete experiment description; serializes to the JSON accepted by
/// the CLI and written back into `meta.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub name: String,
    pub mode: RunMode,
    #[serde(flatten)]
    pub setup: Setup,
    #[serde(default = "default_cfl")]
    pub cfl: f64,
    #[serde(default = "default_t_end")]
    pub t_end: f64,
    #[serde(default = "default_integrator")]
    pub integrator: IntegratorChoice,
    /// Finite-difference step for Jacobians.
    #[serde(default = "default_fd_epsilon")]
    pub fd_epsilon: f64,
    /// Use the fourth-order difference stencil for the Jacobian (reduces
    /// eigenvalue noise on large systems).
    #[serde(default)]
    pub fd_order4: bool,
    /// Record every n-th step in the trace.
    #[serde(default = "default_trace_every")]
    pub trace_every: usize,
    #[serde(default)]
    pub seed: u64,
}

fn default_cfl() -> f64 {
    0.05
}

fn default_t_end() -> f64 {
    5.0
}

fn default_integrator() -> IntegratorChoice {
    IntegratorChoice::Ssprk3
}

fn default_fd_epsilon() -> f64 {
    splitstab_core::spectral::DEFAULT_FD_EPSILON
}

fn default_trace_every() -> usize {
    1
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.t_end > 0.0) {
            return Err(ConfigError::Invalid(format!(
                "t_end must be positive, got {}",
                self.t_end
            )));
        }
        if !(self.cfl > 0.0) {
            return Err(ConfigError::Invalid(format!(
                "cfl must be positive, got {}",
                self.cfl
            )));
        }
        if !(self.fd_epsilon > 0.0) {
            return Err(ConfigError::Invalid(
                "fd_epsilon must be positive".to_string(),
            ));
        }
        if self.trace_every == 0 {
            return Err(ConfigError::Invalid(
                "trace_every must be at least 1".to_string(),
            ));
        }
        match &self.setup {
            Setup::Burgers(b) => {
                if b.num_elements == 0 {
                    return Err(ConfigError::Invalid("num_elements must be positive".into()));
                }
                b.scheme_config()?;
                if b.baseflow_degree > b.degree {
                    return Err(ConfigError::Invalid(format!(
                        "baseflow_degree {} exceeds degree {}",
                        b.baseflow_degree, b.degree
                    )));
                }
            }
            Setup::Euler2d(e) => {
                if e.elements_x == 0 || e.elements_y == 0 {
                    return Err(ConfigError::Invalid("element counts must be positive".into()));
                }
                e.volume()?;
                e.surface()?;
                if !(0.0..1.0).contains(&e.amplitude) {
                    return Err(ConfigError::Invalid(format!(
                        "density-wave amplitude must lie in [0, 1), got {}",
                        e.amplitude
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let config: ExperimentConfig = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialization")
    }
}
