//! Run orchestration: spectrum computations, Burgers fluctuation-growth
//! simulations, and Euler density-wave simulations.

use thiserror::Error;

use splitstab_core::burgers::dg::{
    discrete_entropy, quadrature_norm, BurgersDg, BurgersField, Inhomogeneous,
};
use splitstab_core::euler::dg2d::{
    initialize_density_wave, CrashReport, DensityErrorGauge, EulerDg2d, EulerField2D,
};
use splitstab_core::mesh::{Mesh1D, Mesh2D};
use splitstab_core::sbp::LglOperators;
use splitstab_core::spectral::{
    eigenspectrum, extract_worst_mode, fd_jacobian, fd_jacobian_order4, Eigenmode,
    SpectralError, SpectrumReport,
};
use splitstab_core::timeint::{TimeStepController, Workspace};
use splitstab_core::{Rhs, RhsError};

use crate::config::{
    BurgersSetup, ConfigError, EulerSetup, ExperimentConfig, Perturbation, Setup,
};

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("baseflow evaluation failed: {0}")]
    Baseflow(#[from] RhsError),
    #[error("nonpositive baseflow: the fluctuation bound needs min(baseflow) > 0")]
    NonPositiveBaseflow,
}

/// Burgers baseflow `sin(freq pi x - 0.7) + 2`, reduced per element to the
/// configured degree.
pub fn burgers_baseflow(
    setup: &BurgersSetup,
) -> Result<(Mesh1D, LglOperators, BurgersField), RunError> {
    let mesh = Mesh1D::periodic_unit(setup.num_elements).map_err(ConfigError::from)?;
    let ops = LglOperators::new(setup.degree).map_err(ConfigError::from)?;
    let freq = setup.baseflow_frequency;
    let reduced = BurgersField::from_function_reduced(
        mesh,
        &ops,
        setup.baseflow_degree,
        setup.baseflow_projection.to_core(),
        move |x| (freq * std::f64::consts::PI * x - 0.7).sin() + 2.0,
    )
    .map_err(ConfigError::from)?;
    Ok((mesh, ops, reduced))
}

fn euler_operator(setup: &EulerSetup) -> Result<(EulerDg2d, EulerField2D), RunError> {
    let mesh = Mesh2D::new(setup.elements_x, setup.elements_y).map_err(ConfigError::from)?;
    let ops = LglOperators::new(setup.degree).map_err(ConfigError::from)?;
    let field = initialize_density_wave(mesh, &ops, setup.amplitude)
        .map_err(|e| ConfigError::Invalid(e.to_string()))?;
    let dg = EulerDg2d::new(mesh, ops, setup.volume()?, setup.surface()?);
    Ok((dg, field))
}

/// Outcome of a spectrum run.
pub struct SpectrumRun {
    pub report: SpectrumReport,
    pub eigenmode: Option<Eigenmode>,
    /// Node coordinates matching the eigenmode layout (1D setups only).
    pub node_coords: Option<Vec<f64>>,
}

/// Compute the finite-difference Jacobian about the configured baseflow
/// and its eigenspectrum. `with_eigenmode` additionally extracts the
/// eigenvector of the largest-real-part eigenvalue.
pub fn run_spectrum(
    config: &ExperimentConfig,
    with_eigenmode: bool,
) -> Result<SpectrumRun, RunError> {
    config.validate()?;
    match &config.setup {
        Setup::Burgers(setup) => {
            let (mesh, ops, baseflow) = burgers_baseflow(setup)?;
            let dg = BurgersDg::new(mesh, ops.clone(), setup.scheme_config()?)
                .map_err(ConfigError::from)?;
            let jac = build_jacobian(&dg, &baseflow.data, config)?;
            let mut report = eigenspectrum(jac.as_ref())?;
            report.fd_epsilon = Some(config.fd_epsilon);
            let eigenmode = if with_eigenmode {
                Some(extract_worst_mode(jac.as_ref(), 1e-3)?)
            } else {
                None
            };
            Ok(SpectrumRun {
                report,
                eigenmode,
                node_coords: Some(baseflow.node_coords(&ops)),
            })
        }
        Setup::Euler2d(setup) => {
            let (dg, field) = euler_operator(setup)?;
            let jac = build_jacobian(&dg, &field.data, config)?;
            let mut report = eigenspectrum(jac.as_ref())?;
            report.fd_epsilon = Some(config.fd_epsilon);
            let eigenmode = if with_eigenmode {
                Some(extract_worst_mode(jac.as_ref(), 1e-3)?)
            } else {
                None
            };
            Ok(SpectrumRun {
                report,
                eigenmode,
                node_coords: None,
            })
        }
    }
}

fn build_jacobian<R: Rhs>(
    rhs: &R,
    baseflow: &[f64],
    config: &ExperimentConfig,
) -> Result<splitstab_core::spectral::Mat<f64>, SpectralError> {
    if config.fd_order4 {
        fd_jacobian_order4(rhs, baseflow, config.fd_epsilon)
    } else {
        fd_jacobian(rhs, baseflow, config.fd_epsilon)
    }
}

/// One record per accepted time step of a Burgers growth run.
#[derive(Debug, Clone, Copy)]
pub struct GrowthRecord {
    pub t: f64,
    /// Largest nodal deviation from the baseflow.
    pub amplitude: f64,
    /// Quadrature norm of the full state.
    pub l2_state: f64,
    /// Quadrature norm of the fluctuation.
    pub l2_fluct: f64,
    /// Discrete total entropy of the state.
    pub entropy: f64,
    /// Reference curve `peak * exp(max_re t)`.
    pub predicted: f64,
    /// Whether the positive-baseflow fluctuation bound holds at this time.
    pub mrfvk_ok: bool,
}

pub struct BurgersGrowthRun {
    pub records: Vec<GrowthRecord>,
    pub max_real_part: f64,
    pub baseflow: BurgersField,
    pub final_state: BurgersField,
    /// Simulation time at which the state became non-finite, if it did.
    pub blow_up: Option<f64>,
    pub node_coords: Vec<f64>,
}

/// Integrate the inhomogeneous Burgers equation (the baseflow residual is
/// subtracted in every Runge-Kutta stage) and record the fluctuation
/// growth after every step.
pub fn run_burgers_growth(config: &ExperimentConfig) -> Result<BurgersGrowthRun, RunError> {
    config.validate()?;
    let setup = match &config.setup {
        Setup::Burgers(s) => s,
        Setup::Euler2d(_) => {
            return Err(ConfigError::Invalid(
                "growth runs apply to the Burgers setup".into(),
            )
            .into())
        }
    };
    let (mesh, ops, baseflow) = burgers_baseflow(setup)?;
    let dg = BurgersDg::new(mesh, ops.clone(), setup.scheme_config()?)
        .map_err(ConfigError::from)?;

    // The spectrum provides both the seed eigenmode and the reference
    // exponential growth rate.
    let jac = build_jacobian(&dg, &baseflow.data, config)?;
    let report = eigenspectrum(jac.as_ref())?;
    let max_real_part = report.max_real_part;

    let mut state = baseflow.data.clone();
    let peak = match setup.perturbation {
        Perturbation::None => 0.0,
        Perturbation::WorstMode { peak } => {
            let mode = extract_worst_mode(jac.as_ref(), peak)?;
            for (u, m) in state.iter_mut().zip(&mode.values) {
                *u += m;
            }
            peak
        }
        Perturbation::Cosine { amplitude } => {
            let coords = baseflow.node_coords(&ops);
            for (u, x) in state.iter_mut().zip(&coords) {
                *u += amplitude * (std::f64::consts::PI * x).cos();
            }
            amplitude
        }
    };

    let inhomogeneous = Inhomogeneous::about(dg.clone(), &baseflow.data)?;
    let controller = TimeStepController::new(config.cfl, mesh.element_size(), setup.degree);
    let integrator = config.integrator.to_core();
    let mut ws = Workspace::new(state.len());

    let bf_min = baseflow.data.iter().cloned().fold(f64::INFINITY, f64::min);
    let bf_max = baseflow
        .data
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    if bf_min <= 0.0 {
        return Err(RunError::NonPositiveBaseflow);
    }

    let fluct_norm = |u: &[f64]| {
        let diff: Vec<f64> = u.iter().zip(&baseflow.data).map(|(a, b)| a - b).collect();
        quadrature_norm(&diff, &mesh, &ops)
    };
    let initial_fluct = fluct_norm(&state);

    let record_of = |t: f64, u: &[f64]| {
        let amplitude = u
            .iter()
            .zip(&baseflow.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0_f64, f64::max);
        let l2_fluct = fluct_norm(u);
        GrowthRecord {
            t,
            amplitude,
            l2_state: quadrature_norm(u, &mesh, &ops),
            l2_fluct,
            entropy: discrete_entropy(u, &mesh, &ops),
            predicted: peak * (max_real_part * t).exp(),
            mrfvk_ok: bf_min * l2_fluct * l2_fluct
                <= bf_max * initial_fluct * initial_fluct * (1.0 + 1e-12) + 1e-300,
        }
    };

    let mut records = vec![record_of(0.0, &state)];
    let mut t = 0.0;
    let mut blow_up = None;
    let mut step_index = 0usize;
    while t < config.t_end {
        let lambda = dg.max_wave_speed(&state);
        if !lambda.is_finite() {
            blow_up = Some(t);
            break;
        }
        let mut dt = controller.dt(lambda);
        if t + dt > config.t_end {
            dt = config.t_end - t;
        }
        integrator.step(&inhomogeneous, &mut state, dt, &mut ws)?;
        t += dt;
        step_index += 1;
        if !state.iter().all(|v| v.is_finite()) {
            blow_up = Some(t);
            break;
        }
        if step_index % config.trace_every == 0 {
            records.push(record_of(t, &state));
        }
    }

    let final_state = BurgersField {
        mesh,
        degree: setup.degree,
        data: state,
    };
    Ok(BurgersGrowthRun {
        records,
        max_real_part,
        node_coords: baseflow.node_coords(&ops),
        baseflow,
        final_state,
        blow_up,
    })
}

/// Verify the positive-baseflow fluctuation bound
/// `min(baseflow) ||u'(t)||^2 <= max(baseflow) ||u'(0)||^2`
/// for every record of a trace, using the discrete quadrature norm.
pub fn check_mrfvk(
    records: &[GrowthRecord],
    baseflow: &BurgersField,
) -> Result<Vec<bool>, RunError> {
    let bf_min = baseflow.data.iter().cloned().fold(f64::INFINITY, f64::min);
    let bf_max = baseflow
        .data
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    if bf_min <= 0.0 {
        return Err(RunError::NonPositiveBaseflow);
    }
    let initial = match records.first() {
        Some(r) => r.l2_fluct,
        None => return Ok(Vec::new()),
    };
    Ok(records
        .iter()
        .map(|r| bf_min * r.l2_fluct * r.l2_fluct <= bf_max * initial * initial * (1.0 + 1e-12) + 1e-300)
        .collect())
}

/// Least-squares slope of `ln(amplitude)` against `t` over records with
/// `t0 <= t <= t1`. Returns `None` when fewer than two usable records lie
/// in the window.
pub fn fit_growth_rate(records: &[GrowthRecord], t0: f64, t1: f64) -> Option<f64> {
    let pts: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.t >= t0 && r.t <= t1 && r.amplitude > 0.0)
        .map(|r| (r.t, r.amplitude.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let den: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    (den > 0.0).then(|| num / den)
}

/// First time at which the locally fitted growth rate drops below
/// `0.5 * alpha_max` after the fluctuation has grown well beyond its seed:
/// the onset of nonlinear saturation.
pub fn saturation_time(records: &[GrowthRecord], alpha_max: f64) -> Option<f64> {
    let initial = records.first()?.amplitude;
    let half_window = 0.75;
    for r in records {
        if r.t < 1.0 || r.amplitude < 10.0 * initial {
            continue;
        }
        if let Some(rate) = fit_growth_rate(records, r.t - half_window, r.t + half_window) {
            if rate < 0.5 * alpha_max {
                return Some(r.t);
            }
        }
    }
    None
}

/// One record per accepted step of an Euler density-wave run.
#[derive(Debug, Clone, Copy)]
pub struct EulerWaveRecord {
    pub t: f64,
    /// L2 density error on the over-integrated quadrature.
    pub l2_density_error: f64,
    pub min_density: f64,
}

pub struct EulerWaveRun {
    pub records: Vec<EulerWaveRecord>,
    pub crash: Option<CrashReport>,
    /// Representation error of the initial condition, the reference level
    /// for long-run error comparisons.
    pub initial_error: f64,
    pub final_error: f64,
    /// Last admissible state (the final state if no crash occurred).
    pub last_state: EulerField2D,
    pub steps: usize,
}

/// Integrate the homogeneous Euler equations from the density-wave initial
/// condition, recording the density error until the final time or the
/// first inadmissible state.
pub fn run_euler_wave(config: &ExperimentConfig) -> Result<EulerWaveRun, RunError> {
    config.validate()?;
    let setup = match &config.setup {
        Setup::Euler2d(s) => s,
        Setup::Burgers(_) => {
            return Err(ConfigError::Invalid(
                "density-wave runs apply to the Euler setup".into(),
            )
            .into())
        }
    };
    let (dg, field) = euler_operator(setup)?;
    let gauge = DensityErrorGauge::new(dg.ops(), setup.degree + 6)
        .map_err(ConfigError::from)?;
    let controller = TimeStepController::new(
        config.cfl,
        dg.mesh().element_size_x().min(dg.mesh().element_size_y()),
        setup.degree,
    );
    let integrator = config.integrator.to_core();

    let mut state = field.data.clone();
    let mut last_good = field.clone();
    let mut ws = Workspace::new(state.len());
    let mut t = 0.0;
    let mut crash = None;
    let mut steps = 0usize;

    let record_of = |t: f64, f: &EulerField2D| EulerWaveRecord {
        t,
        l2_density_error: gauge.error(f, t, setup.amplitude),
        min_density: f.min_density(),
    };
    let initial_error = gauge.error(&field, 0.0, setup.amplitude);
    let mut records = vec![record_of(0.0, &field)];

    while t < config.t_end {
        let lambda = match dg.max_wave_speed(&state) {
            Ok(l) => l,
            Err(detail) => {
                crash = Some(CrashReport { time: t, detail });
                break;
            }
        };
        let mut dt = controller.dt(lambda);
        if t + dt > config.t_end {
            dt = config.t_end - t;
        }
        match integrator.step(&dg, &mut state, dt, &mut ws) {
            Ok(()) => {}
            Err(RhsError::Inadmissible(detail)) => {
                crash = Some(CrashReport { time: t, detail });
                break;
            }
        }
        t += dt;
        steps += 1;
        let snapshot = EulerField2D {
            mesh: *dg.mesh(),
            degree: setup.degree,
            data: state.clone(),
        };
        if let Err(detail) = dg.check_admissible(&snapshot.data) {
            crash = Some(CrashReport { time: t, detail });
            break;
        }
        if steps % config.trace_every == 0 || t >= config.t_end {
            records.push(record_of(t, &snapshot));
        }
        last_good = snapshot;
    }

    let final_error = records.last().map(|r| r.l2_density_error).unwrap_or(0.0);
    Ok(EulerWaveRun {
        records,
        crash,
        initial_error,
        final_error,
        last_state: last_good,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn steady_baseflow_run_stays_put() {
        // Perturbation::None: the inhomogeneous rhs keeps the baseflow
        // steady to machine precision over many steps.
        let mut config = presets::find("burgers-growth-central").unwrap();
        if let Setup::Burgers(b) = &mut config.setup {
            b.perturbation = Perturbation::None;
        }
        config.t_end = 0.5;
        let run = run_burgers_growth(&config).unwrap();
        let last = run.records.last().unwrap();
        assert!(last.amplitude <= 1e-12, "steady drift {}", last.amplitude);
        assert!(run.blow_up.is_none());
    }

    #[test]
    fn growth_rate_fit_recovers_synthetic_exponential() {
        let records: Vec<GrowthRecord> = (0..200)
            .map(|i| {
                let t = 0.05 * i as f64;
                GrowthRecord {
                    t,
                    amplitude: 1e-3 * (0.8 * t).exp(),
                    l2_state: 0.0,
                    l2_fluct: 0.0,
                    entropy: 0.0,
                    predicted: 0.0,
                    mrfvk_ok: true,
                }
            })
            .collect();
        let rate = fit_growth_rate(&records, 1.0, 4.0).unwrap();
        assert!((rate - 0.8).abs() <= 1e-10);
    }

    #[test]
    fn saturation_detector_finds_the_knee() {
        // Exponential growth at rate 1.0 that saturates at amplitude 1.
        let records: Vec<GrowthRecord> = (0..1500)
            .map(|i| {
                let t = 0.01 * i as f64;
                let amp = (1e-3 * t.exp()).min(1.0);
                GrowthRecord {
                    t,
                    amplitude: amp,
                    l2_state: 0.0,
                    l2_fluct: 0.0,
                    entropy: 0.0,
                    predicted: 0.0,
                    mrfvk_ok: true,
                }
            })
            .collect();
        // Saturation at t = ln(1000) ~ 6.9.
        let t_sat = saturation_time(&records, 1.0).unwrap();
        assert!((t_sat - 6.9).abs() <= 1.0, "detected {t_sat}");
    }

    #[test]
    fn mrfvk_rejects_nonpositive_baseflow() {
        let mesh = Mesh1D::periodic_unit(4).unwrap();
        let baseflow = BurgersField {
            mesh,
            degree: 1,
            data: vec![-1.0; 8],
        };
        assert!(matches!(
            check_mrfvk(&[], &baseflow),
            Err(RunError::NonPositiveBaseflow)
        ));
    }

    #[test]
    fn euler_wave_short_run_completes() {
        let mut config = presets::find("euler-wave-central").unwrap();
        // Tiny setup so the test stays fast.
        if let Setup::Euler2d(e) = &mut config.setup {
            e.elements_x = 2;
            e.elements_y = 2;
            e.degree = 2;
            e.amplitude = 0.5;
        }
        config.t_end = 0.01;
        let run = run_euler_wave(&config).unwrap();
        assert!(run.crash.is_none());
        assert!(run.records.len() > 1);
        assert!(run.initial_error > 0.0);
        let t_last = run.records.last().unwrap().t;
        assert!((t_last - 0.01).abs() < 1e-12);
    }
}
