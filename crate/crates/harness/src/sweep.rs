//! Parameter sweeps over the density-wave experiment: amplitude x grid x
//! scheme, with per-run outputs and an aggregate summary.

use serde::{Deserialize, Serialize};

use crate::config::{EulerSetup, ExperimentConfig, IntegratorChoice, RunMode, Setup};
use crate::runs::{run_euler_wave, RunError};

/// Scheme pair referenced by the sweep grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemePair {
    pub volume: String,
    pub surface: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub name: String,
    pub amplitudes: Vec<f64>,
    /// Cartesian element counts `[kx, ky]`.
    pub grids: Vec<[usize; 2]>,
    pub schemes: Vec<SchemePair>,
    #[serde(default = "default_degree")]
    pub degree: usize,
    #[serde(default = "default_cfl")]
    pub cfl: f64,
    #[serde(default = "default_t_end")]
    pub t_end: f64,
    #[serde(default = "default_trace_every")]
    pub trace_every: usize,
}

fn default_degree() -> usize {
    5
}
fn default_cfl() -> f64 {
    0.05
}
fn default_t_end() -> f64 {
    5.0
}
fn default_trace_every() -> usize {
    10
}

/// The five scheme pairs compared in the reference error study.
pub fn default_schemes() -> Vec<SchemePair> {
    [
        ("euler-central", "euler-central"),
        ("euler-central", "euler-rusanov"),
        ("euler-ec-chandrashekar", "euler-ec-chandrashekar"),
        ("euler-ec-chandrashekar", "euler-rusanov"),
        ("euler-kg", "euler-rusanov"),
    ]
    .into_iter()
    .map(|(v, s)| SchemePair {
        volume: v.to_string(),
        surface: s.to_string(),
    })
    .collect()
}

/// Built-in sweep mirroring the appendix error study (amplitudes 0.98,
/// 0.75, 0.5 on 4x4 and 8x8 grids over five schemes). `t_end` defaults to
/// 5; raise it for the long version.
pub fn appendix_sweep() -> SweepConfig {
    SweepConfig {
        name: "euler-appendix-sweep".to_string(),
        amplitudes: vec![0.98, 0.75, 0.5],
        grids: vec![[4, 4], [8, 8]],
        schemes: default_schemes(),
        degree: 5,
        cfl: 0.05,
        t_end: 5.0,
        trace_every: 10,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub run: String,
    pub amplitude: f64,
    pub kx: usize,
    pub ky: usize,
    pub volume: String,
    pub surface: String,
    pub outcome: String,
    pub crash_time: Option<f64>,
    pub initial_error: f64,
    pub final_error: f64,
    pub final_time: f64,
}

/// Run every grid point; individual failures are recorded and the sweep
/// continues.
pub fn run_sweep<F>(config: &SweepConfig, mut per_run: F) -> Vec<SweepRow>
where
    F: FnMut(&ExperimentConfig, &Result<crate::runs::EulerWaveRun, RunError>),
{
    let mut rows = Vec::new();
    for &amplitude in &config.amplitudes {
        for &[kx, ky] in &config.grids {
            for scheme in &config.schemes {
                let name = format!(
                    "{}-a{:03}-{}x{}-{}-{}",
                    config.name,
                    (amplitude * 100.0).round() as u32,
                    kx,
                    ky,
                    scheme.volume.trim_start_matches("euler-"),
                    scheme.surface.trim_start_matches("euler-"),
                );
                let run_config = ExperimentConfig {
                    name: name.clone(),
                    mode: RunMode::Simulate,
                    setup: Setup::Euler2d(EulerSetup {
                        elements_x: kx,
                        elements_y: ky,
                        degree: config.degree,
                        volume_flux: scheme.volume.clone(),
                        surface_flux: scheme.surface.clone(),
                        amplitude,
                    }),
                    cfl: config.cfl,
                    t_end: config.t_end,
                    integrator: IntegratorChoice::Lsrk54,
                    fd_epsilon: splitstab_core::spectral::DEFAULT_FD_EPSILON,
                    fd_order4: false,
                    trace_every: config.trace_every,
                    seed: 0,
                };
                let result = run_euler_wave(&run_config);
                per_run(&run_config, &result);
                let row = match &result {
                    Ok(run) => SweepRow {
                        run: name,
                        amplitude,
                        kx,
                        ky,
                        volume: scheme.volume.clone(),
                        surface: scheme.surface.clone(),
                        outcome: match &run.crash {
                            Some(c) => format!("crash: {}", c.detail),
                            None => "completed".to_string(),
                        },
                        crash_time: run.crash.as_ref().map(|c| c.time),
                        initial_error: run.initial_error,
                        final_error: run.final_error,
                        final_time: run.records.last().map(|r| r.t).unwrap_or(0.0),
                    },
                    Err(err) => SweepRow {
                        run: name,
                        amplitude,
                        kx,
                        ky,
                        volume: scheme.volume.clone(),
                        surface: scheme.surface.clone(),
                        outcome: format!("error: {err}"),
                        crash_time: None,
                        initial_error: 0.0,
                        final_error: 0.0,
                        final_time: 0.0,
                    },
                };
                rows.push(row);
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_produces_empty_result() {
        let config = SweepConfig {
            name: "empty".into(),
            amplitudes: vec![],
            grids: vec![[4, 4]],
            schemes: default_schemes(),
            degree: 5,
            cfl: 0.05,
            t_end: 5.0,
            trace_every: 1,
        };
        let rows = run_sweep(&config, |_, _| {});
        assert!(rows.is_empty());
    }

    #[test]
    fn tiny_sweep_records_every_combination() {
        let config = SweepConfig {
            name: "tiny".into(),
            amplitudes: vec![0.5],
            grids: vec![[2, 2]],
            schemes: vec![
                SchemePair {
                    volume: "euler-central".into(),
                    surface: "euler-central".into(),
                },
                SchemePair {
                    volume: "bogus".into(),
                    surface: "euler-central".into(),
                },
            ],
            degree: 2,
            cfl: 0.05,
            t_end: 0.01,
            trace_every: 1,
        };
        let rows = run_sweep(&config, |_, _| {});
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].outcome, "completed");
        assert!(rows[1].outcome.starts_with("error"), "{}", rows[1].outcome);
    }

    #[test]
    fn appendix_sweep_has_thirty_runs() {
        let config = appendix_sweep();
        let combos = config.amplitudes.len() * config.grids.len() * config.schemes.len();
        assert_eq!(combos, 30);
    }
}
