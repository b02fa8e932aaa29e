use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use splitstab::config::{ExperimentConfig, RunMode, Setup};
use splitstab::runs::{run_burgers_growth, run_euler_wave, run_spectrum};
use splitstab::{output, presets, sweep};

/// Stability laboratory for split-form and entropy-conserving high-order
/// collocation schemes.
#[derive(Parser)]
#[command(name = "splitstab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Preset name or path to a JSON config.
    config: String,
    /// Output directory (default: runs/<name>).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Jacobian eigenspectrum of the configured scheme.
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
        /// Override the finite-difference step.
        #[arg(long)]
        fd_epsilon: Option<f64>,
        /// Use the fourth-order difference stencil.
        #[arg(long)]
        order4: bool,
        /// Also extract and write the worst eigenmode (always on for
        /// Burgers setups).
        #[arg(long)]
        eigenmode: bool,
    },
    /// Integrate the configured problem and record a trace.
    Simulate {
        #[command(flatten)]
        common: CommonArgs,
        /// Override the final time.
        #[arg(long)]
        t_end: Option<f64>,
        /// Override the CFL number.
        #[arg(long)]
        cfl: Option<f64>,
        /// Integrator: ssprk3 or lsrk54.
        #[arg(long)]
        integrator: Option<String>,
        /// Record every n-th step.
        #[arg(long)]
        trace_every: Option<usize>,
    },
    /// Run a parameter sweep described by a JSON config (or the built-in
    /// `euler-appendix-sweep`).
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        /// Override the final time of every run in the sweep.
        #[arg(long)]
        t_end: Option<f64>,
    },
    /// List the built-in presets.
    ListPresets,
}

/// Exit codes: 0 success, 2 configuration error, 3 physics crash/blow-up.
const EXIT_CONFIG: u8 = 2;
const EXIT_PHYSICS: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            let mut source = err.source();
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::from(EXIT_CONFIG)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::ListPresets => {
            for (config, description) in presets::presets() {
                println!("{:32} {description}", config.name);
            }
            println!(
                "{:32} sweep: amplitudes x grids x schemes error study",
                "euler-appendix-sweep"
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum {
            common,
            fd_epsilon,
            order4,
            eigenmode,
        } => {
            let mut config = load_config(&common.config)?;
            if let Some(eps) = fd_epsilon {
                config.fd_epsilon = eps;
            }
            if order4 {
                config.fd_order4 = true;
            }
            config.mode = RunMode::Spectrum;
            config.validate()?;
            let out_dir = prepare_out_dir(&common.out, &config.name)?;

            let want_mode = eigenmode || matches!(config.setup, Setup::Burgers(_));
            let run = run_spectrum(&config, want_mode)?;
            output::write_spectrum_csv(&out_dir.join("spectrum.csv"), &run)?;
            if let (Some(mode), Some(coords)) = (&run.eigenmode, &run.node_coords) {
                output::write_eigenmode_csv(&out_dir.join("eigenmode.csv"), coords, &mode.values)?;
                if !mode.is_reliable() {
                    eprintln!(
                        "warning: eigenpair residual {:.3e} exceeds 1e-6; the eigenvalue may be defective",
                        mode.residual
                    );
                }
            }
            output::write_meta(&out_dir.join("meta.json"), &output::spectrum_meta(&config, &run))?;
            println!(
                "{}: dof {}, max Re {:.6e}{}  ->  {}",
                config.name,
                run.report.dof,
                run.report.max_real_part,
                if run.report.max_real_part_numerically_zero() {
                    " (numerically zero)"
                } else {
                    ""
                },
                out_dir.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate {
            common,
            t_end,
            cfl,
            integrator,
            trace_every,
        } => {
            let mut config = load_config(&common.config)?;
            if let Some(t) = t_end {
                config.t_end = t;
            }
            if let Some(c) = cfl {
                config.cfl = c;
            }
            if let Some(name) = integrator {
                config.integrator = match name.as_str() {
                    "ssprk3" => splitstab::config::IntegratorChoice::Ssprk3,
                    "lsrk54" => splitstab::config::IntegratorChoice::Lsrk54,
                    other => {
                        return Err(format!("unknown integrator '{other}'").into());
                    }
                };
            }
            if let Some(n) = trace_every {
                config.trace_every = n;
            }
            config.mode = RunMode::Simulate;
            config.validate()?;
            let out_dir = prepare_out_dir(&common.out, &config.name)?;

            match &config.setup {
                Setup::Burgers(_) => {
                    let run = run_burgers_growth(&config)?;
                    output::write_burgers_trace_csv(&out_dir.join("trace.csv"), &run)?;
                    output::write_burgers_field_csv(
                        &out_dir.join("field_final.csv"),
                        &run.node_coords,
                        &run.final_state.data,
                    )?;
                    output::write_meta(&out_dir.join("meta.json"), &output::growth_meta(&config, &run))?;
                    match run.blow_up {
                        Some(t) => {
                            println!(
                                "{}: blow-up at t = {t:.4}  ->  {}",
                                config.name,
                                out_dir.display()
                            );
                            Ok(ExitCode::from(EXIT_PHYSICS))
                        }
                        None => {
                            let last = run.records.last().expect("at least the initial record");
                            println!(
                                "{}: reached t = {:.4}, fluctuation amplitude {:.3e}  ->  {}",
                                config.name,
                                last.t,
                                last.amplitude,
                                out_dir.display()
                            );
                            Ok(ExitCode::SUCCESS)
                        }
                    }
                }
                Setup::Euler2d(_) => {
                    let run = run_euler_wave(&config)?;
                    output::write_euler_trace_csv(&out_dir.join("trace.csv"), &run)?;
                    let ops = splitstab_core::sbp::LglOperators::new(run.last_state.degree)?;
                    output::write_euler_field_csv(&out_dir.join("field_final.csv"), &run.last_state, &ops)?;
                    output::write_meta(&out_dir.join("meta.json"), &output::wave_meta(&config, &run))?;
                    match &run.crash {
                        Some(crash) => {
                            println!(
                                "{}: crash at t = {:.4} ({})  ->  {}",
                                config.name,
                                crash.time,
                                crash.detail,
                                out_dir.display()
                            );
                            Ok(ExitCode::from(EXIT_PHYSICS))
                        }
                        None => {
                            println!(
                                "{}: completed t = {:.4}, L2 density error {:.4e}  ->  {}",
                                config.name,
                                run.records.last().map(|r| r.t).unwrap_or(0.0),
                                run.final_error,
                                out_dir.display()
                            );
                            Ok(ExitCode::SUCCESS)
                        }
                    }
                }
            }
        }
        Command::Sweep { common, t_end } => {
            let mut sweep_config = load_sweep_config(&common.config)?;
            if let Some(t) = t_end {
                sweep_config.t_end = t;
            }
            let out_dir = prepare_out_dir(&common.out, &sweep_config.name)?;
            let rows = sweep::run_sweep(&sweep_config, |run_config, result| {
                let sub_dir = out_dir.join(&run_config.name);
                if std::fs::create_dir_all(&sub_dir).is_err() {
                    return;
                }
                if let Ok(run) = result {
                    let _ = output::write_euler_trace_csv(&sub_dir.join("trace.csv"), run);
                    let _ = output::write_meta(
                        &sub_dir.join("meta.json"),
                        &output::wave_meta(run_config, run),
                    );
                }
                match result {
                    Ok(run) => match &run.crash {
                        Some(c) => println!("{}: crash at t = {:.4}", run_config.name, c.time),
                        None => println!(
                            "{}: completed, final error {:.4e}",
                            run_config.name, run.final_error
                        ),
                    },
                    Err(err) => println!("{}: error: {err}", run_config.name),
                }
            });
            output::write_sweep_csv(&out_dir.join("sweep.csv"), &rows)?;
            println!(
                "sweep {}: {} runs  ->  {}",
                sweep_config.name,
                rows.len(),
                out_dir.display()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_config(arg: &str) -> Result<ExperimentConfig, Box<dyn std::error::Error>> {
    if let Some(preset) = presets::find(arg) {
        return Ok(preset);
    }
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        return Ok(ExperimentConfig::from_json(&text)?);
    }
    Err(Box::new(splitstab::ConfigError::UnknownPreset(
        arg.to_string(),
    )))
}

fn load_sweep_config(arg: &str) -> Result<sweep::SweepConfig, Box<dyn std::error::Error>> {
    if arg == "euler-appendix-sweep" {
        return Ok(sweep::appendix_sweep());
    }
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        return Ok(serde_json::from_str(&text)?);
    }
    Err(Box::new(splitstab::ConfigError::UnknownPreset(
        arg.to_string(),
    )))
}

fn prepare_out_dir(out: &Option<PathBuf>, name: &str) -> std::io::Result<PathBuf> {
    let dir = out
        .clone()
        .unwrap_or_else(|| PathBuf::from("runs").join(name));
    std::fs::create_dir_all(&dir)?;
    Ok(dir)
}
