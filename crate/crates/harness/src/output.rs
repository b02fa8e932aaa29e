//! Output writers: CSV data files and JSON metadata. Floating-point values
//! are written with shortest round-trip formatting, so identical runs
//! produce bit-identical files.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::json;

use crate::config::ExperimentConfig;
use crate::runs::{BurgersGrowthRun, EulerWaveRun, SpectrumRun};
use crate::sweep::SweepRow;

pub fn write_spectrum_csv(path: &Path, run: &SpectrumRun) -> std::io::Result<()> {
    let mut out = String::from("re,im\n");
    for z in &run.report.eigenvalues {
        out.push_str(&format!("{},{}\n", z.re, z.im));
    }
    fs::write(path, out)
}

pub fn write_eigenmode_csv(path: &Path, coords: &[f64], values: &[f64]) -> std::io::Result<()> {
    let mut out = String::from("x,value\n");
    for (x, v) in coords.iter().zip(values) {
        out.push_str(&format!("{x},{v}\n"));
    }
    fs::write(path, out)
}

pub fn write_burgers_trace_csv(path: &Path, run: &BurgersGrowthRun) -> std::io::Result<()> {
    let mut out =
        String::from("t,amplitude,l2_state,l2_fluct,entropy,predicted,mrfvk_ok\n");
    for r in &run.records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.t,
            r.amplitude,
            r.l2_state,
            r.l2_fluct,
            r.entropy,
            r.predicted,
            if r.mrfvk_ok { 1 } else { 0 }
        ));
    }
    fs::write(path, out)
}

pub fn write_euler_trace_csv(path: &Path, run: &EulerWaveRun) -> std::io::Result<()> {
    let mut out = String::from("t,l2_density_error,min_density\n");
    for r in &run.records {
        out.push_str(&format!("{},{},{}\n", r.t, r.l2_density_error, r.min_density));
    }
    fs::write(path, out)
}

pub fn write_burgers_field_csv(
    path: &Path,
    coords: &[f64],
    values: &[f64],
) -> std::io::Result<()> {
    let mut out = String::from("x,u\n");
    for (x, u) in coords.iter().zip(values) {
        out.push_str(&format!("{x},{u}\n"));
    }
    fs::write(path, out)
}

pub fn write_euler_field_csv(
    path: &Path,
    field: &splitstab_core::euler::EulerField2D,
    ops: &splitstab_core::sbp::LglOperators,
) -> std::io::Result<()> {
    let mesh = field.mesh;
    let np = ops.n_nodes();
    let mut out = String::from("x,y,rho,rho_v1,rho_v2,rho_e\n");
    for ey in 0..mesh.ky() {
        for ex in 0..mesh.kx() {
            let e = mesh.elem_index(ex, ey);
            for i in 0..np {
                for j in 0..np {
                    let (x, y) = mesh.physical_coord(ex, ey, ops.nodes()[i], ops.nodes()[j]);
                    let k = field.idx(e, i, j);
                    out.push_str(&format!(
                        "{x},{y},{},{},{},{}\n",
                        field.data[k],
                        field.data[k + 1],
                        field.data[k + 2],
                        field.data[k + 3]
                    ));
                }
            }
        }
    }
    fs::write(path, out)
}

pub fn write_sweep_csv(path: &Path, rows: &[SweepRow]) -> std::io::Result<()> {
    let mut out = String::from(
        "run,amplitude,kx,ky,volume,surface,outcome,crash_time,initial_error,final_error,final_time\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},\"{}\",{},{},{},{}\n",
            r.run,
            r.amplitude,
            r.kx,
            r.ky,
            r.volume,
            r.surface,
            r.outcome,
            r.crash_time.map(|t| t.to_string()).unwrap_or_default(),
            r.initial_error,
            r.final_error,
            r.final_time,
        ));
    }
    fs::write(path, out)
}

pub fn spectrum_meta(config: &ExperimentConfig, run: &SpectrumRun) -> serde_json::Value {
    json!({
        "config": config,
        "results": {
            "dof": run.report.dof,
            "fd_epsilon": run.report.fd_epsilon,
            "fd_order4": config.fd_order4,
            "max_real_part": run.report.max_real_part,
            "max_real_part_numerically_zero": run.report.max_real_part_numerically_zero(),
            "worst_eigenvalue": {
                "re": run.report.worst_eigenvalue().re,
                "im": run.report.worst_eigenvalue().im,
            },
            "eigenmode_residual": run.eigenmode.as_ref().map(|m| m.residual),
        },
    })
}

pub fn growth_meta(config: &ExperimentConfig, run: &BurgersGrowthRun) -> serde_json::Value {
    let final_record = run.records.last();
    json!({
        "config": config,
        "results": {
            "max_real_part": run.max_real_part,
            "blow_up_time": run.blow_up,
            "steps_recorded": run.records.len(),
            "final_time": final_record.map(|r| r.t),
            "final_amplitude": final_record.map(|r| r.amplitude),
            "fitted_growth_rate_1_to_4": crate::runs::fit_growth_rate(&run.records, 1.0, 4.0),
            "saturation_time": crate::runs::saturation_time(&run.records, run.max_real_part),
        },
    })
}

pub fn wave_meta(config: &ExperimentConfig, run: &EulerWaveRun) -> serde_json::Value {
    json!({
        "config": config,
        "results": {
            "steps": run.steps,
            "initial_projection_error": run.initial_error,
            "final_error": run.final_error,
            "final_time": run.records.last().map(|r| r.t),
            "crash": run.crash.as_ref().map(|c| json!({
                "time": c.time,
                "element": c.detail.element,
                "node": [c.detail.node.0, c.detail.node.1],
                "variable": c.detail.variable.to_string(),
                "value": c.detail.value,
            })),
        },
    })
}

pub fn write_meta(path: &Path, meta: &serde_json::Value) -> std::io::Result<()> {
    let mut file = fs::File::create(path)?;
    writeln!(file, "{}", serde_json::to_string_pretty(meta).expect("meta serialization"))
}
