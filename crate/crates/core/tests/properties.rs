//! Cross-module properties: time integration interacting with the
//! semidiscrete operators.

use splitstab_core::burgers::dg::{
    discrete_entropy, BurgersDg, BurgersField, BurgersSchemeConfig, Inhomogeneous,
};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::{LglOperators, ProjectionKind};
use splitstab_core::spectral::{extract_worst_mode, fd_jacobian};
use splitstab_core::timeint::{step_ssprk3, Workspace};

fn ec_scheme(k: usize, degree: usize) -> BurgersDg {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let ops = LglOperators::new(degree).unwrap();
    let config = BurgersSchemeConfig::new(2.0 / 3.0, BurgersFlux::EntropyConserving).unwrap();
    BurgersDg::new(mesh, ops, config).unwrap()
}

fn reduced_baseflow(mesh: Mesh1D, ops: &LglOperators) -> BurgersField {
    BurgersField::from_function_reduced(mesh, ops, 1, ProjectionKind::GaussInterpolation, |x| {
        (std::f64::consts::PI * x - 0.7).sin() + 2.0
    })
    .unwrap()
}

/// The entropy drift of the entropy-conserving semidiscretization comes
/// purely from the third-order time integrator: halving the step cuts the
/// drift over a fixed horizon by about eight.
#[test]
fn entropy_drift_scales_with_dt_cubed() {
    let dg = ec_scheme(8, 3);
    let mesh = *dg.mesh();
    let ops = dg.ops().clone();
    let initial = BurgersField::from_function(mesh, &ops, |x| {
        (std::f64::consts::PI * x).sin() + 2.0
    });

    let drift = |dt: f64| -> f64 {
        let mut u = initial.data.clone();
        let mut ws = Workspace::new(u.len());
        let e0 = discrete_entropy(&u, &mesh, &ops);
        let steps = (0.5 / dt).round() as usize;
        for _ in 0..steps {
            step_ssprk3(&dg, &mut u, dt, &mut ws).unwrap();
        }
        (discrete_entropy(&u, &mesh, &ops) - e0).abs()
    };

    let coarse = drift(2e-3);
    let fine = drift(1e-3);
    let ratio = coarse / fine;
    assert!(
        (ratio - 8.0).abs() <= 0.2 * 8.0,
        "entropy drift ratio {ratio}, expected about 8"
    );
}

/// The baseflow is an exact steady state of the inhomogeneous operator;
/// ten thousand steps leave it untouched.
#[test]
fn steady_state_survives_long_integration() {
    let dg = ec_scheme(10, 3);
    let mesh = *dg.mesh();
    let ops = dg.ops().clone();
    let baseflow = reduced_baseflow(mesh, &ops);
    let inhomogeneous = Inhomogeneous::about(dg, &baseflow.data).unwrap();

    let mut u = baseflow.data.clone();
    let mut ws = Workspace::new(u.len());
    for _ in 0..10_000 {
        step_ssprk3(&inhomogeneous, &mut u, 8e-4, &mut ws).unwrap();
    }
    let drift = u
        .iter()
        .zip(&baseflow.data)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0_f64, f64::max);
    assert!(drift <= 1e-12, "steady-state drift {drift}");
}

/// The most unstable eigenmode of the entropy-conserving scheme lives
/// where the baseflow slope is negative.
#[test]
fn worst_mode_localizes_on_negative_slopes() {
    let dg = ec_scheme(10, 3);
    let mesh = *dg.mesh();
    let ops = dg.ops().clone();
    let baseflow = reduced_baseflow(mesh, &ops);
    let jac = fd_jacobian(&dg, &baseflow.data, 1e-8).unwrap();
    let mode = extract_worst_mode(jac.as_ref(), 1e-3).unwrap();
    assert!(mode.is_reliable());

    let np = ops.n_nodes();
    let mut negative_mass = 0.0;
    let mut total_mass = 0.0;
    for e in 0..mesh.num_elements() {
        // Per-element baseflow slope (the reduced baseflow is linear).
        let slope = baseflow.data[e * np + np - 1] - baseflow.data[e * np];
        let mass: f64 = mode.values[e * np..(e + 1) * np]
            .iter()
            .map(|v| v * v)
            .sum();
        total_mass += mass;
        if slope < 0.0 {
            negative_mass += mass;
        }
    }
    assert!(
        negative_mass / total_mass > 0.7,
        "only {:.2}% of the mode lies on negative slopes",
        100.0 * negative_mass / total_mass
    );
}
