// Scratch probe: Euler spectra (paper: 3.783e-7, 31.003, 3.3351, 48.318)
// and crash times (0.5533, 0.6595, 0.0845).
use splitstab_core::euler::dg2d::{initialize_density_wave, EulerDg2d};
use splitstab_core::euler::flux::EulerFlux;
use splitstab_core::mesh::Mesh2D;
use splitstab_core::sbp::LglOperators;
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};
use splitstab_core::timeint::{step_lsrk54, TimeStepController, Workspace};
use splitstab_core::Rhs;

fn main() {
    let mesh = Mesh2D::new(4, 4).unwrap();
    let ops = LglOperators::new(5).unwrap();
    let field = initialize_density_wave(mesh, &ops, 0.98).unwrap();

    let configs = [
        ("central/central", EulerFlux::Central, EulerFlux::Central),
        ("ec/ec          ", EulerFlux::ChandrashekarEc, EulerFlux::ChandrashekarEc),
        ("ec/rusanov     ", EulerFlux::ChandrashekarEc, EulerFlux::Rusanov),
        ("kg/rusanov     ", EulerFlux::KennedyGruber, EulerFlux::Rusanov),
    ];

    // Spectra.
    for (name, vol, surf) in configs {
        let dg = EulerDg2d::new(mesh, ops.clone(), vol, surf);
        let t0 = std::time::Instant::now();
        let jac = fd_jacobian(&dg, &field.data, 1e-8).unwrap();
        let t_jac = t0.elapsed();
        let t0 = std::time::Instant::now();
        let report = eigenspectrum(jac.as_ref()).unwrap();
        println!(
            "{name}: maxRe = {:+.6}  (jac {:.1?}, eig {:.1?})",
            report.max_real_part,
            t_jac,
            t0.elapsed()
        );
    }

    // Crash times with LSRK54 at CFL 0.05.
    for (name, vol, surf) in [configs[1], configs[2], configs[3]] {
        let dg = EulerDg2d::new(mesh, ops.clone(), vol, surf);
        let ctrl = TimeStepController::new(0.05, mesh.element_size_x(), 5);
        let mut u = field.data.clone();
        let mut ws = Workspace::new(dg.dim());
        let mut t = 0.0;
        let crash;
        loop {
            let lambda = match dg.max_wave_speed(&u) {
                Ok(l) => l,
                Err(_) => { crash = Some(t); break; }
            };
            let dt = ctrl.dt(lambda);
            if let Err(_) = step_lsrk54(&dg, &mut u, dt, &mut ws) {
                crash = Some(t);
                break;
            }
            t += dt;
            if t >= 1.0 { crash = None; break; }
        }
        match crash {
            Some(tc) => println!("{name}: crash at t = {tc:.4}"),
            None => println!("{name}: no crash before t = 1"),
        }
    }
}
