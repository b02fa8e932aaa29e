// Scratch probe: FD-step sensitivity of the Euler spectra.
use splitstab_core::euler::dg2d::{initialize_density_wave, EulerDg2d};
use splitstab_core::euler::flux::EulerFlux;
use splitstab_core::mesh::Mesh2D;
use splitstab_core::sbp::LglOperators;
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

fn main() {
    let mesh = Mesh2D::new(4, 4).unwrap();
    let ops = LglOperators::new(5).unwrap();
    let field = initialize_density_wave(mesh, &ops, 0.98).unwrap();
    for eps in [1e-8, 1e-7, 1e-6, 1e-5, 1e-4] {
        let central = EulerDg2d::new(mesh, ops.clone(), EulerFlux::Central, EulerFlux::Central);
        let jac = fd_jacobian(&central, &field.data, eps).unwrap();
        let r1 = eigenspectrum(jac.as_ref()).unwrap().max_real_part;
        let ec = EulerDg2d::new(mesh, ops.clone(), EulerFlux::ChandrashekarEc, EulerFlux::ChandrashekarEc);
        let jac = fd_jacobian(&ec, &field.data, eps).unwrap();
        let r2 = eigenspectrum(jac.as_ref()).unwrap().max_real_part;
        println!("eps {eps:.0e}: central {r1:+.3e}   ec/ec {r2:+.6}");
    }
}
