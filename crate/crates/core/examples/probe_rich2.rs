use splitstab_core::euler::dg2d::{initialize_density_wave, EulerDg2d};
use splitstab_core::euler::flux::EulerFlux;
use splitstab_core::mesh::Mesh2D;
use splitstab_core::sbp::LglOperators;
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

fn main() {
    let mesh = Mesh2D::new(4, 4).unwrap();
    let ops = LglOperators::new(5).unwrap();
    let field = initialize_density_wave(mesh, &ops, 0.98).unwrap();
    for eps in [2e-5, 5e-5, 1e-4, 2e-4] {
        let central = EulerDg2d::new(mesh, ops.clone(), EulerFlux::Central, EulerFlux::Central);
        let j1 = fd_jacobian(&central, &field.data, eps).unwrap();
        let j2 = fd_jacobian(&central, &field.data, 2.0 * eps).unwrap();
        let n = j1.nrows();
        let jr = faer::Mat::from_fn(n, n, |i, j| (4.0 * j1[(i, j)] - j2[(i, j)]) / 3.0);
        let r = eigenspectrum(jr.as_ref()).unwrap().max_real_part;
        println!("richardson eps {eps:.0e}: central {r:+.3e}");
    }
}
