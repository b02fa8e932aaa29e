// Scratch probe: phase scan of the baseflow against the paper triple.
use splitstab_core::burgers::dg::{BurgersDg, BurgersField, BurgersSchemeConfig};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::{LglOperators, ProjectionKind};
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

fn spectrum(bf: &[f64], alpha: f64, s: BurgersFlux) -> f64 {
    let mesh = Mesh1D::periodic_unit(10).unwrap();
    let ops = LglOperators::new(3).unwrap();
    let dg = BurgersDg::new(mesh, ops, BurgersSchemeConfig::new(alpha, s).unwrap()).unwrap();
    let jac = fd_jacobian(&dg, bf, 1e-8).unwrap();
    eigenspectrum(jac.as_ref()).unwrap().max_real_part
}

fn main() {
    let pi = std::f64::consts::PI;
    let mesh = Mesh1D::periodic_unit(10).unwrap();
    let ops = LglOperators::new(3).unwrap();
    let ec = BurgersFlux::EntropyConserving;
    let central = BurgersFlux::Central;
    println!("phase   fig4L(0.1006) fig2R(1.0307) fig4R(0.9300)");
    for k in 0..28 {
        let phi = 0.05 * k as f64;
        let bf = BurgersField::from_function(mesh, &ops, move |x| (pi * x - phi).sin() + 2.0)
            .project_to_degree(&ops, 1, ProjectionKind::L2)
            .unwrap();
        println!(
            "{phi:5.2}  {:.5}      {:.5}      {:.5}",
            spectrum(&bf.data, 1.0, ec),
            spectrum(&bf.data, 2.0 / 3.0, ec),
            spectrum(&bf.data, 2.0 / 3.0, central),
        );
    }
}
