// Scratch probe for the headline spectrum values (deleted before release).
use splitstab_core::burgers::dg::{BurgersDg, BurgersField, BurgersSchemeConfig};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::{LglOperators, ProjectionKind};
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

fn max_re(k: usize, degree: usize, alpha: f64, surface: BurgersFlux, freq: f64) -> f64 {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let ops = LglOperators::new(degree).unwrap();
    let baseflow = BurgersField::from_function(mesh, &ops, |x| {
        (freq * std::f64::consts::PI * x - 0.7).sin() + 2.0
    })
    .project_to_degree(&ops, 1, ProjectionKind::L2)
    .unwrap();
    let dg = BurgersDg::new(mesh, ops, BurgersSchemeConfig::new(alpha, surface).unwrap()).unwrap();
    let jac = fd_jacobian(&dg, &baseflow.data, 1e-8).unwrap();
    eigenspectrum(jac.as_ref()).unwrap().max_real_part
}

fn main() {
    let ec = BurgersFlux::EntropyConserving;
    let central = BurgersFlux::Central;
    let tadmor = BurgersFlux::TadmorPositive;
    let ed = BurgersFlux::EdRusanov;
    println!("fig2 left  (a=1,   central, K=10): {:+.6e} (paper 8.8e-8)", max_re(10, 3, 1.0, central, 1.0));
    println!("fig2 right (a=2/3, ec,      K=10): {:+.6} (paper 1.0307)", max_re(10, 3, 2.0/3.0, ec, 1.0));
    println!("fig4 left  (a=1,   ec,      K=10): {:+.6} (paper 0.1006)", max_re(10, 3, 1.0, ec, 1.0));
    println!("fig4 right (a=2/3, central, K=10): {:+.6} (paper 0.9300)", max_re(10, 3, 2.0/3.0, central, 1.0));
    println!("fig5 left  (a=1,   tadmor,  K=10): {:+.6e} (paper -9.01e-8)", max_re(10, 3, 1.0, tadmor, 1.0));
    println!("fig5 right (a=2/3, tadmor,  K=10): {:+.6} (paper 0.9298)", max_re(10, 3, 2.0/3.0, tadmor, 1.0));
    println!("fig7 20    (a=2/3, ec,      K=20): {:+.6} (paper 1.021)", max_re(20, 3, 2.0/3.0, ec, 1.0));
    println!("fig7 40    (a=2/3, ec,      K=40): {:+.6} (paper 1.025)", max_re(40, 3, 2.0/3.0, ec, 1.0));
    println!("fig8 left  (a=2/3, ed-rus,  K=10): {:+.6e} (paper -1.06e-7)", max_re(10, 3, 2.0/3.0, ed, 1.0));
    println!("fig8 right (a=2/3, ed-rus, K=3, N=15, 4pi): {:+.6} (paper 1.359)", max_re(3, 15, 2.0/3.0, ed, 4.0));
}
