// Scratch probe: N=15, K=3, 4pi baseflow under different surface fluxes
// and baseflow representations.
use splitstab_core::burgers::dg::{BurgersDg, BurgersField, BurgersSchemeConfig};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::{LglOperators, ProjectionKind};
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

fn spectrum_of(baseflow: &BurgersField, k: usize, degree: usize, alpha: f64, surface: BurgersFlux) -> f64 {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let ops = LglOperators::new(degree).unwrap();
    let dg = BurgersDg::new(mesh, ops, BurgersSchemeConfig::new(alpha, surface).unwrap()).unwrap();
    let jac = fd_jacobian(&dg, &baseflow.data, 1e-8).unwrap();
    eigenspectrum(jac.as_ref()).unwrap().max_real_part
}

fn main() {
    let pi = std::f64::consts::PI;
    let mesh3 = Mesh1D::periodic_unit(3).unwrap();
    let ops15 = LglOperators::new(15).unwrap();
    let f4 = |x: f64| (4.0 * pi * x - 0.7).sin() + 2.0;
    let nodal = BurgersField::from_function(mesh3, &ops15, f4);
    let l2lin = nodal.project_to_degree(&ops15, 1, ProjectionKind::L2).unwrap();
    let intlin = nodal.project_to_degree(&ops15, 1, ProjectionKind::Interpolation).unwrap();
    // Also intermediate projection degrees.
    let l2_3 = nodal.project_to_degree(&ops15, 3, ProjectionKind::L2).unwrap();
    let l2_7 = nodal.project_to_degree(&ops15, 7, ProjectionKind::L2).unwrap();

    for (name, bf) in [("nodal", &nodal), ("L2->1", &l2lin), ("int->1", &intlin), ("L2->3", &l2_3), ("L2->7", &l2_7)] {
        for (fname, flux) in [("ec", BurgersFlux::EntropyConserving), ("ed-rus", BurgersFlux::EdRusanov), ("central", BurgersFlux::Central)] {
            let re = spectrum_of(bf, 3, 15, 2.0/3.0, flux);
            println!("baseflow {name:7} surface {fname:8}: maxRe = {re:+.6}");
        }
    }
    // Sanity: baseflow ranges
    let minmax = |b: &BurgersField| {
        let mn = b.data.iter().cloned().fold(f64::INFINITY, f64::min);
        let mx = b.data.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        (mn, mx)
    };
    println!("nodal range {:?}, L2->1 range {:?}, int->1 range {:?}", minmax(&nodal), minmax(&l2lin), minmax(&intlin));
}
