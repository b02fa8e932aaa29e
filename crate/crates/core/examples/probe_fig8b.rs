// Scratch probe: wide scan for the N=15/K=3 configuration giving 1.359.
use splitstab_core::burgers::dg::{BurgersDg, BurgersField, BurgersSchemeConfig};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::{LglOperators, ProjectionKind};
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

fn spectrum(bf: &[f64], k: usize, n: usize, alpha: f64, s: BurgersFlux) -> f64 {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let ops = LglOperators::new(n).unwrap();
    let dg = BurgersDg::new(mesh, ops, BurgersSchemeConfig::new(alpha, s).unwrap()).unwrap();
    let jac = fd_jacobian(&dg, bf, 1e-8).unwrap();
    eigenspectrum(jac.as_ref()).unwrap().max_real_part
}

fn main() {
    let pi = std::f64::consts::PI;
    let mesh = Mesh1D::periodic_unit(3).unwrap();
    let ops = LglOperators::new(15).unwrap();

    let make = |offset: f64| {
        let nodal = BurgersField::from_function(mesh, &ops, move |x| {
            (4.0 * pi * x - 0.7).sin() + offset
        });
        let lin = nodal.project_to_degree(&ops, 1, ProjectionKind::L2).unwrap();
        (nodal, lin)
    };
    let (nodal2, lin2) = make(2.0);
    let (nodal0, lin0) = make(0.0);

    let fluxes = [
        ("ec", BurgersFlux::EntropyConserving),
        ("tadmor", BurgersFlux::TadmorPositive),
        ("ed-rus", BurgersFlux::EdRusanov),
        ("es-rus", BurgersFlux::EsRusanov),
        ("central", BurgersFlux::Central),
    ];
    let flows = [
        ("+2 nodal", &nodal2),
        ("+2 lin  ", &lin2),
        ("+0 nodal", &nodal0),
        ("+0 lin  ", &lin0),
    ];
    for (bname, bf) in flows {
        for (fname, flux) in fluxes {
            println!(
                "baseflow {bname} surface {fname:8}: {:+.4}",
                spectrum(&bf.data, 3, 15, 2.0 / 3.0, flux)
            );
        }
    }
}
