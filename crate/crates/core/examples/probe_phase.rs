// Scratch probe: baseflow phase conventions and fig8-right structure.
use splitstab_core::burgers::dg::{BurgersDg, BurgersField, BurgersSchemeConfig};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::{LglOperators, ProjectionKind};
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

fn spectrum(bf: &BurgersField, k: usize, n: usize, alpha: f64, s: BurgersFlux) -> f64 {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let ops = LglOperators::new(n).unwrap();
    let dg = BurgersDg::new(mesh, ops, BurgersSchemeConfig::new(alpha, s).unwrap()).unwrap();
    let jac = fd_jacobian(&dg, &bf.data, 1e-8).unwrap();
    eigenspectrum(jac.as_ref()).unwrap().max_real_part
}

fn proj(k: usize, n: usize, f: impl Fn(f64) -> f64) -> BurgersField {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let ops = LglOperators::new(n).unwrap();
    BurgersField::from_function(mesh, &ops, f)
        .project_to_degree(&ops, 1, ProjectionKind::L2)
        .unwrap()
}

fn main() {
    let pi = std::f64::consts::PI;
    let ec = BurgersFlux::EntropyConserving;
    let central = BurgersFlux::Central;
    let ed = BurgersFlux::EdRusanov;

    // Phase conventions for the baseflow.
    let variants: [(&str, Box<dyn Fn(f64) -> f64>); 3] = [
        ("sin(pi x - 0.7)+2   ", Box::new(move |x: f64| (pi * x - 0.7).sin() + 2.0)),
        ("sin(pi (x-0.7))+2   ", Box::new(move |x: f64| (pi * (x - 0.7)).sin() + 2.0)),
        ("sin(pi x + 0.7)+2   ", Box::new(move |x: f64| (pi * x + 0.7).sin() + 2.0)),
    ];
    for (name, f) in &variants {
        let bf = proj(10, 3, f);
        println!(
            "{name}: fig4-left {:.5} (0.1006), fig2-right {:.5} (1.0307), fig4-right {:.5} (0.9300)",
            spectrum(&bf, 10, 3, 1.0, ec),
            spectrum(&bf, 10, 3, 2.0 / 3.0, ec),
            spectrum(&bf, 10, 3, 2.0 / 3.0, central),
        );
    }

    // fig8-right: nodal baseflow, element-count scan, and top real parts.
    for k in [3usize, 4, 5] {
        let mesh = Mesh1D::periodic_unit(k).unwrap();
        let ops = LglOperators::new(15).unwrap();
        let nodal = BurgersField::from_function(mesh, &ops, |x| (4.0 * pi * x - 0.7).sin() + 2.0);
        println!("fig8-right nodal K={k}: ed-rus {:+.5}", spectrum(&nodal, k, 15, 2.0/3.0, ed));
    }
    // Top five real parts of the K=3 case.
    let mesh = Mesh1D::periodic_unit(3).unwrap();
    let ops = LglOperators::new(15).unwrap();
    let nodal = BurgersField::from_function(mesh, &ops, |x| (4.0 * pi * x - 0.7).sin() + 2.0);
    let dg = BurgersDg::new(mesh, ops, BurgersSchemeConfig::new(2.0/3.0, ed).unwrap()).unwrap();
    let jac = fd_jacobian(&dg, &nodal.data, 1e-8).unwrap();
    let mut rep = eigenspectrum(jac.as_ref()).unwrap().eigenvalues;
    rep.sort_by(|a, b| b.re.total_cmp(&a.re));
    println!("top real parts K=3 nodal+ed-rus: {:?}", rep.iter().take(5).map(|z| z.re).collect::<Vec<_>>());
}
