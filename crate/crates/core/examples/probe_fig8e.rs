// Scratch probe: reference-coordinate frequency reading for fig8-right.
use splitstab_core::burgers::dg::{BurgersDg, BurgersField, BurgersSchemeConfig};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::LglOperators;
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
    let ops = LglOperators::new(15).unwrap();
    let np = 16;
    let ed = BurgersFlux::EdRusanov;
    let s = 1.0 / 3.0_f64.sqrt();

    // Reference-coordinate sawtooth: same linear in every element.
    let fm = (4.0 * pi * (-s) - 0.7).sin() + 2.0;
    let fp = (4.0 * pi * s - 0.7).sin() + 2.0;
    let mut saw = BurgersField::zeros(Mesh1D::periodic_unit(3).unwrap(), 15);
    for e in 0..3 {
        for (i, &xi) in ops.nodes().iter().enumerate() {
            saw.data[e * np + i] = 0.5 * (fm + fp) + (fp - fm) / (2.0 * s) * xi;
        }
    }
    println!("ref-coord gauss sawtooth: {:+.5}", spectrum(&saw.data, 3, 15, 2.0/3.0, ed));

    // Reference-coordinate nodal: sin(4 pi xi - 0.7) + 2 at the nodes.
    let mut nodal = BurgersField::zeros(Mesh1D::periodic_unit(3).unwrap(), 15);
    for e in 0..3 {
        for (i, &xi) in ops.nodes().iter().enumerate() {
            nodal.data[e * np + i] = (4.0 * pi * xi - 0.7).sin() + 2.0;
        }
    }
    println!("ref-coord nodal:          {:+.5}", spectrum(&nodal.data, 3, 15, 2.0/3.0, ed));
}
