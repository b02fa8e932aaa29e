// Scratch probe: baseflow = interpolation at the degree-1 Gauss points.
use splitstab_core::burgers::dg::{BurgersDg, BurgersField, BurgersSchemeConfig};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::LglOperators;
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

fn gauss_lin_baseflow(k: usize, ops: &LglOperators, f: impl Fn(f64) -> f64) -> BurgersField {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let s = 1.0 / 3.0_f64.sqrt();
    let np = ops.n_nodes();
    let mut field = BurgersField::zeros(mesh, ops.degree());
    for e in 0..k {
        let fm = f(mesh.physical_coord(e, -s));
        let fp = f(mesh.physical_coord(e, s));
        // Linear through (-s, fm), (s, fp).
        let c0 = 0.5 * (fm + fp);
        let c1 = (fp - fm) / (2.0 * s);
        for (i, &xi) in ops.nodes().iter().enumerate() {
            field.data[e * np + i] = c0 + c1 * xi;
        }
    }
    field
}

fn spectrum(bf: &[f64], k: usize, n: usize, alpha: f64, s: BurgersFlux) -> f64 {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let ops = LglOperators::new(n).unwrap();
    let dg = BurgersDg::new(mesh, ops, BurgersSchemeConfig::new(alpha, s).unwrap()).unwrap();
    let jac = fd_jacobian(&dg, bf, 1e-8).unwrap();
    eigenspectrum(jac.as_ref()).unwrap().max_real_part
}

fn main() {
    let pi = std::f64::consts::PI;
    let ops3 = LglOperators::new(3).unwrap();
    let f1 = |x: f64| (pi * x - 0.7).sin() + 2.0;
    let ec = BurgersFlux::EntropyConserving;
    let central = BurgersFlux::Central;
    let tadmor = BurgersFlux::TadmorPositive;
    let ed = BurgersFlux::EdRusanov;

    let bf10 = gauss_lin_baseflow(10, &ops3, f1);
    println!("fig2 left  : {:+.6e} (paper  8.8e-8)", spectrum(&bf10.data, 10, 3, 1.0, central));
    println!("fig2 right : {:+.6} (paper 1.0307)", spectrum(&bf10.data, 10, 3, 2.0/3.0, ec));
    println!("fig4 left  : {:+.6} (paper 0.1006)", spectrum(&bf10.data, 10, 3, 1.0, ec));
    println!("fig4 right : {:+.6} (paper 0.9300)", spectrum(&bf10.data, 10, 3, 2.0/3.0, central));
    println!("fig5 left  : {:+.6e} (paper -9.01e-8)", spectrum(&bf10.data, 10, 3, 1.0, tadmor));
    println!("fig5 right : {:+.6} (paper 0.9298)", spectrum(&bf10.data, 10, 3, 2.0/3.0, tadmor));
    let bf20 = gauss_lin_baseflow(20, &ops3, f1);
    println!("fig7 20    : {:+.6} (paper 1.021)", spectrum(&bf20.data, 20, 3, 2.0/3.0, ec));
    let bf40 = gauss_lin_baseflow(40, &ops3, f1);
    println!("fig7 40    : {:+.6} (paper 1.025)", spectrum(&bf40.data, 40, 3, 2.0/3.0, ec));
    println!("fig8 left  : {:+.6e} (paper -1.06e-7)", spectrum(&bf10.data, 10, 3, 2.0/3.0, ed));
    let ops15 = LglOperators::new(15).unwrap();
    let f4 = |x: f64| (4.0 * pi * x - 0.7).sin() + 2.0;
    let bf3 = gauss_lin_baseflow(3, &ops15, f4);
    println!("fig8 right : {:+.6} (paper 1.359)", spectrum(&bf3.data, 3, 15, 2.0/3.0, ed));
}
