// Scratch probe: fig8-right with baseflows built on auxiliary grids.
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

/// Piecewise-linear reduction of f on an auxiliary uniform grid of
/// `k_aux` cells (Gauss-point interpolation per cell), then sampled at
/// the working nodes of the K=3, N=15 grid.
fn aux_grid_baseflow(
    k_aux: usize,
    k: usize,
    ops: &LglOperators,
    f: impl Fn(f64) -> f64,
) -> BurgersField {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let h_aux = 2.0 / k_aux as f64;
    let s = 1.0 / 3.0_f64.sqrt();
    let np = ops.n_nodes();
    let mut field = BurgersField::zeros(mesh, ops.degree());
    for e in 0..k {
        for (i, &xi) in ops.nodes().iter().enumerate() {
            let x = mesh.physical_coord(e, xi);
            // Which auxiliary cell contains x (nudge inward at the seams).
            let cell = (((x + 1.0) / h_aux - 1e-12).floor().max(0.0) as usize).min(k_aux - 1);
            let xc = -1.0 + h_aux * (cell as f64 + 0.5);
            let xm = xc - s * h_aux / 2.0;
            let xp = xc + s * h_aux / 2.0;
            let (fm, fp) = (f(xm), f(xp));
            let c0 = 0.5 * (fm + fp);
            let c1 = (fp - fm) / (2.0 * s);
            field.data[e * np + i] = c0 + c1 * (2.0 * (x - xc) / h_aux);
        }
    }
    field
}

fn main() {
    let pi = std::f64::consts::PI;
    let ops15 = LglOperators::new(15).unwrap();
    let ed = BurgersFlux::EdRusanov;
    let f4 = move |x: f64| (4.0 * pi * x - 0.7).sin() + 2.0;
    for k_aux in [6usize, 8, 10, 12, 16, 20, 24] {
        let bf = aux_grid_baseflow(k_aux, 3, &ops15, f4);
        println!(
            "aux grid {k_aux:2}: ed-rus {:+.5}",
            spectrum(&bf.data, 3, 15, 2.0 / 3.0, ed)
        );
    }
    // Plain-frequency sanity: aux grid 10 with pi frequency.
    let f1 = move |x: f64| (pi * x - 0.7).sin() + 2.0;
    let bf = aux_grid_baseflow(10, 3, &ops15, f1);
    println!("aux 10, pi freq: ed-rus {:+.5}", spectrum(&bf.data, 3, 15, 2.0/3.0, ed));
}
