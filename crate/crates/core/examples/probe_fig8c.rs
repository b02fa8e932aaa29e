// Scratch probe: fig8-right with Gauss-node interpolation at various
// degrees and phase conventions.
use splitstab_core::burgers::dg::{BurgersDg, BurgersField, BurgersSchemeConfig};
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::{legendre, LglOperators};
use splitstab_core::spectral::{eigenspectrum, fd_jacobian};

/// Roots of P_n (Gauss-Legendre nodes) by Newton.
fn gauss_nodes(n: usize) -> Vec<f64> {
    let mut nodes = vec![0.0; n];
    for j in 0..n {
        let mut x = -((std::f64::consts::PI * (j as f64 + 0.75)) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let p = legendre(n, x);
            let pm = legendre(n - 1, x);
            let dp = n as f64 * (x * p - pm) / (x * x - 1.0);
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        nodes[j] = x;
    }
    nodes
}

fn gauss_interp_baseflow(
    k: usize,
    ops: &LglOperators,
    target: usize,
    f: impl Fn(f64) -> f64,
) -> BurgersField {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let gn = gauss_nodes(target + 1);
    let np = ops.n_nodes();
    let interp = splitstab_core::sbp::interpolation_matrix(&gn, ops.nodes());
    let mut field = BurgersField::zeros(mesh, ops.degree());
    for e in 0..k {
        let vals: Vec<f64> = gn.iter().map(|&xi| f(mesh.physical_coord(e, xi))).collect();
        for i in 0..np {
            field.data[e * np + i] = interp[i * (target + 1)..(i + 1) * (target + 1)]
                .iter()
                .zip(&vals)
                .map(|(a, v)| a * v)
                .sum();
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
    let ops15 = LglOperators::new(15).unwrap();
    let ed = BurgersFlux::EdRusanov;
    for phase in [0.7, 2.8] {
        for target in [1usize, 2, 3, 4, 5, 7] {
            let bf = gauss_interp_baseflow(3, &ops15, target, |x| {
                (4.0 * pi * x - phase).sin() + 2.0
            });
            let r = spectrum(&bf.data, 3, 15, 2.0 / 3.0, ed);
            println!("phase {phase} gauss-interp degree {target}: {r:+.5}");
        }
    }
    // Also K=3 with the plain pi-frequency for contrast, and ec surface.
    let bf = gauss_interp_baseflow(3, &ops15, 1, |x| (4.0 * pi * x - 0.7).sin() + 2.0);
    println!("ec-surface check: {:+.5}", spectrum(&bf.data, 3, 15, 2.0/3.0, BurgersFlux::EntropyConserving));
}
