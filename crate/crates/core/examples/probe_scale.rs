// Scratch probe: surface-penalty scale factor needed to reach 1.359 on
// the N=15/K=3 configuration (diagnostic only).
use splitstab_core::burgers::flux::BurgersFlux;
use splitstab_core::mesh::Mesh1D;
use splitstab_core::sbp::LglOperators;
use splitstab_core::spectral::eigenspectrum;
use splitstab_core::{Rhs, RhsError};

struct ScaledSurfaceDg {
    mesh: Mesh1D,
    ops: LglOperators,
    alpha: f64,
    surface: BurgersFlux,
    scale: f64,
}

impl Rhs for ScaledSurfaceDg {
    fn dim(&self) -> usize {
        self.mesh.num_elements() * self.ops.n_nodes()
    }
    fn eval(&self, u: &[f64], out: &mut [f64]) -> Result<(), RhsError> {
        let np = self.ops.n_nodes();
        let k = self.mesh.num_elements();
        let h = self.mesh.element_size();
        for e in 0..k {
            let ue = &u[e * np..(e + 1) * np];
            let oe = &mut out[e * np..(e + 1) * np];
            for i in 0..np {
                let mut dsq = 0.0;
                let mut du = 0.0;
                for m in 0..np {
                    let d = self.ops.diff_at(i, m);
                    dsq += d * ue[m] * ue[m];
                    du += d * ue[m];
                }
                oe[i] = -(0.5 * self.alpha * dsq + (1.0 - self.alpha) * ue[i] * du);
            }
            let left = u[self.mesh.left_neighbor(e) * np + np - 1];
            let right = u[self.mesh.right_neighbor(e) * np];
            let fl = self.surface.evaluate(left, ue[0]);
            let fr = self.surface.evaluate(ue[np - 1], right);
            oe[0] += self.scale * (fl - 0.5 * ue[0] * ue[0]) / self.ops.weights()[0];
            oe[np - 1] -=
                self.scale * (fr - 0.5 * ue[np - 1] * ue[np - 1]) / self.ops.weights()[np - 1];
            for v in oe.iter_mut() {
                *v *= 2.0 / h;
            }
        }
        Ok(())
    }
}

fn gauss_lin(k: usize, ops: &LglOperators, f: impl Fn(f64) -> f64) -> Vec<f64> {
    let mesh = Mesh1D::periodic_unit(k).unwrap();
    let s = 1.0 / 3.0_f64.sqrt();
    let np = ops.n_nodes();
    let mut data = vec![0.0; k * np];
    for e in 0..k {
        let fm = f(mesh.physical_coord(e, -s));
        let fp = f(mesh.physical_coord(e, s));
        for (i, &xi) in ops.nodes().iter().enumerate() {
            data[e * np + i] = 0.5 * (fm + fp) + (fp - fm) / (2.0 * s) * xi;
        }
    }
    data
}

fn main() {
    let pi = std::f64::consts::PI;
    let ops = LglOperators::new(15).unwrap();
    let bf = gauss_lin(3, &ops, |x| (4.0 * pi * x - 0.7).sin() + 2.0);
    for scale in [1.0, 0.5, 0.2, 0.1, 0.05, 0.02, 0.01, 0.0] {
        let rhs = ScaledSurfaceDg {
            mesh: Mesh1D::periodic_unit(3).unwrap(),
            ops: ops.clone(),
            alpha: 2.0 / 3.0,
            surface: BurgersFlux::EdRusanov,
            scale,
        };
        let jac = splitstab_core::spectral::fd_jacobian(&rhs, &bf, 1e-8).unwrap();
        let r = eigenspectrum(jac.as_ref()).unwrap().max_real_part;
        println!("surface scale {scale:5.2}: maxRe {r:+.4}");
    }
}
