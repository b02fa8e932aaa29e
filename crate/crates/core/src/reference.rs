//! Reference operators with known behaviour, used to validate the Jacobian
//! and stability machinery.

use faer::Mat;

use crate::mesh::Mesh1D;
use crate::rhs::{Rhs, RhsError};
use crate::sbp::LglOperators;

/// Divergence-form DGSEM for the linear advection equation
/// `u_t + a u_x = 0` with the central surface flux on a periodic mesh.
///
/// Its semidiscrete operator is energy-conserving, so the spectrum is
/// purely imaginary; [`AdvectionDg::assemble_matrix`] builds that operator
/// explicitly for comparison against finite-difference Jacobians.
#[derive(Debug, Clone)]
pub struct AdvectionDg {
    pub mesh: Mesh1D,
    pub ops: LglOperators,
    pub speed: f64,
}

impl AdvectionDg {
    pub fn new(mesh: Mesh1D, ops: LglOperators, speed: f64) -> Self {
        Self { mesh, ops, speed }
    }

    /// Assemble the operator matrix entry by entry from the SBP blocks and
    /// periodic interface coupling, independent of the nodal `eval` path.
    pub fn assemble_matrix(&self) -> Mat<f64> {
        let np = self.ops.n_nodes();
        let k = self.mesh.num_elements();
        let n = k * np;
        let scale = 2.0 / self.mesh.element_size();
        let a = self.speed;
        let w = self.ops.weights();

        let mut mat = Mat::zeros(n, n);
        for e in 0..k {
            let base = e * np;
            for i in 0..np {
                for j in 0..np {
                    mat[(base + i, base + j)] = -scale * a * self.ops.diff_at(i, j);
                }
            }
            // Central surface flux a (uL + uR) / 2 in strong form.
            let left = self.mesh.left_neighbor(e) * np + np - 1;
            let right = self.mesh.right_neighbor(e) * np;
            mat[(base, left)] += scale * 0.5 * a / w[0];
            mat[(base, base)] -= scale * 0.5 * a / w[0];
            mat[(base + np - 1, right)] -= scale * 0.5 * a / w[np - 1];
            mat[(base + np - 1, base + np - 1)] += scale * 0.5 * a / w[np - 1];
        }
        mat
    }
}

impl Rhs for AdvectionDg {
    fn dim(&self) -> usize {
        self.mesh.num_elements() * self.ops.n_nodes()
    }

    fn eval(&self, u: &[f64], out: &mut [f64]) -> Result<(), RhsError> {
        let np = self.ops.n_nodes();
        let k = self.mesh.num_elements();
        assert_eq!(u.len(), k * np);
        let scale = 2.0 / self.mesh.element_size();
        let a = self.speed;
        let w = self.ops.weights();

        for e in 0..k {
            let ue = &u[e * np..(e + 1) * np];
            let oe = &mut out[e * np..(e + 1) * np];
            for i in 0..np {
                let mut du = 0.0;
                for m in 0..np {
                    du += self.ops.diff_at(i, m) * ue[m];
                }
                oe[i] = -a * du;
            }
            let left_nb = u[self.mesh.left_neighbor(e) * np + np - 1];
            let right_nb = u[self.mesh.right_neighbor(e) * np];
            let f_left = 0.5 * a * (left_nb + ue[0]);
            let f_right = 0.5 * a * (ue[np - 1] + right_nb);
            oe[0] += (f_left - a * ue[0]) / w[0];
            oe[np - 1] -= (f_right - a * ue[np - 1]) / w[np - 1];
            for v in oe.iter_mut() {
                *v *= scale;
            }
        }
        Ok(())
    }
}
