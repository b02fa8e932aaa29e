//! Periodic 2D tensor-product DGSEM for the compressible Euler equations
//! with flux-differencing volume terms and configurable surface fluxes.

use thiserror::Error;

use crate::euler::flux::{physical_flux, EulerFlux};
use crate::euler::state::{Axis, EulerState};
use crate::mesh::Mesh2D;
use crate::rhs::{InadmissibleState, OffendingVariable, Rhs, RhsError};
use crate::sbp::{interpolation_matrix, LglOperators, OperatorError};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum WaveSetupError {
    #[error("density-wave amplitude must lie in [0, 1), got {0}")]
    InvalidAmplitude(f64),
}

/// Background velocity of the density-wave test problem.
pub const WAVE_VELOCITY: [f64; 2] = [0.1, 0.2];
/// Background pressure of the density-wave test problem.
pub const WAVE_PRESSURE: f64 = 20.0;

/// Nodal conserved variables on a periodic Cartesian mesh; layout
/// `data[((e * (N+1) + i) * (N+1) + j) * 4 + c]` with `i` the x-node and
/// `j` the y-node.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerField2D {
    pub mesh: Mesh2D,
    pub degree: usize,
    pub data: Vec<f64>,
}

impl EulerField2D {
    pub fn zeros(mesh: Mesh2D, degree: usize) -> Self {
        let np = degree + 1;
        Self {
            mesh,
            degree,
            data: vec![0.0; mesh.num_elements() * np * np * 4],
        }
    }

    #[inline]
    pub fn idx(&self, elem: usize, i: usize, j: usize) -> usize {
        let np = self.degree + 1;
        ((elem * np + i) * np + j) * 4
    }

    pub fn state_at(&self, elem: usize, i: usize, j: usize) -> EulerState {
        let k = self.idx(elem, i, j);
        EulerState::from_conserved([
            self.data[k],
            self.data[k + 1],
            self.data[k + 2],
            self.data[k + 3],
        ])
    }

    pub fn set_state(&mut self, elem: usize, i: usize, j: usize, state: &EulerState) {
        let k = self.idx(elem, i, j);
        self.data[k..k + 4].copy_from_slice(&state.conserved());
    }

    pub fn min_density(&self) -> f64 {
        self.data
            .chunks_exact(4)
            .map(|u| u[0])
            .fold(f64::INFINITY, f64::min)
    }
}

/// First inadmissible state of a run, with the simulation time at which it
/// was detected.
#[derive(Debug, Clone, PartialEq)]
pub struct CrashReport {
    pub time: f64,
    pub detail: InadmissibleState,
}

/// Exact density of the translating wave at time `t`.
pub fn density_wave_exact(x: f64, y: f64, t: f64, amplitude: f64) -> f64 {
    let phase = x - WAVE_VELOCITY[0] * t + y - WAVE_VELOCITY[1] * t;
    1.0 + amplitude * (2.0 * std::f64::consts::PI * phase).sin()
}

/// Sample the density wave `rho = 1 + A sin(2 pi (x + y))`, `v = (0.1, 0.2)`,
/// `p = 20` at the tensor LGL nodes.
pub fn initialize_density_wave(
    mesh: Mesh2D,
    ops: &LglOperators,
    amplitude: f64,
) -> Result<EulerField2D, WaveSetupError> {
    if !(0.0..1.0).contains(&amplitude) {
        return Err(WaveSetupError::InvalidAmplitude(amplitude));
    }
    let mut field = EulerField2D::zeros(mesh, ops.degree());
    let np = ops.n_nodes();
    for ey in 0..mesh.ky() {
        for ex in 0..mesh.kx() {
            let e = mesh.elem_index(ex, ey);
            for i in 0..np {
                for j in 0..np {
                    let (x, y) =
                        mesh.physical_coord(ex, ey, ops.nodes()[i], ops.nodes()[j]);
                    let rho = density_wave_exact(x, y, 0.0, amplitude);
                    let state = EulerState::from_primitive(rho, WAVE_VELOCITY, WAVE_PRESSURE);
                    field.set_state(e, i, j, &state);
                }
            }
        }
    }
    Ok(field)
}

/// Quadrature-weighted L2 error of the nodal density against the exact
/// density wave at time `t`. Zero when the field equals the exact solution
/// sampled at the nodes.
pub fn l2_error_density(
    field: &EulerField2D,
    ops: &LglOperators,
    t: f64,
    amplitude: f64,
) -> f64 {
    let mesh = field.mesh;
    let np = ops.n_nodes();
    let jac = 0.25 * mesh.element_size_x() * mesh.element_size_y();
    let mut acc = 0.0;
    for ey in 0..mesh.ky() {
        for ex in 0..mesh.kx() {
            let e = mesh.elem_index(ex, ey);
            for i in 0..np {
                for j in 0..np {
                    let (x, y) =
                        mesh.physical_coord(ex, ey, ops.nodes()[i], ops.nodes()[j]);
                    let diff = field.data[field.idx(e, i, j)]
                        - density_wave_exact(x, y, t, amplitude);
                    acc += jac * ops.weights()[i] * ops.weights()[j] * diff * diff;
                }
            }
        }
    }
    acc.sqrt()
}

/// L2 density error evaluated on an over-integrated quadrature, so that the
/// value at `t = 0` equals the polynomial representation error of the wave
/// rather than zero.
#[derive(Debug, Clone)]
pub struct DensityErrorGauge {
    fine: LglOperators,
    /// Row-major `(M+1) x (N+1)` evaluation matrix from solution nodes to
    /// fine nodes.
    interp: Vec<f64>,
    np: usize,
}

impl DensityErrorGauge {
    pub fn new(ops: &LglOperators, fine_degree: usize) -> Result<Self, OperatorError> {
        let fine = LglOperators::new(fine_degree.max(ops.degree() + 2))?;
        let interp = interpolation_matrix(ops.nodes(), fine.nodes());
        Ok(Self {
            fine,
            interp,
            np: ops.n_nodes(),
        })
    }

    pub fn error(&self, field: &EulerField2D, t: f64, amplitude: f64) -> f64 {
        let mesh = field.mesh;
        let np = self.np;
        let nf = self.fine.n_nodes();
        let jac = 0.25 * mesh.element_size_x() * mesh.element_size_y();
        let mut rho = vec![0.0; np * np];
        let mut half = vec![0.0; nf * np];
        let mut acc = 0.0;
        for ey in 0..mesh.ky() {
            for ex in 0..mesh.kx() {
                let e = mesh.elem_index(ex, ey);
                for i in 0..np {
                    for j in 0..np {
                        rho[i * np + j] = field.data[field.idx(e, i, j)];
                    }
                }
                // Tensor-product evaluation at the fine nodes.
                for a in 0..nf {
                    for j in 0..np {
                        half[a * np + j] = (0..np)
                            .map(|i| self.interp[a * np + i] * rho[i * np + j])
                            .sum();
                    }
                }
                for a in 0..nf {
                    for b in 0..nf {
                        let value: f64 = (0..np)
                            .map(|j| self.interp[b * np + j] * half[a * np + j])
                            .sum();
                        let (x, y) = mesh.physical_coord(
                            ex,
                            ey,
                            self.fine.nodes()[a],
                            self.fine.nodes()[b],
                        );
                        let diff = value - density_wave_exact(x, y, t, amplitude);
                        acc += jac
                            * self.fine.weights()[a]
                            * self.fine.weights()[b]
                            * diff
                            * diff;
                    }
                }
            }
        }
        acc.sqrt()
    }
}

/// Quadrature-weighted totals of the four conserved variables.
pub fn conserved_totals(field: &EulerField2D, ops: &LglOperators) -> [f64; 4] {
    let mesh = field.mesh;
    let np = ops.n_nodes();
    let jac = 0.25 * mesh.element_size_x() * mesh.element_size_y();
    let mut totals = [0.0; 4];
    for e in 0..mesh.num_elements() {
        for i in 0..np {
            for j in 0..np {
                let k = field.idx(e, i, j);
                let w = jac * ops.weights()[i] * ops.weights()[j];
                for c in 0..4 {
                    totals[c] += w * field.data[k + c];
                }
            }
        }
    }
    totals
}

/// Flux-differencing DGSEM operator: per node `(i,j)`, the x-direction
/// volume contribution is `-(2/hx) sum_m 2 D_im f#(u_ij, u_mj)` with the
/// analogous term in y, plus strong-form surface terms
/// `-(2/h) M^-1 B (f* - f(u))` applied per node line using periodic
/// neighbor states.
#[derive(Debug, Clone)]
pub struct EulerDg2d {
    mesh: Mesh2D,
    ops: LglOperators,
    volume_flux: EulerFlux,
    surface_flux: EulerFlux,
}

impl EulerDg2d {
    pub fn new(
        mesh: Mesh2D,
        ops: LglOperators,
        volume_flux: EulerFlux,
        surface_flux: EulerFlux,
    ) -> Self {
        Self {
            mesh,
            ops,
            volume_flux,
            surface_flux,
        }
    }

    pub fn mesh(&self) -> &Mesh2D {
        &self.mesh
    }

    pub fn ops(&self) -> &LglOperators {
        &self.ops
    }

    pub fn volume_flux(&self) -> EulerFlux {
        self.volume_flux
    }

    pub fn surface_flux(&self) -> EulerFlux {
        self.surface_flux
    }

    fn n_nodes(&self) -> usize {
        self.ops.n_nodes()
    }

    /// Decode and admissibility-check every nodal state.
    fn gather_states(&self, u: &[f64]) -> Result<Vec<EulerState>, InadmissibleState> {
        let np = self.n_nodes();
        let mut states = Vec::with_capacity(self.mesh.num_elements() * np * np);
        for e in 0..self.mesh.num_elements() {
            for i in 0..np {
                for j in 0..np {
                    let k = ((e * np + i) * np + j) * 4;
                    let state = EulerState::from_conserved([
                        u[k],
                        u[k + 1],
                        u[k + 2],
                        u[k + 3],
                    ]);
                    if !(state.rho > 0.0) || !state.rho.is_finite() {
                        return Err(InadmissibleState {
                            element: e,
                            node: (i, j),
                            variable: OffendingVariable::Density,
                            value: state.rho,
                        });
                    }
                    let p = state.pressure();
                    if !(p > 0.0) || !p.is_finite() {
                        return Err(InadmissibleState {
                            element: e,
                            node: (i, j),
                            variable: OffendingVariable::Pressure,
                            value: p,
                        });
                    }
                    states.push(state);
                }
            }
        }
        Ok(states)
    }

    /// Validate a state vector, reporting the first inadmissible node.
    pub fn check_admissible(&self, u: &[f64]) -> Result<(), InadmissibleState> {
        self.gather_states(u).map(|_| ())
    }

    /// Largest nodal wave speed `max_d |v_d| + c` for the CFL step.
    pub fn max_wave_speed(&self, u: &[f64]) -> Result<f64, InadmissibleState> {
        let states = self.gather_states(u)?;
        let mut lambda: f64 = 0.0;
        for s in &states {
            let v = s.velocity();
            let c = s.sound_speed();
            lambda = lambda.max(v[0].abs() + c).max(v[1].abs() + c);
        }
        Ok(lambda)
    }
}

impl Rhs for EulerDg2d {
    fn dim(&self) -> usize {
        let np = self.n_nodes();
        self.mesh.num_elements() * np * np * 4
    }

    fn eval(&self, u: &[f64], out: &mut [f64]) -> Result<(), RhsError> {
        assert_eq!(u.len(), self.dim());
        assert_eq!(out.len(), self.dim());
        let np = self.n_nodes();
        let states = self.gather_states(u)?;
        let node = |e: usize, i: usize, j: usize| &states[(e * np + i) * np + j];

        let scale_x = 2.0 / self.mesh.element_size_x();
        let scale_y = 2.0 / self.mesh.element_size_y();
        let w = self.ops.weights();
        let diff = self.ops.diff();
        out.fill(0.0);

        for e in 0..self.mesh.num_elements() {
            // Volume terms; the two-point flux is symmetric, so each pair
            // is evaluated once.
            for i in 0..np {
                for j in 0..np {
                    let k = ((e * np + i) * np + j) * 4;
                    let fx = physical_flux(node(e, i, j), Axis::X);
                    let fy = physical_flux(node(e, i, j), Axis::Y);
                    let dxx = 2.0 * diff[i * np + i];
                    let dyy = 2.0 * diff[j * np + j];
                    for c in 0..4 {
                        out[k + c] -= scale_x * dxx * fx[c] + scale_y * dyy * fy[c];
                    }
                }
            }
            for j in 0..np {
                for i in 0..np {
                    for m in (i + 1)..np {
                        let fs = self.volume_flux.evaluate_admissible(
                            node(e, i, j),
                            node(e, m, j),
                            Axis::X,
                        );
                        let k_i = ((e * np + i) * np + j) * 4;
                        let k_m = ((e * np + m) * np + j) * 4;
                        let d_im = 2.0 * diff[i * np + m];
                        let d_mi = 2.0 * diff[m * np + i];
                        for c in 0..4 {
                            out[k_i + c] -= scale_x * d_im * fs[c];
                            out[k_m + c] -= scale_x * d_mi * fs[c];
                        }
                    }
                }
            }
            for i in 0..np {
                for j in 0..np {
                    for m in (j + 1)..np {
                        let fs = self.volume_flux.evaluate_admissible(
                            node(e, i, j),
                            node(e, i, m),
                            Axis::Y,
                        );
                        let k_j = ((e * np + i) * np + j) * 4;
                        let k_m = ((e * np + i) * np + m) * 4;
                        let d_jm = 2.0 * diff[j * np + m];
                        let d_mj = 2.0 * diff[m * np + j];
                        for c in 0..4 {
                            out[k_j + c] -= scale_y * d_jm * fs[c];
                            out[k_m + c] -= scale_y * d_mj * fs[c];
                        }
                    }
                }
            }
        }

        // Surface terms with periodic neighbors.
        for ey in 0..self.mesh.ky() {
            for ex in 0..self.mesh.kx() {
                let e = self.mesh.elem_index(ex, ey);
                let west = self.mesh.elem_index(self.mesh.west_neighbor(ex), ey);
                let east = self.mesh.elem_index(self.mesh.east_neighbor(ex), ey);
                let south = self.mesh.elem_index(ex, self.mesh.south_neighbor(ey));
                let north = self.mesh.elem_index(ex, self.mesh.north_neighbor(ey));

                for j in 0..np {
                    let own = node(e, 0, j);
                    let fstar = self.surface_flux.evaluate_admissible(
                        node(west, np - 1, j),
                        own,
                        Axis::X,
                    );
                    let f_own = physical_flux(own, Axis::X);
                    let k = ((e * np) * np + j) * 4;
                    for c in 0..4 {
                        out[k + c] += scale_x * (fstar[c] - f_own[c]) / w[0];
                    }

                    let own = node(e, np - 1, j);
                    let fstar = self.surface_flux.evaluate_admissible(
                        own,
                        node(east, 0, j),
                        Axis::X,
                    );
                    let f_own = physical_flux(own, Axis::X);
                    let k = ((e * np + np - 1) * np + j) * 4;
                    for c in 0..4 {
                        out[k + c] -= scale_x * (fstar[c] - f_own[c]) / w[np - 1];
                    }
                }
                for i in 0..np {
                    let own = node(e, i, 0);
                    let fstar = self.surface_flux.evaluate_admissible(
                        node(south, i, np - 1),
                        own,
                        Axis::Y,
                    );
                    let f_own = physical_flux(own, Axis::Y);
                    let k = ((e * np + i) * np) * 4;
                    for c in 0..4 {
                        out[k + c] += scale_y * (fstar[c] - f_own[c]) / w[0];
                    }

                    let own = node(e, i, np - 1);
                    let fstar = self.surface_flux.evaluate_admissible(
                        own,
                        node(north, i, 0),
                        Axis::Y,
                    );
                    let f_own = physical_flux(own, Axis::Y);
                    let k = ((e * np + i) * np + np - 1) * 4;
                    for c in 0..4 {
                        out[k + c] -= scale_y * (fstar[c] - f_own[c]) / w[np - 1];
                    }
                }
            }
        }
        Ok(())
    }
}
