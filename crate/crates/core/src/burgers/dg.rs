//! Periodic split-form DGSEM semidiscretization of Burgers' equation and a
//! first-order finite-volume reference, plus the inhomogeneous source-term
//! wrapper used for fluctuation-growth experiments.

use thiserror::Error;

use crate::burgers::flux::{physical_flux, BurgersFlux, FluxError};
use crate::mesh::Mesh1D;
use crate::rhs::{Rhs, RhsError};
use crate::sbp::{
    gauss_nodes, interpolation_matrix, project_element, LglOperators, OperatorError,
    ProjectionKind,
};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum BurgersConfigError {
    #[error(transparent)]
    Flux(#[from] FluxError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(
        "the entropy-dissipative volume modification is not implemented; its formula \
         is only available in an external reference"
    )]
    CarpenterModUnavailable,
}

/// Scheme selection for the Burgers semidiscretization: split parameter for
/// the volume term and a two-point flux for the surface term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BurgersSchemeConfig {
    /// Split parameter in `[0, 1]`; `1` is the divergence form, `2/3` the
    /// skew-symmetric (entropy-conserving) form.
    pub alpha: f64,
    pub surface_flux: BurgersFlux,
    /// Placeholder for the entropy-dissipative volume-term modification.
    /// Accepted in configuration but rejected at scheme construction.
    pub carpenter_volume_mod: bool,
}

impl BurgersSchemeConfig {
    pub fn new(alpha: f64, surface_flux: BurgersFlux) -> Result<Self, BurgersConfigError> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(FluxError::AlphaOutOfRange(alpha).into());
        }
        Ok(Self {
            alpha,
            surface_flux,
            carpenter_volume_mod: false,
        })
    }

    /// True when the configuration is the entropy-conserving scheme
    /// (skew-symmetric volume terms with the entropy-conserving flux).
    pub fn is_entropy_conserving(&self) -> bool {
        (self.alpha - 2.0 / 3.0).abs() <= 1e-14
            && self.surface_flux == BurgersFlux::EntropyConserving
    }
}

/// Nodal solution values, element-major: `data[e * (N+1) + i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BurgersField {
    pub mesh: Mesh1D,
    pub degree: usize,
    pub data: Vec<f64>,
}

impl BurgersField {
    pub fn zeros(mesh: Mesh1D, degree: usize) -> Self {
        let data = vec![0.0; mesh.num_elements() * (degree + 1)];
        Self { mesh, degree, data }
    }

    /// Sample a function at the collocation nodes.
    pub fn from_function(
        mesh: Mesh1D,
        ops: &LglOperators,
        f: impl Fn(f64) -> f64,
    ) -> Self {
        let degree = ops.degree();
        let mut field = Self::zeros(mesh, degree);
        let np = degree + 1;
        for e in 0..mesh.num_elements() {
            for (i, &xi) in ops.nodes().iter().enumerate() {
                field.data[e * np + i] = f(mesh.physical_coord(e, xi));
            }
        }
        field
    }

    pub fn node_index(&self, elem: usize, node: usize) -> usize {
        elem * (self.degree + 1) + node
    }

    /// Physical node coordinates in the same ordering as `data`.
    pub fn node_coords(&self, ops: &LglOperators) -> Vec<f64> {
        let np = self.degree + 1;
        let mut xs = Vec::with_capacity(self.data.len());
        for e in 0..self.mesh.num_elements() {
            for i in 0..np {
                xs.push(self.mesh.physical_coord(e, ops.nodes()[i]));
            }
        }
        let _ = np;
        xs
    }

    /// Per-element reduction to polynomials of degree `target_degree`,
    /// re-evaluated at the working nodes.
    pub fn project_to_degree(
        &self,
        ops: &LglOperators,
        target_degree: usize,
        kind: ProjectionKind,
    ) -> Result<Self, OperatorError> {
        let np = self.degree + 1;
        let mut out = self.clone();
        for e in 0..self.mesh.num_elements() {
            let src = &self.data[e * np..(e + 1) * np];
            project_element(ops, target_degree, kind, src, &mut out.data[e * np..(e + 1) * np])?;
        }
        Ok(out)
    }

    /// Sample a function already reduced to degree `target_degree` per
    /// element. Interpolation kinds sample `f` directly at their target
    /// points instead of going through the working-degree interpolant.
    pub fn from_function_reduced(
        mesh: Mesh1D,
        ops: &LglOperators,
        target_degree: usize,
        kind: ProjectionKind,
        f: impl Fn(f64) -> f64,
    ) -> Result<Self, OperatorError> {
        match kind {
            ProjectionKind::L2 => {
                Self::from_function(mesh, ops, f).project_to_degree(ops, target_degree, kind)
            }
            ProjectionKind::GaussInterpolation | ProjectionKind::Interpolation => {
                let target_nodes = match kind {
                    ProjectionKind::GaussInterpolation => gauss_nodes(target_degree + 1)?,
                    _ => LglOperators::new(target_degree)?.nodes().to_vec(),
                };
                if target_degree > ops.degree() {
                    return Err(OperatorError::TargetDegreeTooHigh {
                        target: target_degree,
                        degree: ops.degree(),
                    });
                }
                let up = interpolation_matrix(&target_nodes, ops.nodes());
                let nt = target_degree + 1;
                let np = ops.n_nodes();
                let mut field = Self::zeros(mesh, ops.degree());
                for e in 0..mesh.num_elements() {
                    let coarse: Vec<f64> = target_nodes
                        .iter()
                        .map(|&xi| f(mesh.physical_coord(e, xi)))
                        .collect();
                    for i in 0..np {
                        field.data[e * np + i] = up[i * nt..(i + 1) * nt]
                            .iter()
                            .zip(&coarse)
                            .map(|(a, v)| a * v)
                            .sum();
                    }
                }
                Ok(field)
            }
        }
    }
}

/// Quadrature-weighted L2 norm `(sum_e sum_i (h/2) w_i u_i^2)^(1/2)`.
pub fn quadrature_norm(u: &[f64], mesh: &Mesh1D, ops: &LglOperators) -> f64 {
    let np = ops.n_nodes();
    let jac = 0.5 * mesh.element_size();
    let mut acc = 0.0;
    for e in 0..mesh.num_elements() {
        for i in 0..np {
            let v = u[e * np + i];
            acc += jac * ops.weights()[i] * v * v;
        }
    }
    acc.sqrt()
}

/// Discrete total entropy `sum_e sum_i (h/2) w_i u_i^2 / 2`.
pub fn discrete_entropy(u: &[f64], mesh: &Mesh1D, ops: &LglOperators) -> f64 {
    let n = quadrature_norm(u, mesh, ops);
    0.5 * n * n
}

/// Split-form DGSEM operator for Burgers' equation on a periodic mesh:
/// per element,
/// `u_t = -(2/h) [ alpha/2 D(u.u) + (1-alpha) u.(Du) + M^-1 B (f* - u.u/2) ]`
/// with the surface flux vector assembled from the configured two-point
/// flux at the two element interfaces.
#[derive(Debug, Clone)]
pub struct BurgersDg {
    mesh: Mesh1D,
    ops: LglOperators,
    config: BurgersSchemeConfig,
}

impl BurgersDg {
    pub fn new(
        mesh: Mesh1D,
        ops: LglOperators,
        config: BurgersSchemeConfig,
    ) -> Result<Self, BurgersConfigError> {
        if !(0.0..=1.0).contains(&config.alpha) {
            return Err(FluxError::AlphaOutOfRange(config.alpha).into());
        }
        if config.carpenter_volume_mod {
            return Err(BurgersConfigError::CarpenterModUnavailable);
        }
        Ok(Self { mesh, ops, config })
    }

    pub fn mesh(&self) -> &Mesh1D {
        &self.mesh
    }

    pub fn ops(&self) -> &LglOperators {
        &self.ops
    }

    pub fn config(&self) -> &BurgersSchemeConfig {
        &self.config
    }

    /// Largest wave speed `max |u|`, used for the CFL time step.
    pub fn max_wave_speed(&self, u: &[f64]) -> f64 {
        u.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }
}

impl Rhs for BurgersDg {
    fn dim(&self) -> usize {
        self.mesh.num_elements() * self.ops.n_nodes()
    }

    fn eval(&self, u: &[f64], out: &mut [f64]) -> Result<(), RhsError> {
        let np = self.ops.n_nodes();
        let k = self.mesh.num_elements();
        assert_eq!(u.len(), k * np);
        assert_eq!(out.len(), k * np);

        let alpha = self.config.alpha;
        let scale = 2.0 / self.mesh.element_size();
        let diff = self.ops.diff();
        let w = self.ops.weights();

        for e in 0..k {
            let ue = &u[e * np..(e + 1) * np];
            let oe = &mut out[e * np..(e + 1) * np];

            for i in 0..np {
                let row = &diff[i * np..(i + 1) * np];
                let mut d_usq = 0.0;
                let mut d_u = 0.0;
                for m in 0..np {
                    d_usq += row[m] * ue[m] * ue[m];
                    d_u += row[m] * ue[m];
                }
                oe[i] = -(0.5 * alpha * d_usq + (1.0 - alpha) * ue[i] * d_u);
            }

            // Surface flux vector [f_left, 0, ..., 0, f_right].
            let left_nb = u[self.mesh.left_neighbor(e) * np + np - 1];
            let right_nb = u[self.mesh.right_neighbor(e) * np];
            let f_left = self.config.surface_flux.evaluate(left_nb, ue[0]);
            let f_right = self.config.surface_flux.evaluate(ue[np - 1], right_nb);
            oe[0] += (f_left - physical_flux(ue[0])) / w[0];
            oe[np - 1] -= (f_right - physical_flux(ue[np - 1])) / w[np - 1];

            for v in oe.iter_mut() {
                *v *= scale;
            }
        }
        Ok(())
    }
}

/// First-order finite-volume semidiscretization on periodic cell averages,
/// `du_i/dt = -(f_{i+1/2} - f_{i-1/2}) / h`.
#[derive(Debug, Clone)]
pub struct BurgersFv {
    mesh: Mesh1D,
    flux: BurgersFlux,
}

impl BurgersFv {
    pub fn new(mesh: Mesh1D, flux: BurgersFlux) -> Self {
        Self { mesh, flux }
    }

    pub fn mesh(&self) -> &Mesh1D {
        &self.mesh
    }
}

impl Rhs for BurgersFv {
    fn dim(&self) -> usize {
        self.mesh.num_elements()
    }

    fn eval(&self, u: &[f64], out: &mut [f64]) -> Result<(), RhsError> {
        let k = self.mesh.num_elements();
        assert_eq!(u.len(), k);
        assert_eq!(out.len(), k);
        let h = self.mesh.element_size();
        for i in 0..k {
            let f_right = self.flux.evaluate(u[i], u[(i + 1) % k]);
            let f_left = self.flux.evaluate(u[(i + k - 1) % k], u[i]);
            out[i] = -(f_right - f_left) / h;
        }
        Ok(())
    }
}

/// Wraps a right-hand side as `u -> L(u) - L(u_tilde)` with the baseflow
/// residual computed once, so that the baseflow is an exact steady state
/// of the returned operator.
#[derive(Debug, Clone)]
pub struct Inhomogeneous<R: Rhs> {
    inner: R,
    source: Vec<f64>,
}

impl<R: Rhs> Inhomogeneous<R> {
    pub fn about(inner: R, baseflow: &[f64]) -> Result<Self, RhsError> {
        let mut source = vec![0.0; inner.dim()];
        inner.eval(baseflow, &mut source)?;
        Ok(Self { inner, source })
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }

    /// The cached baseflow residual `L(u_tilde)`.
    pub fn source(&self) -> &[f64] {
        &self.source
    }
}

impl<R: Rhs> Rhs for Inhomogeneous<R> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn eval(&self, u: &[f64], out: &mut [f64]) -> Result<(), RhsError> {
        self.inner.eval(u, out)?;
        for (o, s) in out.iter_mut().zip(&self.source) {
            *o -= s;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn setup(k: usize, degree: usize, config: BurgersSchemeConfig) -> BurgersDg {
        let mesh = Mesh1D::periodic_unit(k).unwrap();
        let ops = LglOperators::new(degree).unwrap();
        BurgersDg::new(mesh, ops, config).unwrap()
    }

    fn random_state(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
        (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect()
    }

    const CONFIGS: [(f64, BurgersFlux); 5] = [
        (1.0, BurgersFlux::Central),
        (2.0 / 3.0, BurgersFlux::EntropyConserving),
        (1.0, BurgersFlux::EntropyConserving),
        (2.0 / 3.0, BurgersFlux::TadmorPositive),
        (2.0 / 3.0, BurgersFlux::EdRusanov),
    ];

    #[test]
    fn free_stream_is_preserved() {
        for (alpha, flux) in CONFIGS {
            let dg = setup(7, 4, BurgersSchemeConfig::new(alpha, flux).unwrap());
            let u = vec![1.7; dg.dim()];
            let mut out = vec![0.0; dg.dim()];
            dg.eval(&u, &mut out).unwrap();
            for &v in &out {
                assert!(v.abs() <= 1e-13, "free stream violated: {v}");
            }
        }
    }

    #[test]
    fn quadrature_weighted_rhs_sums_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (alpha, flux) in CONFIGS {
            let dg = setup(9, 3, BurgersSchemeConfig::new(alpha, flux).unwrap());
            let u = random_state(&mut rng, dg.dim());
            let mut out = vec![0.0; dg.dim()];
            dg.eval(&u, &mut out).unwrap();
            let np = dg.ops().n_nodes();
            let jac = 0.5 * dg.mesh().element_size();
            let total: f64 = out
                .iter()
                .enumerate()
                .map(|(idx, &v)| jac * dg.ops().weights()[idx % np] * v)
                .sum();
            assert!(total.abs() <= 1e-12, "conservation violated: {total}");
        }
    }

    #[test]
    fn entropy_conserving_scheme_conserves_discrete_entropy() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let config =
            BurgersSchemeConfig::new(2.0 / 3.0, BurgersFlux::EntropyConserving).unwrap();
        let dg = setup(10, 3, config);
        for _ in 0..20 {
            let u = random_state(&mut rng, dg.dim());
            let mut out = vec![0.0; dg.dim()];
            dg.eval(&u, &mut out).unwrap();
            let np = dg.ops().n_nodes();
            let jac = 0.5 * dg.mesh().element_size();
            let ddt_entropy: f64 = u
                .iter()
                .zip(&out)
                .enumerate()
                .map(|(idx, (&ui, &ri))| jac * dg.ops().weights()[idx % np] * ui * ri)
                .sum();
            assert!(
                ddt_entropy.abs() <= 1e-12,
                "entropy drift per evaluation: {ddt_entropy}"
            );
        }
    }

    #[test]
    fn divergence_form_matches_direct_assembly() {
        // alpha = 1 with the central surface flux is the classic
        // divergence-form DGSEM of f = u^2/2; assemble that directly.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let dg = setup(
            8,
            4,
            BurgersSchemeConfig::new(1.0, BurgersFlux::Central).unwrap(),
        );
        let u = random_state(&mut rng, dg.dim());
        let mut out = vec![0.0; dg.dim()];
        dg.eval(&u, &mut out).unwrap();

        let np = dg.ops().n_nodes();
        let k = dg.mesh().num_elements();
        let scale = 2.0 / dg.mesh().element_size();
        let mut direct = vec![0.0; dg.dim()];
        for e in 0..k {
            let ue = &u[e * np..(e + 1) * np];
            let fl: Vec<f64> = ue.iter().map(|&v| physical_flux(v)).collect();
            for i in 0..np {
                let mut df = 0.0;
                for m in 0..np {
                    df += dg.ops().diff_at(i, m) * fl[m];
                }
                direct[e * np + i] = -df;
            }
            let left_nb = u[dg.mesh().left_neighbor(e) * np + np - 1];
            let right_nb = u[dg.mesh().right_neighbor(e) * np];
            let f_left = BurgersFlux::Central.evaluate(left_nb, ue[0]);
            let f_right = BurgersFlux::Central.evaluate(ue[np - 1], right_nb);
            direct[e * np] += (f_left - fl[0]) / dg.ops().weights()[0];
            direct[e * np + np - 1] -= (f_right - fl[np - 1]) / dg.ops().weights()[np - 1];
            for i in 0..np {
                direct[e * np + i] *= scale;
            }
        }
        for (a, b) in out.iter().zip(&direct) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-13);
        }
    }

    #[test]
    fn fv_constant_state_and_conservation() {
        let mesh = Mesh1D::periodic_unit(12).unwrap();
        let fv = BurgersFv::new(mesh, BurgersFlux::alpha_split(2.0 / 3.0).unwrap());
        let u = vec![0.8; 12];
        let mut out = vec![0.0; 12];
        fv.eval(&u, &mut out).unwrap();
        for &v in &out {
            assert!(v.abs() <= 1e-14);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let u = random_state(&mut rng, 12);
        fv.eval(&u, &mut out).unwrap();
        let h = mesh.element_size();
        let mass: f64 = out.iter().map(|&v| h * v).sum();
        assert!(mass.abs() <= 1e-12, "FV mass drift {mass}");
        // alpha = 2/3 conserves the discrete energy sum h u_i^2 / 2.
        let energy: f64 = u.iter().zip(&out).map(|(&ui, &ri)| h * ui * ri).sum();
        assert!(energy.abs() <= 1e-12, "FV energy drift {energy}");
    }

    #[test]
    fn fv_every_flux_conserves_mass() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        let mesh = Mesh1D::periodic_unit(15).unwrap();
        for flux in [
            BurgersFlux::Central,
            BurgersFlux::EntropyConserving,
            BurgersFlux::TadmorPositive,
            BurgersFlux::EdRusanov,
            BurgersFlux::EsRusanov,
        ] {
            let fv = BurgersFv::new(mesh, flux);
            let u = random_state(&mut rng, 15);
            let mut out = vec![0.0; 15];
            fv.eval(&u, &mut out).unwrap();
            let mass: f64 = out.iter().map(|&v| mesh.element_size() * v).sum();
            assert!(mass.abs() <= 1e-12);
        }
    }

    #[test]
    fn inhomogeneous_baseflow_is_steady() {
        let ops = LglOperators::new(3).unwrap();
        let mesh = Mesh1D::periodic_unit(10).unwrap();
        let config =
            BurgersSchemeConfig::new(2.0 / 3.0, BurgersFlux::EntropyConserving).unwrap();
        let dg = BurgersDg::new(mesh, ops.clone(), config).unwrap();
        let baseflow = BurgersField::from_function(mesh, &ops, |x| {
            (std::f64::consts::PI * x - 0.7).sin() + 2.0
        })
        .project_to_degree(&ops, 1, ProjectionKind::L2)
        .unwrap();

        let inh = Inhomogeneous::about(dg, &baseflow.data).unwrap();
        let mut out = vec![0.0; inh.dim()];
        inh.eval(&baseflow.data, &mut out).unwrap();
        for &v in &out {
            assert!(v.abs() <= 1e-14, "steady-state residual {v}");
        }
    }

    #[test]
    fn carpenter_volume_mod_is_rejected() {
        let mesh = Mesh1D::periodic_unit(4).unwrap();
        let ops = LglOperators::new(3).unwrap();
        let mut config =
            BurgersSchemeConfig::new(2.0 / 3.0, BurgersFlux::TadmorPositive).unwrap();
        config.carpenter_volume_mod = true;
        assert!(matches!(
            BurgersDg::new(mesh, ops, config),
            Err(BurgersConfigError::CarpenterModUnavailable)
        ));
    }

    #[test]
    fn projected_baseflow_has_interface_jumps() {
        // The working-degree field is continuous across interfaces; the
        // piecewise-linear reduction is not, but its jumps stay small.
        let ops = LglOperators::new(3).unwrap();
        let mesh = Mesh1D::periodic_unit(10).unwrap();
        let field = BurgersField::from_function(mesh, &ops, |x| {
            (std::f64::consts::PI * x - 0.7).sin() + 2.0
        });
        let projected = field.project_to_degree(&ops, 1, ProjectionKind::L2).unwrap();
        let np = 4;
        let mut max_jump = 0.0_f64;
        for e in 0..10 {
            let right = mesh.right_neighbor(e);
            let jump =
                (projected.data[right * np] - projected.data[e * np + np - 1]).abs();
            max_jump = max_jump.max(jump);
        }
        assert!(max_jump > 1e-6, "expected visible interface jumps");
        assert!(max_jump < 0.1, "jumps should stay small, got {max_jump}");
    }

    #[test]
    fn volume_terms_alpha_independent_for_linear_baseflow() {
        // A degree-1 field on degree >= 3 operators: all split forms give
        // the same residual up to the surface flux, so schemes sharing a
        // surface flux have identical baseflow residuals.
        let ops = LglOperators::new(3).unwrap();
        let mesh = Mesh1D::periodic_unit(10).unwrap();
        let baseflow = BurgersField::from_function(mesh, &ops, |x| {
            (std::f64::consts::PI * x - 0.7).sin() + 2.0
        })
        .project_to_degree(&ops, 1, ProjectionKind::L2)
        .unwrap();

        let mut res = Vec::new();
        for alpha in [1.0, 2.0 / 3.0, 0.3] {
            let dg = BurgersDg::new(
                mesh,
                ops.clone(),
                BurgersSchemeConfig::new(alpha, BurgersFlux::Central).unwrap(),
            )
            .unwrap();
            let mut out = vec![0.0; dg.dim()];
            dg.eval(&baseflow.data, &mut out).unwrap();
            res.push(out);
        }
        for other in &res[1..] {
            for (a, b) in res[0].iter().zip(other) {
                assert_abs_diff_eq!(a, b, epsilon = 1e-12);
            }
        }
    }
}
