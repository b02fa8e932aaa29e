//! Legendre-Gauss-Lobatto collocation operators with the diagonal-norm
//! summation-by-parts property `M D + (M D)^T = B`, plus reference-element
//! interpolation and projection utilities.

use thiserror::Error;

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum OperatorError {
    #[error("polynomial degree must be at least 1, got {0}")]
    DegreeTooLow(usize),
    #[error("node iteration did not converge for degree {degree}, node {node}")]
    NodeIterationDiverged { degree: usize, node: usize },
    #[error("target degree {target} exceeds operator degree {degree}")]
    TargetDegreeTooHigh { target: usize, degree: usize },
}

/// Nodal operators for one polynomial degree: LGL nodes, quadrature weights
/// (the diagonal mass matrix), and the Lagrange differentiation matrix.
///
/// Immutable after construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct LglOperators {
    degree: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// Row-major (N+1)x(N+1) differentiation matrix.
    diff: Vec<f64>,
}

impl LglOperators {
    /// Build the operator set for polynomial degree `degree >= 1`.
    ///
    /// Nodes are the roots of `(1 - x^2) P_N'(x)`, found by Newton iteration
    /// from Chebyshev-Gauss-Lobatto initial guesses; weights are
    /// `2 / (N (N+1) P_N(x_i)^2)`. The differentiation matrix uses
    /// barycentric Lagrange weights with the negative-sum diagonal.
    pub fn new(degree: usize) -> Result<Self, OperatorError> {
        if degree < 1 {
            return Err(OperatorError::DegreeTooLow(degree));
        }
        let (nodes, weights) = lgl_nodes_weights(degree)?;
        let diff = differentiation_matrix(&nodes);
        Ok(Self {
            degree,
            nodes,
            weights,
            diff,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of nodes, `N + 1`.
    pub fn n_nodes(&self) -> usize {
        self.degree + 1
    }

    /// Nodes in `[-1, 1]`, strictly ascending with `nodes[0] = -1` and
    /// `nodes[N] = 1`.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Quadrature weights; these form the diagonal mass matrix `M`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Row-major differentiation matrix entries.
    pub fn diff(&self) -> &[f64] {
        &self.diff
    }

    pub fn diff_at(&self, i: usize, j: usize) -> f64 {
        self.diff[i * self.n_nodes() + j]
    }

    /// Diagonal of the boundary matrix `B = diag(-1, 0, ..., 0, 1)`.
    pub fn boundary_at(&self, i: usize) -> f64 {
        if i == 0 {
            -1.0
        } else if i == self.degree {
            1.0
        } else {
            0.0
        }
    }

    /// `out = D * values` on one element.
    pub fn apply_diff(&self, values: &[f64], out: &mut [f64]) {
        let np = self.n_nodes();
        assert_eq!(values.len(), np);
        assert_eq!(out.len(), np);
        for i in 0..np {
            let row = &self.diff[i * np..(i + 1) * np];
            out[i] = row.iter().zip(values).map(|(d, v)| d * v).sum();
        }
    }
}

/// Evaluate the Legendre polynomial `P_n` at `x`.
pub fn legendre(n: usize, x: f64) -> f64 {
    legendre_with_prev(n, x).0
}

/// Returns `(P_n(x), P_{n-1}(x))` via the three-term recurrence.
fn legendre_with_prev(n: usize, x: f64) -> (f64, f64) {
    match n {
        0 => (1.0, 0.0),
        _ => {
            let mut p_prev = 1.0;
            let mut p = x;
            for k in 1..n {
                let kf = k as f64;
                let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
                p_prev = p;
                p = p_next;
            }
            (p, p_prev)
        }
    }
}

fn lgl_nodes_weights(n: usize) -> Result<(Vec<f64>, Vec<f64>), OperatorError> {
    let np = n + 1;
    let mut nodes = vec![0.0; np];
    nodes[0] = -1.0;
    nodes[n] = 1.0;

    let nf = n as f64;
    // Interior nodes are the roots of P_N'. Newton on P_N' using
    //   P_N'(x)  = N (x P_N - P_{N-1}) / (x^2 - 1)
    //   P_N''(x) = (2 x P_N' - N (N+1) P_N) / (1 - x^2).
    // Solve only the lower half and mirror for exact symmetry.
    for j in 1..=(n / 2) {
        let mut x = -(std::f64::consts::PI * j as f64 / nf).cos();
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, p_prev) = legendre_with_prev(n, x);
            let dp = nf * (x * p - p_prev) / (x * x - 1.0);
            let ddp = (2.0 * x * dp - nf * (nf + 1.0) * p) / (1.0 - x * x);
            let step = dp / ddp;
            x -= step;
            if step.abs() <= NEWTON_TOL * (1.0 + x.abs()) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(OperatorError::NodeIterationDiverged { degree: n, node: j });
        }
        nodes[j] = x;
        nodes[n - j] = -x;
    }
    if n % 2 == 0 {
        nodes[n / 2] = 0.0;
    }

    let mut weights = vec![0.0; np];
    for (i, w) in weights.iter_mut().enumerate() {
        let p = legendre(n, nodes[i]);
        *w = 2.0 / (nf * (nf + 1.0) * p * p);
    }
    Ok((nodes, weights))
}

/// Gauss-Legendre nodes: the `n_points` roots of the Legendre polynomial
/// `P_{n_points}`, found by Newton iteration.
pub fn gauss_nodes(n_points: usize) -> Result<Vec<f64>, OperatorError> {
    assert!(n_points >= 1);
    let n = n_points;
    let nf = n as f64;
    let mut nodes = vec![0.0; n];
    for j in 0..n / 2 {
        let mut x = -((std::f64::consts::PI * (j as f64 + 0.75)) / (nf + 0.5)).cos();
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, p_prev) = legendre_with_prev(n, x);
            let dp = nf * (x * p - p_prev) / (x * x - 1.0);
            let step = p / dp;
            x -= step;
            if step.abs() <= NEWTON_TOL * (1.0 + x.abs()) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(OperatorError::NodeIterationDiverged { degree: n, node: j });
        }
        nodes[j] = x;
        nodes[n - 1 - j] = -x;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok(nodes)
}

/// Barycentric weights `w_j = 1 / prod_{k != j} (x_j - x_k)`.
fn barycentric_weights(nodes: &[f64]) -> Vec<f64> {
    let np = nodes.len();
    let mut w = vec![1.0; np];
    for j in 0..np {
        for k in 0..np {
            if k != j {
                w[j] /= nodes[j] - nodes[k];
            }
        }
    }
    w
}

fn differentiation_matrix(nodes: &[f64]) -> Vec<f64> {
    let np = nodes.len();
    let w = barycentric_weights(nodes);
    let mut d = vec![0.0; np * np];
    for i in 0..np {
        let mut row_sum = 0.0;
        for j in 0..np {
            if i != j {
                let entry = (w[j] / w[i]) / (nodes[i] - nodes[j]);
                d[i * np + j] = entry;
                row_sum += entry;
            }
        }
        d[i * np + i] = -row_sum;
    }
    d
}

/// Matrix that evaluates the interpolant through `from_nodes` at `to_points`
/// (row-major, `to_points.len() x from_nodes.len()`), via the barycentric
/// formula.
pub fn interpolation_matrix(from_nodes: &[f64], to_points: &[f64]) -> Vec<f64> {
    let nf = from_nodes.len();
    let w = barycentric_weights(from_nodes);
    let mut mat = vec![0.0; to_points.len() * nf];
    for (r, &x) in to_points.iter().enumerate() {
        // Exact hit on a source node: row is a unit vector.
        if let Some(j) = from_nodes.iter().position(|&xn| x == xn) {
            mat[r * nf + j] = 1.0;
            continue;
        }
        let mut denom = 0.0;
        for j in 0..nf {
            let t = w[j] / (x - from_nodes[j]);
            mat[r * nf + j] = t;
            denom += t;
        }
        for j in 0..nf {
            mat[r * nf + j] /= denom;
        }
    }
    mat
}

/// How to reduce a nodal field to a lower polynomial degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionKind {
    /// Discrete L2 projection using the working-degree LGL quadrature.
    L2,
    /// Interpolation through the target-degree Gauss-Legendre points.
    /// This is the reduction a Gauss-node collocation code applies and it
    /// reproduces the reference spectra.
    GaussInterpolation,
    /// Interpolation through the target-degree LGL points (for degree 1,
    /// the element endpoints).
    Interpolation,
}

/// Project one element's nodal values onto polynomials of degree
/// `target_degree`, re-evaluated at the working-degree nodes.
///
/// Projection of a polynomial of degree `<= target_degree` is the identity,
/// and the operation is idempotent.
pub fn project_element(
    ops: &LglOperators,
    target_degree: usize,
    kind: ProjectionKind,
    values: &[f64],
    out: &mut [f64],
) -> Result<(), OperatorError> {
    let np = ops.n_nodes();
    assert_eq!(values.len(), np);
    assert_eq!(out.len(), np);
    if target_degree > ops.degree() {
        return Err(OperatorError::TargetDegreeTooHigh {
            target: target_degree,
            degree: ops.degree(),
        });
    }
    match kind {
        ProjectionKind::L2 => {
            // Legendre modal coefficients under the discrete inner product,
            // truncated at the target degree.
            let nodes = ops.nodes();
            let weights = ops.weights();
            out.fill(0.0);
            for k in 0..=target_degree {
                let mut num = 0.0;
                let mut den = 0.0;
                for i in 0..np {
                    let pk = legendre(k, nodes[i]);
                    num += weights[i] * values[i] * pk;
                    den += weights[i] * pk * pk;
                }
                let coeff = num / den;
                for i in 0..np {
                    out[i] += coeff * legendre(k, nodes[i]);
                }
            }
        }
        ProjectionKind::GaussInterpolation | ProjectionKind::Interpolation => {
            let target_nodes = match kind {
                ProjectionKind::GaussInterpolation => gauss_nodes(target_degree + 1)?,
                _ => LglOperators::new(target_degree)?.nodes().to_vec(),
            };
            let down = interpolation_matrix(ops.nodes(), &target_nodes);
            let up = interpolation_matrix(&target_nodes, ops.nodes());
            let nt = target_degree + 1;
            let mut coarse = vec![0.0; nt];
            for (r, c) in coarse.iter_mut().enumerate() {
                *c = down[r * np..(r + 1) * np]
                    .iter()
                    .zip(values)
                    .map(|(a, v)| a * v)
                    .sum();
            }
            for (r, o) in out.iter_mut().enumerate() {
                *o = up[r * nt..(r + 1) * nt]
                    .iter()
                    .zip(&coarse)
                    .map(|(a, v)| a * v)
                    .sum();
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rejects_degree_zero() {
        assert_eq!(
            LglOperators::new(0).unwrap_err(),
            OperatorError::DegreeTooLow(0)
        );
    }

    #[test]
    fn degree_one_is_endpoints_only() {
        let ops = LglOperators::new(1).unwrap();
        assert_eq!(ops.nodes(), &[-1.0, 1.0]);
        assert_eq!(ops.weights(), &[1.0, 1.0]);
    }

    #[test]
    fn degree_three_matches_closed_form() {
        // Roots of (1 - x^2) P_3'(x): +-1, +-1/sqrt(5); weights 1/6, 5/6.
        let ops = LglOperators::new(3).unwrap();
        let s = 1.0 / 5.0_f64.sqrt();
        let expect_nodes = [-1.0, -s, s, 1.0];
        let expect_weights = [1.0 / 6.0, 5.0 / 6.0, 5.0 / 6.0, 1.0 / 6.0];
        for i in 0..4 {
            assert_abs_diff_eq!(ops.nodes()[i], expect_nodes[i], epsilon = 1e-15);
            assert_abs_diff_eq!(ops.weights()[i], expect_weights[i], epsilon = 1e-15);
        }
    }

    #[test]
    fn nodes_ascend_and_weights_sum_to_measure() {
        for n in 1..=20 {
            let ops = LglOperators::new(n).unwrap();
            assert_eq!(ops.nodes()[0], -1.0);
            assert_eq!(ops.nodes()[n], 1.0);
            for i in 0..n {
                assert!(ops.nodes()[i] < ops.nodes()[i + 1]);
            }
            assert!(ops.weights().iter().all(|&w| w > 0.0));
            let total: f64 = ops.weights().iter().sum();
            assert_abs_diff_eq!(total, 2.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn sbp_identity_holds_through_degree_twenty() {
        for n in 1..=20 {
            let ops = LglOperators::new(n).unwrap();
            let np = n + 1;
            for i in 0..np {
                for j in 0..np {
                    let q_ij = ops.weights()[i] * ops.diff_at(i, j);
                    let q_ji = ops.weights()[j] * ops.diff_at(j, i);
                    let b = if i == j { ops.boundary_at(i) } else { 0.0 };
                    assert!(
                        (q_ij + q_ji - b).abs() <= 1e-13,
                        "SBP residual {} at N={n}, ({i},{j})",
                        q_ij + q_ji - b
                    );
                }
            }
        }
    }

    #[test]
    fn differentiation_is_exact_for_monomials() {
        for n in 1..=20 {
            let ops = LglOperators::new(n).unwrap();
            let np = n + 1;
            let mut out = vec![0.0; np];
            for k in 0..=n {
                let vals: Vec<f64> = ops.nodes().iter().map(|&x| x.powi(k as i32)).collect();
                ops.apply_diff(&vals, &mut out);
                for (i, &x) in ops.nodes().iter().enumerate() {
                    let exact = if k == 0 {
                        0.0
                    } else {
                        k as f64 * x.powi(k as i32 - 1)
                    };
                    assert!(
                        (out[i] - exact).abs() <= 1e-12,
                        "derivative of x^{k} failed at N={n}, node {i}: {} vs {exact}",
                        out[i]
                    );
                }
            }
        }
    }

    #[test]
    fn quadrature_exact_to_degree_2n_minus_1() {
        for n in 1..=15 {
            let ops = LglOperators::new(n).unwrap();
            for k in 0..=(2 * n - 1) {
                let q: f64 = ops
                    .nodes()
                    .iter()
                    .zip(ops.weights())
                    .map(|(&x, &w)| w * x.powi(k as i32))
                    .sum();
                let exact = if k % 2 == 0 {
                    2.0 / (k as f64 + 1.0)
                } else {
                    0.0
                };
                assert!(
                    (q - exact).abs() <= 1e-12,
                    "quadrature of x^{k} failed at N={n}: {q} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn l2_projection_fixes_low_degree_polynomials() {
        let ops = LglOperators::new(3).unwrap();
        let mut out = vec![0.0; 4];

        let constant = vec![2.5; 4];
        project_element(&ops, 0, ProjectionKind::L2, &constant, &mut out).unwrap();
        for &v in &out {
            assert_abs_diff_eq!(v, 2.5, epsilon = 1e-14);
        }

        let linear: Vec<f64> = ops.nodes().iter().map(|&x| 0.3 - 1.7 * x).collect();
        project_element(&ops, 1, ProjectionKind::L2, &linear, &mut out).unwrap();
        for (o, l) in out.iter().zip(&linear) {
            assert_abs_diff_eq!(o, l, epsilon = 1e-14);
        }
    }

    #[test]
    fn l2_projection_is_idempotent() {
        let ops = LglOperators::new(5).unwrap();
        let vals: Vec<f64> = ops
            .nodes()
            .iter()
            .map(|&x| (3.1 * x).sin() + 0.4 * x * x)
            .collect();
        let mut once = vec![0.0; 6];
        let mut twice = vec![0.0; 6];
        project_element(&ops, 2, ProjectionKind::L2, &vals, &mut once).unwrap();
        project_element(&ops, 2, ProjectionKind::L2, &once, &mut twice).unwrap();
        for (a, b) in once.iter().zip(&twice) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn interpolation_projection_matches_endpoints_for_degree_one() {
        let ops = LglOperators::new(3).unwrap();
        let vals: Vec<f64> = ops.nodes().iter().map(|&x| (2.0 * x).cos()).collect();
        let mut out = vec![0.0; 4];
        project_element(&ops, 1, ProjectionKind::Interpolation, &vals, &mut out).unwrap();
        // Degree-1 LGL nodes are the endpoints, so the result is the chord.
        assert_abs_diff_eq!(out[0], vals[0], epsilon = 1e-14);
        assert_abs_diff_eq!(out[3], vals[3], epsilon = 1e-14);
        let slope = (vals[3] - vals[0]) / 2.0;
        for (i, &x) in ops.nodes().iter().enumerate() {
            let lin = vals[0] + slope * (x + 1.0);
            assert_abs_diff_eq!(out[i], lin, epsilon = 1e-14);
        }
    }

    #[test]
    fn projection_rejects_target_above_working_degree() {
        let ops = LglOperators::new(3).unwrap();
        let vals = vec![0.0; 4];
        let mut out = vec![0.0; 4];
        assert!(matches!(
            project_element(&ops, 4, ProjectionKind::L2, &vals, &mut out),
            Err(OperatorError::TargetDegreeTooHigh { .. })
        ));
    }

    #[test]
    fn gauss_nodes_match_closed_forms() {
        let g2 = gauss_nodes(2).unwrap();
        let s = 1.0 / 3.0_f64.sqrt();
        assert_abs_diff_eq!(g2[0], -s, epsilon = 1e-15);
        assert_abs_diff_eq!(g2[1], s, epsilon = 1e-15);
        let g3 = gauss_nodes(3).unwrap();
        let t = (3.0_f64 / 5.0).sqrt();
        assert_abs_diff_eq!(g3[0], -t, epsilon = 1e-15);
        assert_abs_diff_eq!(g3[1], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g3[2], t, epsilon = 1e-15);
        // Roots of P_n for a range of n.
        for n in 1..=16 {
            for &x in &gauss_nodes(n).unwrap() {
                assert!(legendre(n, x).abs() <= 1e-13);
            }
        }
    }

    #[test]
    fn gauss_interpolation_projection_fixes_low_degree_polynomials() {
        let ops = LglOperators::new(4).unwrap();
        let vals: Vec<f64> = ops.nodes().iter().map(|&x| 1.5 - 0.8 * x).collect();
        let mut out = vec![0.0; 5];
        project_element(&ops, 1, ProjectionKind::GaussInterpolation, &vals, &mut out).unwrap();
        for (o, v) in out.iter().zip(&vals) {
            assert_abs_diff_eq!(o, v, epsilon = 1e-14);
        }
        // Idempotent.
        let curved: Vec<f64> = ops.nodes().iter().map(|&x| (2.2 * x).sin()).collect();
        let mut once = vec![0.0; 5];
        let mut twice = vec![0.0; 5];
        project_element(&ops, 1, ProjectionKind::GaussInterpolation, &curved, &mut once).unwrap();
        project_element(&ops, 1, ProjectionKind::GaussInterpolation, &once, &mut twice).unwrap();
        for (a, b) in once.iter().zip(&twice) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn interpolation_matrix_reproduces_source_nodes() {
        let ops = LglOperators::new(4).unwrap();
        let mat = interpolation_matrix(ops.nodes(), ops.nodes());
        let np = ops.n_nodes();
        for i in 0..np {
            for j in 0..np {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(mat[i * np + j], expect, epsilon = 1e-14);
            }
        }
    }
}
