//! Finite-difference Jacobians of semidiscrete operators and their dense
//! eigenspectra.
//!
//! The Jacobian is built column by column with central differences about a
//! baseflow. Eigenvalues whose real part lies within the finite-difference
//! noise band are reported but should be interpreted as zero.

use faer::linalg::solvers::Eigen;
pub use faer::{Mat, MatRef};
use num_complex::Complex;
use thiserror::Error;

use crate::rhs::{Rhs, RhsError};

/// Default central-difference step.
pub const DEFAULT_FD_EPSILON: f64 = 1e-8;
/// Reduced step tried when a perturbed state is not evaluable.
pub const FALLBACK_FD_EPSILON: f64 = 1e-9;
/// Real parts with magnitude below this are finite-difference noise.
pub const ZERO_BAND: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("rhs evaluation failed for Jacobian column {column}: {source}")]
    RhsFailed {
        column: usize,
        #[source]
        source: RhsError,
    },
    #[error("dense eigensolver did not converge")]
    EigensolverFailed,
}

/// Full spectrum of a semidiscrete Jacobian.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<Complex<f64>>,
    pub max_real_part: f64,
    /// Index into `eigenvalues` of the maximizer.
    pub argmax: usize,
    pub dof: usize,
    /// Finite-difference step used for the Jacobian, when applicable.
    pub fd_epsilon: Option<f64>,
}

impl SpectrumReport {
    /// Whether the maximum real part lies within the finite-difference
    /// accuracy band and should be read as zero.
    pub fn max_real_part_numerically_zero(&self) -> bool {
        self.max_real_part.abs() <= ZERO_BAND
    }

    /// The eigenvalue with the largest real part.
    pub fn worst_eigenvalue(&self) -> Complex<f64> {
        self.eigenvalues[self.argmax]
    }
}

/// Eigenvector of the maximum-real-part eigenvalue, made real and rescaled
/// to a requested peak amplitude.
#[derive(Debug, Clone)]
pub struct Eigenmode {
    pub values: Vec<f64>,
    pub eigenvalue: Complex<f64>,
    /// Relative eigenpair residual `||A v - lambda v|| / ||v||`; values
    /// above `1e-6` indicate a defective eigenvalue.
    pub residual: f64,
    pub peak: f64,
}

impl Eigenmode {
    pub fn is_reliable(&self) -> bool {
        self.residual <= 1e-6
    }
}

/// Central-difference Jacobian of `rhs` about `baseflow`:
/// `column j = (rhs(u + eps e_j) - rhs(u - eps e_j)) / (2 eps)`.
///
/// If a perturbed evaluation fails (e.g. an inadmissible Euler state) the
/// column is retried with [`FALLBACK_FD_EPSILON`] before giving up.
pub fn fd_jacobian<R: Rhs>(
    rhs: &R,
    baseflow: &[f64],
    epsilon: f64,
) -> Result<Mat<f64>, SpectralError> {
    let n = rhs.dim();
    assert_eq!(baseflow.len(), n);
    assert!(epsilon > 0.0);

    let mut jac = Mat::zeros(n, n);
    let mut state = baseflow.to_vec();
    let mut plus = vec![0.0; n];
    let mut minus = vec![0.0; n];

    for j in 0..n {
        let mut eps = epsilon;
        loop {
            match fd_column(rhs, &mut state, baseflow[j], j, eps, &mut plus, &mut minus) {
                Ok(()) => break,
                Err(_) if eps > FALLBACK_FD_EPSILON => eps = FALLBACK_FD_EPSILON,
                Err(source) => return Err(SpectralError::RhsFailed { column: j, source }),
            }
        }
        for i in 0..n {
            jac[(i, j)] = (plus[i] - minus[i]) / (2.0 * eps);
        }
    }
    Ok(jac)
}

fn fd_column<R: Rhs>(
    rhs: &R,
    state: &mut [f64],
    base_j: f64,
    j: usize,
    eps: f64,
    plus: &mut [f64],
    minus: &mut [f64],
) -> Result<(), RhsError> {
    state[j] = base_j + eps;
    let up = rhs.eval(state, plus);
    state[j] = base_j - eps;
    let down = up.and_then(|()| rhs.eval(state, minus));
    state[j] = base_j;
    down
}

/// Fourth-order five-point variant of [`fd_jacobian`]:
/// `column j = (-f(+2e) + 8 f(+e) - 8 f(-e) + f(-2e)) / (12 e)`.
///
/// Removes the leading truncation term, which allows a larger step and a
/// lower eigenvalue noise floor on large systems.
pub fn fd_jacobian_order4<R: Rhs>(
    rhs: &R,
    baseflow: &[f64],
    epsilon: f64,
) -> Result<Mat<f64>, SpectralError> {
    let n = rhs.dim();
    assert_eq!(baseflow.len(), n);
    assert!(epsilon > 0.0);

    let mut jac = Mat::zeros(n, n);
    let mut state = baseflow.to_vec();
    let mut f = [vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]];

    for j in 0..n {
        let mut eps = epsilon;
        loop {
            let mut attempt = || -> Result<(), RhsError> {
                for (k, shift) in [2.0, 1.0, -1.0, -2.0].iter().enumerate() {
                    state[j] = baseflow[j] + shift * eps;
                    let r = rhs.eval(&state, &mut f[k]);
                    state[j] = baseflow[j];
                    r?;
                }
                Ok(())
            };
            match attempt() {
                Ok(()) => break,
                Err(_) if eps > FALLBACK_FD_EPSILON => eps = FALLBACK_FD_EPSILON,
                Err(source) => return Err(SpectralError::RhsFailed { column: j, source }),
            }
        }
        for i in 0..n {
            jac[(i, j)] = (-f[0][i] + 8.0 * f[1][i] - 8.0 * f[2][i] + f[3][i]) / (12.0 * eps);
        }
    }
    Ok(jac)
}

/// Full complex spectrum of a dense real matrix.
pub fn eigenspectrum(matrix: MatRef<'_, f64>) -> Result<SpectrumReport, SpectralError> {
    assert_eq!(matrix.nrows(), matrix.ncols());
    let eigenvalues = matrix
        .eigenvalues()
        .map_err(|_| SpectralError::EigensolverFailed)?;
    let argmax = eigenvalues
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.re.total_cmp(&b.1.re))
        .map(|(i, _)| i)
        .expect("empty spectrum");
    Ok(SpectrumReport {
        max_real_part: eigenvalues[argmax].re,
        argmax,
        dof: matrix.nrows(),
        fd_epsilon: None,
        eigenvalues,
    })
}

/// Extract the eigenvector of the maximum-real-part eigenvalue and scale
/// its real part so the largest entry magnitude equals `peak`.
pub fn extract_worst_mode(
    matrix: MatRef<'_, f64>,
    peak: f64,
) -> Result<Eigenmode, SpectralError> {
    assert_eq!(matrix.nrows(), matrix.ncols());
    assert!(peak > 0.0);
    let n = matrix.nrows();
    let eig = Eigen::new_from_real(matrix).map_err(|_| SpectralError::EigensolverFailed)?;

    let s = eig.S().column_vector().iter().cloned().collect::<Vec<_>>();
    let argmax = s
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.re.total_cmp(&b.1.re))
        .map(|(i, _)| i)
        .expect("empty spectrum");
    let lambda = s[argmax];
    let v: Vec<Complex<f64>> = eig.U().col(argmax).iter().cloned().collect();

    // Relative eigenpair residual in complex arithmetic.
    let mut residual_sq = 0.0;
    let mut norm_sq = 0.0;
    for i in 0..n {
        let mut av = Complex::new(0.0, 0.0);
        for (j, vj) in v.iter().enumerate() {
            av += matrix[(i, j)] * vj;
        }
        residual_sq += (av - lambda * v[i]).norm_sqr();
        norm_sq += v[i].norm_sqr();
    }
    let residual = (residual_sq / norm_sq).sqrt();

    // A complex pair contributes through its real part; fall back to the
    // imaginary part if the real part degenerates.
    let max_abs = |xs: &[f64]| xs.iter().fold(0.0_f64, |m, &x| m.max(x.abs()));
    let re: Vec<f64> = v.iter().map(|z| z.re).collect();
    let im: Vec<f64> = v.iter().map(|z| z.im).collect();
    let total = v.iter().fold(0.0_f64, |m, z| m.max(z.norm()));
    let mut values = if max_abs(&re) >= 1e-8 * total { re } else { im };
    let scale = peak / max_abs(&values);
    for x in values.iter_mut() {
        *x *= scale;
    }

    Ok(Eigenmode {
        values,
        eigenvalue: lambda,
        residual,
        peak,
    })
}
