//! Explicit time integration: three-stage third-order strong stability
//! preserving Runge-Kutta, a five-stage fourth-order low-storage
//! Runge-Kutta, and CFL-based step-size control.

use crate::rhs::{Rhs, RhsError};

/// Carpenter-Kennedy five-stage fourth-order 2N-storage coefficient set.
pub const LSRK54_A: [f64; 5] = [
    0.0,
    -567301805773.0 / 1357537059087.0,
    -2404267990393.0 / 2016746695238.0,
    -3550918686646.0 / 2091501179385.0,
    -1275806237668.0 / 842570457699.0,
];
pub const LSRK54_B: [f64; 5] = [
    1432997174477.0 / 9575080441755.0,
    5161836677717.0 / 13612068292357.0,
    1720146321549.0 / 2090206949498.0,
    3134564353537.0 / 4481467310338.0,
    2277821191437.0 / 14882151754819.0,
];

/// Scratch buffers reused across steps.
#[derive(Debug, Clone)]
pub struct Workspace {
    k: Vec<f64>,
    stage: Vec<f64>,
}

impl Workspace {
    pub fn new(dim: usize) -> Self {
        Self {
            k: vec![0.0; dim],
            stage: vec![0.0; dim],
        }
    }
}

/// One step of the Shu-Osher form SSP-RK3:
/// `u1 = u + dt L(u)`, `u2 = 3/4 u + 1/4 (u1 + dt L(u1))`,
/// `u <- 1/3 u + 2/3 (u2 + dt L(u2))`.
pub fn step_ssprk3<R: Rhs>(
    rhs: &R,
    u: &mut [f64],
    dt: f64,
    ws: &mut Workspace,
) -> Result<(), RhsError> {
    debug_assert!(dt > 0.0);
    let n = u.len();
    assert_eq!(rhs.dim(), n);

    rhs.eval(u, &mut ws.k)?;
    for i in 0..n {
        ws.stage[i] = u[i] + dt * ws.k[i];
    }

    rhs.eval(&ws.stage, &mut ws.k)?;
    for i in 0..n {
        ws.stage[i] = 0.75 * u[i] + 0.25 * (ws.stage[i] + dt * ws.k[i]);
    }

    rhs.eval(&ws.stage, &mut ws.k)?;
    for i in 0..n {
        u[i] = (u[i] + 2.0 * (ws.stage[i] + dt * ws.k[i])) / 3.0;
    }
    Ok(())
}

/// One step of the five-stage fourth-order low-storage Runge-Kutta scheme.
pub fn step_lsrk54<R: Rhs>(
    rhs: &R,
    u: &mut [f64],
    dt: f64,
    ws: &mut Workspace,
) -> Result<(), RhsError> {
    debug_assert!(dt > 0.0);
    let n = u.len();
    assert_eq!(rhs.dim(), n);

    ws.k.fill(0.0);
    for s in 0..5 {
        rhs.eval(u, &mut ws.stage)?;
        for i in 0..n {
            ws.k[i] = LSRK54_A[s] * ws.k[i] + dt * ws.stage[i];
            u[i] += LSRK54_B[s] * ws.k[i];
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Integrator {
    SspRk3,
    LsRk54,
}

impl Integrator {
    pub fn step<R: Rhs>(
        &self,
        rhs: &R,
        u: &mut [f64],
        dt: f64,
        ws: &mut Workspace,
    ) -> Result<(), RhsError> {
        match self {
            Integrator::SspRk3 => step_ssprk3(rhs, u, dt, ws),
            Integrator::LsRk54 => step_lsrk54(rhs, u, dt, ws),
        }
    }
}

/// CFL-based step size `dt = CFL h / ((N+1) lambda_max)`, recomputed from
/// the current largest wave speed every step.
#[derive(Debug, Clone, Copy)]
pub struct TimeStepController {
    pub cfl: f64,
    pub element_size: f64,
    pub degree: usize,
    /// Step used when the wave speed vanishes.
    pub fallback_dt: f64,
}

impl TimeStepController {
    pub fn new(cfl: f64, element_size: f64, degree: usize) -> Self {
        Self {
            cfl,
            element_size,
            degree,
            fallback_dt: 1e-3,
        }
    }

    pub fn dt(&self, lambda_max: f64) -> f64 {
        if lambda_max <= 0.0 {
            return self.fallback_dt;
        }
        self.cfl * self.element_size / ((self.degree as f64 + 1.0) * lambda_max)
    }
}

/// Stability polynomial of the low-storage scheme, computed symbolically
/// from the coefficient arrays: returns `c` with
/// `R(z) = sum_k c[k] z^k`.
pub fn lsrk54_stability_polynomial() -> [f64; 6] {
    // Propagate u(z) and k(z) as polynomials through the 2N-storage update.
    let mut u = [0.0; 6];
    let mut k = [0.0; 6];
    u[0] = 1.0;
    for s in 0..5 {
        // k = A_s k + z * u
        let mut k_new = [0.0; 6];
        for d in 0..6 {
            k_new[d] = LSRK54_A[s] * k[d];
        }
        for d in 0..5 {
            k_new[d + 1] += u[d];
        }
        k = k_new;
        for d in 0..6 {
            u[d] += LSRK54_B[s] * k[d];
        }
    }
    u
}
