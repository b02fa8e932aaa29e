//! Two-point numerical fluxes for the compressible Euler equations.

use thiserror::Error;

use crate::euler::state::{
    entropy_potential, entropy_variables, Axis, EulerState, GAMMA,
};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum EulerFluxError {
    #[error("inadmissible state passed to a numerical flux")]
    InadmissibleState,
    #[error("unknown Euler flux id '{0}'")]
    UnknownFlux(String),
}

/// Physical flux in direction `axis`:
/// `(rho v_n, rho v_n v + p e_n, (rho E + p) v_n)`.
pub fn physical_flux(state: &EulerState, axis: Axis) -> [f64; 4] {
    let d = axis.index();
    let v = state.velocity();
    let p = state.pressure();
    let vn = v[d];
    let mut f = [
        state.mom[d],
        state.mom[0] * vn,
        state.mom[1] * vn,
        (state.rho_e + p) * vn,
    ];
    f[1 + d] += p;
    f
}

/// Logarithmic mean `(b - a) / (ln b - ln a)` with a series branch near
/// coincident arguments to avoid cancellation; `log_mean(a, a) = a`.
pub fn log_mean(a: f64, b: f64) -> f64 {
    assert!(a > 0.0 && b > 0.0, "logarithmic mean needs positive arguments");
    let u = ((a - b) / (a + b)).powi(2);
    if u < 1e-4 {
        0.5 * (a + b) / (1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u / 7.0)))
    } else {
        (b - a) / (b / a).ln()
    }
}

const fn avg(a: f64, b: f64) -> f64 {
    0.5 * (a + b)
}

/// Selector for the Euler two-point fluxes. Command-line ids:
/// `euler-central`, `euler-ec-chandrashekar`, `euler-kg`, `euler-rusanov`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerFlux {
    Central,
    ChandrashekarEc,
    KennedyGruber,
    Rusanov,
}

impl EulerFlux {
    pub fn from_name(name: &str) -> Result<Self, EulerFluxError> {
        match name {
            "euler-central" => Ok(EulerFlux::Central),
            "euler-ec-chandrashekar" => Ok(EulerFlux::ChandrashekarEc),
            "euler-kg" => Ok(EulerFlux::KennedyGruber),
            "euler-rusanov" => Ok(EulerFlux::Rusanov),
            other => Err(EulerFluxError::UnknownFlux(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EulerFlux::Central => "euler-central",
            EulerFlux::ChandrashekarEc => "euler-ec-chandrashekar",
            EulerFlux::KennedyGruber => "euler-kg",
            EulerFlux::Rusanov => "euler-rusanov",
        }
    }

    /// Evaluate the two-point flux, rejecting inadmissible inputs.
    pub fn evaluate(
        &self,
        left: &EulerState,
        right: &EulerState,
        axis: Axis,
    ) -> Result<[f64; 4], EulerFluxError> {
        if !left.is_admissible() || !right.is_admissible() {
            return Err(EulerFluxError::InadmissibleState);
        }
        Ok(self.evaluate_admissible(left, right, axis))
    }

    /// Flux kernel for states already known to be admissible.
    pub(crate) fn evaluate_admissible(
        &self,
        left: &EulerState,
        right: &EulerState,
        axis: Axis,
    ) -> [f64; 4] {
        match self {
            EulerFlux::Central => central(left, right, axis),
            EulerFlux::ChandrashekarEc => chandrashekar_ec(left, right, axis),
            EulerFlux::KennedyGruber => kennedy_gruber(left, right, axis),
            EulerFlux::Rusanov => rusanov(left, right, axis),
        }
    }
}

fn central(left: &EulerState, right: &EulerState, axis: Axis) -> [f64; 4] {
    let fl = physical_flux(left, axis);
    let fr = physical_flux(right, axis);
    [
        avg(fl[0], fr[0]),
        avg(fl[1], fr[1]),
        avg(fl[2], fr[2]),
        avg(fl[3], fr[3]),
    ]
}

/// Entropy-conserving and kinetic-energy-preserving flux built from the
/// logarithmic means of density and inverse temperature.
fn chandrashekar_ec(left: &EulerState, right: &EulerState, axis: Axis) -> [f64; 4] {
    let d = axis.index();
    let vl = left.velocity();
    let vr = right.velocity();
    let pl = left.pressure();
    let pr = right.pressure();

    let rho_ln = log_mean(left.rho, right.rho);
    let rho_over_p_ln = log_mean(left.rho / pl, right.rho / pr);
    let p_hat = avg(left.rho, right.rho) / avg(left.rho / pl, right.rho / pr);

    let v_avg = [avg(vl[0], vr[0]), avg(vl[1], vr[1])];
    let v2_avg = [
        avg(vl[0] * vl[0], vr[0] * vr[0]),
        avg(vl[1] * vl[1], vr[1] * vr[1]),
    ];
    let h_hat = 1.0 / (rho_over_p_ln * (GAMMA - 1.0))
        + (v_avg[0] * v_avg[0] + v_avg[1] * v_avg[1])
        - 0.5 * (v2_avg[0] + v2_avg[1])
        + p_hat / rho_ln;

    let f_rho = rho_ln * v_avg[d];
    let mut f = [
        f_rho,
        f_rho * v_avg[0],
        f_rho * v_avg[1],
        f_rho * h_hat,
    ];
    f[1 + d] += p_hat;
    f
}

/// Kennedy-Gruber splitting: arithmetic means of density, velocity,
/// pressure, and specific total energy.
fn kennedy_gruber(left: &EulerState, right: &EulerState, axis: Axis) -> [f64; 4] {
    let d = axis.index();
    let vl = left.velocity();
    let vr = right.velocity();
    let rho_avg = avg(left.rho, right.rho);
    let p_avg = avg(left.pressure(), right.pressure());
    let e_avg = avg(left.rho_e / left.rho, right.rho_e / right.rho);
    let v_avg = [avg(vl[0], vr[0]), avg(vl[1], vr[1])];

    let vn = v_avg[d];
    let mut f = [
        rho_avg * vn,
        rho_avg * vn * v_avg[0],
        rho_avg * vn * v_avg[1],
        rho_avg * vn * e_avg + p_avg * vn,
    ];
    f[1 + d] += p_avg;
    f
}

/// Central flux with Rusanov dissipation,
/// `lambda = max(|v_n,L| + c_L, |v_n,R| + c_R)`.
fn rusanov(left: &EulerState, right: &EulerState, axis: Axis) -> [f64; 4] {
    let d = axis.index();
    let lambda = (left.velocity()[d].abs() + left.sound_speed())
        .max(right.velocity()[d].abs() + right.sound_speed());
    let mut f = central(left, right, axis);
    let ul = left.conserved();
    let ur = right.conserved();
    for c in 0..4 {
        f[c] -= 0.5 * lambda * (ur[c] - ul[c]);
    }
    f
}

/// Dissipation coefficient of the entropy-conserving mass flux relative to
/// the central mass flux,
/// `R1 = ({rho} - rho_ln) 2 {v_n} / (rho_R - rho_L) + (v_n,R - v_n,L) / 2`.
///
/// Negative values mark anti-dissipation; coincident densities return the
/// analytic limit `(v_n,R - v_n,L) / 2`.
pub fn mass_dissipation_coefficient_ec(
    left: &EulerState,
    right: &EulerState,
    axis: Axis,
) -> f64 {
    let d = axis.index();
    let vl = left.velocity()[d];
    let vr = right.velocity()[d];
    let dv = 0.5 * (vr - vl);
    let drho = right.rho - left.rho;
    let rho_avg = avg(left.rho, right.rho);
    if drho.abs() <= 1e-8 * (left.rho + right.rho) {
        // ({rho} - rho_ln) ~ drho^2 / (12 {rho}); leading-order limit.
        return drho * avg(vl, vr) / (6.0 * rho_avg) + dv;
    }
    let rho_ln = log_mean(left.rho, right.rho);
    (rho_avg - rho_ln) * 2.0 * avg(vl, vr) / drho + dv
}

/// Residual of the entropy condition in direction `axis`,
/// `(w_R - w_L) . f* - (Psi_R - Psi_L)`; zero for an entropy-conserving
/// flux, nonpositive for an entropy-dissipative one.
pub fn ec_condition_residual(
    flux: EulerFlux,
    left: &EulerState,
    right: &EulerState,
    axis: Axis,
) -> Result<f64, EulerFluxError> {
    let f = flux.evaluate(left, right, axis)?;
    let wl = entropy_variables(left);
    let wr = entropy_variables(right);
    let jump: f64 = (0..4).map(|c| (wr[c] - wl[c]) * f[c]).sum();
    Ok(jump - (entropy_potential(right, axis) - entropy_potential(left, axis)))
}
