//! Conserved states and the entropy algebra of the compressible Euler
//! equations with a perfect gas.

/// Adiabatic coefficient of the perfect gas.
pub const GAMMA: f64 = 1.4;

/// Coordinate direction of a flux or normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn index(&self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
        }
    }
}

/// Conserved variables `(rho, rho v1, rho v2, rho E)`. One-dimensional
/// states set the second momentum to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerState {
    pub rho: f64,
    pub mom: [f64; 2],
    pub rho_e: f64,
}

impl EulerState {
    pub fn new(rho: f64, mom: [f64; 2], rho_e: f64) -> Self {
        Self { rho, mom, rho_e }
    }

    /// Build a state from primitive variables `(rho, v, p)` using the
    /// perfect-gas relation `rho E = p/(gamma-1) + rho |v|^2 / 2`.
    pub fn from_primitive(rho: f64, v: [f64; 2], p: f64) -> Self {
        let rho_e = p / (GAMMA - 1.0) + 0.5 * rho * (v[0] * v[0] + v[1] * v[1]);
        Self {
            rho,
            mom: [rho * v[0], rho * v[1]],
            rho_e,
        }
    }

    pub fn from_conserved(u: [f64; 4]) -> Self {
        Self {
            rho: u[0],
            mom: [u[1], u[2]],
            rho_e: u[3],
        }
    }

    pub fn conserved(&self) -> [f64; 4] {
        [self.rho, self.mom[0], self.mom[1], self.rho_e]
    }

    pub fn velocity(&self) -> [f64; 2] {
        [self.mom[0] / self.rho, self.mom[1] / self.rho]
    }

    pub fn pressure(&self) -> f64 {
        let v2 = (self.mom[0] * self.mom[0] + self.mom[1] * self.mom[1]) / self.rho;
        (GAMMA - 1.0) * (self.rho_e - 0.5 * v2)
    }

    pub fn sound_speed(&self) -> f64 {
        (GAMMA * self.pressure() / self.rho).sqrt()
    }

    /// Physically admissible: positive density and pressure.
    pub fn is_admissible(&self) -> bool {
        self.rho > 0.0 && self.pressure() > 0.0 && self.conserved().iter().all(|v| v.is_finite())
    }
}

/// Thermodynamic entropy `s = ln(p / rho^gamma)`.
pub fn thermo_entropy(state: &EulerState) -> f64 {
    (state.pressure() / state.rho.powf(GAMMA)).ln()
}

/// Mathematical entropy `U = -rho s / (gamma - 1)`.
pub fn entropy(state: &EulerState) -> f64 {
    -state.rho * thermo_entropy(state) / (GAMMA - 1.0)
}

/// Entropy flux `F = -rho v_d s / (gamma - 1)` in direction `axis`.
pub fn entropy_flux(state: &EulerState, axis: Axis) -> f64 {
    -state.mom[axis.index()] * thermo_entropy(state) / (GAMMA - 1.0)
}

/// Entropy variables `w = dU/du`.
pub fn entropy_variables(state: &EulerState) -> [f64; 4] {
    let p = state.pressure();
    let v = state.velocity();
    let s = thermo_entropy(state);
    let beta = state.rho / p;
    [
        (GAMMA - s) / (GAMMA - 1.0) - 0.5 * beta * (v[0] * v[0] + v[1] * v[1]),
        beta * v[0],
        beta * v[1],
        -beta,
    ]
}

/// Entropy potential `Psi = w . f - F = rho v_d` in direction `axis`.
pub fn entropy_potential(state: &EulerState, axis: Axis) -> f64 {
    state.mom[axis.index()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_admissible(rng: &mut ChaCha8Rng) -> EulerState {
        EulerState::from_primitive(
            rng.gen_range(0.1..3.0),
            [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)],
            rng.gen_range(0.5..30.0),
        )
    }

    #[test]
    fn primitive_round_trip() {
        let s = EulerState::from_primitive(1.0, [0.1, 0.0], 20.0);
        assert_abs_diff_eq!(s.rho_e, 50.005, epsilon = 1e-12);
        assert_abs_diff_eq!(s.pressure(), 20.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.velocity()[0], 0.1, epsilon = 1e-14);
        assert!(s.is_admissible());
    }

    #[test]
    fn admissibility_detects_violations() {
        let neg_rho = EulerState::new(-0.1, [0.0, 0.0], 1.0);
        assert!(!neg_rho.is_admissible());
        // Kinetic energy exceeding total energy gives negative pressure.
        let neg_p = EulerState::new(1.0, [10.0, 0.0], 1.0);
        assert!(!neg_p.is_admissible());
    }

    #[test]
    fn entropy_variables_match_finite_difference_gradient() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let step = 1e-7;
        for _ in 0..200 {
            let state = random_admissible(&mut rng);
            let w = entropy_variables(&state);
            let u0 = state.conserved();
            for c in 0..4 {
                let mut up = u0;
                let mut dn = u0;
                up[c] += step;
                dn[c] -= step;
                let fd = (entropy(&EulerState::from_conserved(up))
                    - entropy(&EulerState::from_conserved(dn)))
                    / (2.0 * step);
                let scale = w[c].abs().max(1.0);
                assert!(
                    ((w[c] - fd) / scale).abs() <= 1e-6,
                    "component {c}: w = {}, fd = {fd}",
                    w[c]
                );
            }
        }
    }

    #[test]
    fn entropy_potential_identity() {
        // Psi = w . f - F must equal rho v_d.
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for _ in 0..200 {
            let state = random_admissible(&mut rng);
            let w = entropy_variables(&state);
            for axis in [Axis::X, Axis::Y] {
                let f = crate::euler::flux::physical_flux(&state, axis);
                let psi: f64 = w.iter().zip(&f).map(|(wi, fi)| wi * fi).sum::<f64>()
                    - entropy_flux(&state, axis);
                assert_abs_diff_eq!(psi, entropy_potential(&state, axis), epsilon = 1e-10);
            }
        }
    }
}
