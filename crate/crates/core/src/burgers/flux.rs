//! Two-point numerical fluxes for Burgers' equation `u_t + (u^2/2)_x = 0`
//! and the quadratic-entropy algebra used to classify them.
//!
//! Every flux can be written as
//! `f*(uL, uR) = central(uL, uR) - R(uL, uR) * (uR - uL) / 2`
//! with a scalar dissipation coefficient `R`; a negative `R` is the
//! anti-dissipation mechanism behind local energy instability.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FluxError {
    #[error("split parameter alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("unknown Burgers flux id '{0}'")]
    UnknownFlux(String),
}

/// Physical flux `f(u) = u^2 / 2`.
pub fn physical_flux(u: f64) -> f64 {
    0.5 * u * u
}

/// Entropy `U(u) = u^2 / 2`.
pub fn entropy(u: f64) -> f64 {
    0.5 * u * u
}

/// Entropy flux `F(u) = u^3 / 3`.
pub fn entropy_flux(u: f64) -> f64 {
    u * u * u / 3.0
}

/// Entropy variable `w(u) = U'(u) = u`.
pub fn entropy_variable(u: f64) -> f64 {
    u
}

/// Entropy potential `Psi(u) = w f - F = u^3 / 6`.
pub fn entropy_potential(u: f64) -> f64 {
    u * u * u / 6.0
}

/// Selector for the two-point fluxes implemented here. The string ids used
/// on the command line are `central`, `alpha-split`, `ec`, `tadmor`,
/// `ed-rusanov`, `es-rusanov`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BurgersFlux {
    /// `(f(uL) + f(uR)) / 2`.
    Central,
    /// Split flux of the alpha-blended form; `alpha = 1` is central,
    /// `alpha = 2/3` is entropy-conserving.
    AlphaSplit { alpha: f64 },
    /// Entropy-conserving flux `(uL^2 + uL uR + uR^2) / 6`.
    EntropyConserving,
    /// Entropy-conserving coefficient clipped at zero to remove
    /// anti-dissipation.
    TadmorPositive,
    /// Entropy-conserving flux plus Rusanov-type viscosity.
    EdRusanov,
    /// Standard Rusanov flux.
    EsRusanov,
}

impl BurgersFlux {
    pub fn alpha_split(alpha: f64) -> Result<Self, FluxError> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(FluxError::AlphaOutOfRange(alpha));
        }
        Ok(BurgersFlux::AlphaSplit { alpha })
    }

    /// Parse a command-line flux id. `alpha-split` takes its parameter from
    /// `alpha`.
    pub fn from_name(name: &str, alpha: f64) -> Result<Self, FluxError> {
        match name {
            "central" => Ok(BurgersFlux::Central),
            "alpha-split" => Self::alpha_split(alpha),
            "ec" => Ok(BurgersFlux::EntropyConserving),
            "tadmor" => Ok(BurgersFlux::TadmorPositive),
            "ed-rusanov" => Ok(BurgersFlux::EdRusanov),
            "es-rusanov" => Ok(BurgersFlux::EsRusanov),
            other => Err(FluxError::UnknownFlux(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BurgersFlux::Central => "central",
            BurgersFlux::AlphaSplit { .. } => "alpha-split",
            BurgersFlux::EntropyConserving => "ec",
            BurgersFlux::TadmorPositive => "tadmor",
            BurgersFlux::EdRusanov => "ed-rusanov",
            BurgersFlux::EsRusanov => "es-rusanov",
        }
    }

    /// Evaluate the two-point flux.
    pub fn evaluate(&self, ul: f64, ur: f64) -> f64 {
        let central = 0.5 * (physical_flux(ul) + physical_flux(ur));
        central - 0.5 * self.dissipation_coefficient(ul, ur) * (ur - ul)
    }

    /// Dissipation coefficient `R` in
    /// `f* = central - R (uR - uL) / 2`. Coincident states return the
    /// analytic limit.
    pub fn dissipation_coefficient(&self, ul: f64, ur: f64) -> f64 {
        let du = ur - ul;
        match self {
            BurgersFlux::Central => 0.0,
            BurgersFlux::AlphaSplit { alpha } => 0.5 * (1.0 - alpha) * du,
            BurgersFlux::EntropyConserving => du / 6.0,
            BurgersFlux::TadmorPositive => (du / 6.0).max(0.0),
            BurgersFlux::EdRusanov => du / 6.0 + ul.abs().max(ur.abs()),
            BurgersFlux::EsRusanov => ul.abs().max(ur.abs()),
        }
    }
}

/// Residual of the entropy condition,
/// `(w(uR) - w(uL)) f*(uL, uR) - (Psi(uR) - Psi(uL))`.
///
/// Zero for an entropy-conserving flux, nonpositive for an
/// entropy-dissipative one.
pub fn ec_condition_residual(flux: BurgersFlux, ul: f64, ur: f64) -> f64 {
    let f = flux.evaluate(ul, ur);
    (entropy_variable(ur) - entropy_variable(ul)) * f
        - (entropy_potential(ur) - entropy_potential(ul))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const ALL: [BurgersFlux; 6] = [
        BurgersFlux::Central,
        BurgersFlux::AlphaSplit { alpha: 0.4 },
        BurgersFlux::EntropyConserving,
        BurgersFlux::TadmorPositive,
        BurgersFlux::EdRusanov,
        BurgersFlux::EsRusanov,
    ];

    #[test]
    fn entropy_pair_is_compatible() {
        // U' f' = F' checked at sampled points.
        for k in -50..=50 {
            let u = 0.2 * k as f64;
            let lhs = entropy_variable(u) * u; // U'(u) f'(u), f'(u) = u
            let rhs = u * u; // F'(u)
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
        }
    }

    #[test]
    fn central_hand_values() {
        assert_abs_diff_eq!(BurgersFlux::Central.evaluate(1.0, 2.0), 1.25, epsilon = 1e-15);
        assert_abs_diff_eq!(
            BurgersFlux::Central.evaluate(-3.0, 3.0),
            4.5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn alpha_split_hand_values() {
        let f = BurgersFlux::alpha_split(1.0).unwrap();
        assert_abs_diff_eq!(f.evaluate(1.0, 2.0), 1.25, epsilon = 1e-15);
        let f = BurgersFlux::alpha_split(2.0 / 3.0).unwrap();
        assert_abs_diff_eq!(f.evaluate(1.0, 2.0), 7.0 / 6.0, epsilon = 1e-15);
        let f = BurgersFlux::alpha_split(0.5).unwrap();
        assert_abs_diff_eq!(f.evaluate(1.0, 2.0), 1.125, epsilon = 1e-15);
    }

    #[test]
    fn alpha_out_of_range_rejected() {
        assert!(BurgersFlux::alpha_split(-0.1).is_err());
        assert!(BurgersFlux::alpha_split(1.1).is_err());
    }

    #[test]
    fn ec_hand_values() {
        let f = BurgersFlux::EntropyConserving;
        assert_abs_diff_eq!(f.evaluate(1.0, 2.0), 7.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f.evaluate(0.0, 3.0), 1.5, epsilon = 1e-15);
    }

    #[test]
    fn tadmor_switches_between_ec_and_central() {
        let f = BurgersFlux::TadmorPositive;
        assert_abs_diff_eq!(f.evaluate(1.0, 2.0), 7.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f.evaluate(2.0, 1.0), 1.25, epsilon = 1e-15);
    }

    #[test]
    fn rusanov_hand_values() {
        let ed = BurgersFlux::EdRusanov;
        assert_abs_diff_eq!(ed.evaluate(1.0, 2.0), 7.0 / 6.0 - 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(ed.evaluate(2.0, 1.0), 7.0 / 6.0 + 1.0, epsilon = 1e-15);
        let es = BurgersFlux::EsRusanov;
        assert_abs_diff_eq!(es.evaluate(1.0, 2.0), 0.25, epsilon = 1e-15);
        // (f(-1) + f(1))/2 - max(1,1) * (1 - (-1))/2 = 0.5 - 1.
        assert_abs_diff_eq!(es.evaluate(-1.0, 1.0), -0.5, epsilon = 1e-15);
    }

    #[test]
    fn dissipation_coefficient_hand_values() {
        assert_abs_diff_eq!(
            BurgersFlux::EntropyConserving.dissipation_coefficient(1.0, 2.0),
            1.0 / 6.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            BurgersFlux::AlphaSplit { alpha: 0.5 }.dissipation_coefficient(1.0, 3.0),
            0.5,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            BurgersFlux::EntropyConserving.dissipation_coefficient(2.0, 1.0),
            -1.0 / 6.0,
            epsilon = 1e-15
        );
        // Coincident states: analytic limits.
        assert_eq!(
            BurgersFlux::EntropyConserving.dissipation_coefficient(1.5, 1.5),
            0.0
        );
        assert_eq!(BurgersFlux::EdRusanov.dissipation_coefficient(1.5, 1.5), 1.5);
    }

    #[test]
    fn consistency_on_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let u: f64 = rng.gen_range(-10.0..10.0);
            for flux in ALL {
                assert_abs_diff_eq!(flux.evaluate(u, u), 0.5 * u * u, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn symmetry_on_random_pairs() {
        // The upwinded fluxes are intentionally not symmetric in their
        // arguments (their own hand values above show it); the blends of
        // symmetric means are.
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let symmetric = [
            BurgersFlux::Central,
            BurgersFlux::AlphaSplit { alpha: 0.4 },
            BurgersFlux::EntropyConserving,
        ];
        for _ in 0..10_000 {
            let ul: f64 = rng.gen_range(-10.0..10.0);
            let ur: f64 = rng.gen_range(-10.0..10.0);
            for flux in symmetric {
                assert_abs_diff_eq!(
                    flux.evaluate(ul, ur),
                    flux.evaluate(ur, ul),
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn ec_condition_zero_for_ec_flux() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10_000 {
            let ul: f64 = rng.gen_range(-10.0..10.0);
            let ur: f64 = rng.gen_range(-10.0..10.0);
            let r = ec_condition_residual(BurgersFlux::EntropyConserving, ul, ur);
            assert!(r.abs() <= 1e-12, "EC residual {r} at ({ul}, {ur})");
        }
    }

    #[test]
    fn entropy_inequality_for_dissipative_fluxes() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let dissipative = [
            BurgersFlux::TadmorPositive,
            BurgersFlux::EdRusanov,
            BurgersFlux::EsRusanov,
        ];
        for _ in 0..10_000 {
            let ul: f64 = rng.gen_range(-10.0..10.0);
            let ur: f64 = rng.gen_range(-10.0..10.0);
            for flux in dissipative {
                let r = ec_condition_residual(flux, ul, ur);
                assert!(r <= 1e-12, "{} residual {r} at ({ul}, {ur})", flux.name());
            }
        }
    }

    #[test]
    fn central_flux_can_produce_entropy() {
        assert!(ec_condition_residual(BurgersFlux::Central, 1.0, 2.0) > 0.0);
    }

    #[test]
    fn decomposition_reconstructs_each_flux() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..10_000 {
            let ul: f64 = rng.gen_range(-10.0..10.0);
            let ur: f64 = rng.gen_range(-10.0..10.0);
            for flux in ALL {
                let central = 0.5 * (physical_flux(ul) + physical_flux(ur));
                let rebuilt =
                    central - 0.5 * flux.dissipation_coefficient(ul, ur) * (ur - ul);
                assert_abs_diff_eq!(flux.evaluate(ul, ur), rebuilt, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn ec_coefficient_follows_the_slope() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..1000 {
            let ul: f64 = rng.gen_range(-10.0..10.0);
            let ur: f64 = rng.gen_range(-10.0..10.0);
            let r = BurgersFlux::EntropyConserving.dissipation_coefficient(ul, ur);
            assert_eq!(r.signum() * (ur - ul).signum() >= 0.0, true);
        }
    }

    #[test]
    fn flux_names_round_trip() {
        for flux in ALL {
            let parsed = BurgersFlux::from_name(flux.name(), 0.4).unwrap();
            assert_eq!(parsed, flux);
        }
        assert!(BurgersFlux::from_name("bogus", 1.0).is_err());
    }
}
