use thiserror::Error;

/// A semidiscrete right-hand-side operator `du/dt = L(u)` on a flat state
/// vector. Implementations are pure: two calls with the same state produce
/// the same output.
pub trait Rhs {
    /// Number of degrees of freedom in the flat state vector.
    fn dim(&self) -> usize;

    /// Evaluate the right-hand side at `u`, writing into `out`.
    ///
    /// `u` and `out` must both have length [`Rhs::dim`].
    fn eval(&self, u: &[f64], out: &mut [f64]) -> Result<(), RhsError>;
}

impl<R: Rhs + ?Sized> Rhs for &R {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn eval(&self, u: &[f64], out: &mut [f64]) -> Result<(), RhsError> {
        (**self).eval(u, out)
    }
}

/// Conserved quantity whose positivity was violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OffendingVariable {
    Density,
    Pressure,
}

impl std::fmt::Display for OffendingVariable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OffendingVariable::Density => write!(f, "density"),
            OffendingVariable::Pressure => write!(f, "pressure"),
        }
    }
}

/// A nodal state left the admissible set (positive density and pressure).
#[derive(Debug, Clone, Error, PartialEq)]
#[error("nonpositive {variable} ({value:.6e}) in element {element}, node ({},{})", node.0, node.1)]
pub struct InadmissibleState {
    pub element: usize,
    pub node: (usize, usize),
    pub variable: OffendingVariable,
    pub value: f64,
}

/// Failure of a right-hand-side evaluation.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum RhsError {
    #[error(transparent)]
    Inadmissible(#[from] InadmissibleState),
}
