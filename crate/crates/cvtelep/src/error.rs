use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter is outside its mathematical domain (negative squeezing,
    /// non-finite amplitude, an exponent that is not positive definite, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A truncated state cannot hold the requested norm tolerance.
    #[error("{what}: norm deficit {deficit:.3e} exceeds tolerance {tol:.3e}")]
    Convergence { what: String, deficit: f64, tol: f64 },

    /// An iterative scheme hit its cap before reaching tolerance; the best
    /// estimate and its error bound are carried along.
    #[error("no convergence after {iterations} refinements (best {best:.12e}, est. error {est_error:.3e})")]
    NoConvergence { best: f64, est_error: f64, iterations: usize },

    /// A state has the wrong number of modes for the requested operation.
    #[error("expected a {expected}-mode state, got {got} modes")]
    ModeMismatch { expected: usize, got: usize },

    /// A pump plan with no drive on either branch.
    #[error("degenerate pump plan: both branch amplitudes vanish")]
    DegeneratePlan,
}

pub type Result<T> = std::result::Result<T, Error>;
