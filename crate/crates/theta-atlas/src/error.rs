//! Error type shared by all operations.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's domain (q outside (0,1), x = 0, non-finite
    /// components, invalid precision request, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Bracket endpoints do not sign-separate: the requested real zero does
    /// not exist for this parameter (the pair has turned complex) or cannot
    /// be isolated.
    #[error("bracket failure for zero index {k} at q = {q}: {detail}")]
    BracketFailure { k: usize, q: String, detail: String },

    /// An iteration failed to converge within its step budget.
    #[error("no convergence: {0}")]
    ConvergenceFailure(String),

    /// Truncation degree would exceed the hard cap.
    #[error("truncation degree {needed} exceeds cap {cap} (q too close to 1 for this radius/precision)")]
    DegreeOverflow { needed: usize, cap: usize },

    /// A zero near a spectral value could not be certified, so a pair count
    /// would be ambiguous.
    #[error("ambiguous pair count near a spectral value at q = {q}")]
    AmbiguousNearSpectral { q: String },

    /// The crossing bracket for an imaginary-axis solution does not hold.
    #[error("no crossing in the given v-interval: {0}")]
    NoCrossing(String),

    /// A Newton seed left the valid parameter domain.
    #[error("seed failure: {0}")]
    SeedFailure(String),

    /// Quadrature tail or subdivision budget exceeded.
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),

    /// A lemma's precondition does not hold for the given inputs.
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
}

pub type Result<T> = std::result::Result<T, Error>;
