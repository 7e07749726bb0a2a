use thiserror::Error;

/// Errors raised by parameter validation, function evaluation and the
/// formula registry.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The exponent pair violates `q > 1`, `p > q/(q+1)` or is not finite.
    #[error("invalid parameters (p = {p}, q = {q}): {reason}")]
    InvalidParams { p: f64, q: f64, reason: &'static str },

    /// An argument lies outside the domain of the requested function.
    #[error("argument {value} outside domain: {reason}")]
    Domain { value: f64, reason: String },

    /// A closed-form formula was evaluated outside its stated validity domain,
    /// or one of its denominators/radicands became non-positive.
    #[error("{formula}: {reason}")]
    FormulaDomain { formula: &'static str, reason: String },

    /// An addition formula was evaluated at nearly equal arguments, where its
    /// denominator vanishes.
    #[error("{formula}: near-degenerate denominator {denominator:e}")]
    NearDegenerate { formula: &'static str, denominator: f64 },

    /// Root finding did not reach the residual tolerance within the iteration cap.
    #[error("no convergence after {iterations} iterations (best {best}, residual {residual:e})")]
    Convergence { best: f64, residual: f64, iterations: usize },
}

impl Error {
    pub(crate) fn domain(value: f64, reason: impl Into<String>) -> Self {
        Error::Domain { value, reason: reason.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
