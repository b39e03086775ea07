use std::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside a function's validity or accuracy domain.
    Domain(String),
    /// A series or iteration hit its cap without meeting its tolerance.
    NonConvergence(String),
    /// Input data failed validation.
    Validation(String),
    /// The data restriction for a coefficient case is violated; the inverse
    /// problem has no solution. Carries the dimensionless margin (solvable
    /// requires margin < 1).
    Restriction { margin: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NonConvergence(msg) => write!(f, "did not converge: {msg}"),
            Error::Validation(msg) => write!(f, "invalid input: {msg}"),
            Error::Restriction { margin } => write!(
                f,
                "data restriction violated: margin {margin} is not < 1, no solution exists"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
