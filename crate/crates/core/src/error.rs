use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("direction is not a unit vector (norm {norm})")]
    InvalidDirection { norm: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionError { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    ArgumentError(String),

    #[error("matrix is not Hermitian (max deviation {deviation})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue})")]
    NotPositiveSemidefinite { eigenvalue: f64 },

    #[error("matrix does not have unit trace (trace {trace})")]
    NotUnitTrace { trace: f64 },

    #[error("matrix is not a projector (max deviation of M^2 - M is {deviation})")]
    NotProjector { deviation: f64 },

    #[error("conditioning on an event of probability zero")]
    ConditioningOnNullEvent,

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
