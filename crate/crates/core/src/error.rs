use thiserror::Error;

/// Errors raised by the library. Every variant describes an invalid input;
/// none of the numerical routines fail on well-formed data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("real representation needs an even length, got {0}")]
    OddDimension(usize),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("time step must be positive, got {0}")]
    NonPositiveStep(f64),

    #[error("time must be non-negative, got {0}")]
    NegativeTime(f64),

    #[error("hbar must be positive, got {0}")]
    NonPositiveHbar(f64),

    #[error("Fock cutoff must be at least {min}, got {found}")]
    CutoffTooSmall { min: usize, found: usize },

    #[error("state has support at occupation {occupation}, above the guard {guard}")]
    GuardViolation { occupation: usize, guard: usize },

    #[error("state violates the Gupta-Bleuler constraint (residual {residual:.3e})")]
    NotPhysical { residual: f64 },

    #[error("malformed matrix data: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
