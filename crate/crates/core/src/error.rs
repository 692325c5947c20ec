use thiserror::Error;

/// Errors reported by the library's checked operations.
///
/// Dimension mismatches in the low-level matrix operators are programmer
/// errors and panic instead; everything that can be triggered by user input
/// (parsing, non-Hermitian matrices, solver breakdown) comes through here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error(
        "matrix is not Hermitian: max |a - a^H| entry {deviation:.3e} exceeds tolerance {tol:.3e}"
    )]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("numerical self-check failed: {0}")]
    Numerical(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
