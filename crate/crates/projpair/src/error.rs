use thiserror::Error;

/// Errors produced by the projection calculus.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {left} vs {right} in {op}")]
    ShapeMismatch {
        op: &'static str,
        left: String,
        right: String,
    },

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("entry count {len} does not match {rows}x{cols}")]
    BadEntryCount { rows: usize, cols: usize, len: usize },

    #[error("matrix is not Hermitian: asymmetry {asymmetry:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { asymmetry: f64, tol: f64 },

    #[error("basis columns are not orthonormal: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotOrthonormal { residual: f64, tol: f64 },

    #[error(
        "matrix is not an orthogonal projection: hermitian residual {hermitian:.3e}, \
         idempotency residual {idempotency:.3e}, tolerance {tol:.3e}"
    )]
    NotProjection {
        hermitian: f64,
        idempotency: f64,
        tol: f64,
    },

    #[error("no unique geodesic: dim(R(P) ∩ N(Q)) = {dim10}, dim(N(P) ∩ R(Q)) = {dim01}")]
    NoUniqueGeodesic { dim10: usize, dim01: usize },

    #[error("reduced minimum modulus undefined: no nonzero eigenvalue")]
    Undefined,

    #[error("index set must be symmetric under j -> -j (mod {n}); offending index {index}")]
    SymmetryRequired { n: usize, index: usize },

    #[error("not a product of two orthogonal projections: residual {residual:.3e} exceeds {tol:.3e}")]
    NotAProjectionProduct { residual: f64, tol: f64 },

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vector is not unit length: norm {norm}")]
    NotUnitVector { norm: f64 },

    #[error("curve needs at least two samples at strictly increasing times")]
    BadCurveSamples,

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("internal consistency failure in {what}: residual {residual:.3e}")]
    InternalConsistency { what: &'static str, residual: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
