use std::path::PathBuf;

/// Errors produced by state construction, transformation parameters, numeric
/// routines, and file handling.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("spacetime index {0} out of range (expected 0..=3)")]
    IndexOutOfRange(usize),

    #[error("generator indices must differ (got rho = sigma = {0})")]
    EqualGeneratorIndices(usize),

    #[error("omega must be antisymmetric: entry ({0},{1}) is not the negative of ({1},{0})")]
    NotAntisymmetric(usize, usize),

    #[error("omega entry ({row},{col}) = {value} exceeds the magnitude bound {bound}")]
    OmegaOutOfBounds {
        row: usize,
        col: usize,
        value: f64,
        bound: f64,
    },

    #[error("{0} must contain only finite values")]
    NonFinite(&'static str),

    #[error("matrix exponential did not converge at working precision")]
    ExpNotConverged,

    #[error("spinor must have at least one nonzero component")]
    ZeroSpinor,

    #[error("field \"psi\" must be a nonzero 4x4 coefficient matrix")]
    ZeroState,

    #[error("rank must be between 1 and 4 (got {0})")]
    InvalidRank(usize),

    #[error("scale must be finite, nonnegative, and at most {max} (got {got})")]
    InvalidScale { got: f64, max: f64 },

    #[error("tolerance must be positive and finite (got {0})")]
    InvalidTolerance(f64),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}
