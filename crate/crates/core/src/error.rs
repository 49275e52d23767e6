use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}x{expected}, got {rows}x{cols}")]
    Dimension {
        expected: usize,
        rows: usize,
        cols: usize,
    },

    #[error("matrix is not Hermitian (max |A - A^H| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    Convergence { sweeps: usize, off_norm: f64 },

    #[error("{name} = {value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("evolution annihilated the state (normalization trace {trace:e})")]
    SingularEvolution { trace: f64 },

    #[error("alpha = {alpha} is too close to pi/2; sec(alpha) overflows")]
    Overflow { alpha: f64 },

    #[error("unknown figure preset `{0}`")]
    UnknownPreset(String),

    #[error("grid point {index} (r = {r}, t = {t}): {source}")]
    GridPoint {
        index: usize,
        r: f64,
        t: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
