use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter point or action value lies outside the model's domain.
    #[error("domain violation: {0}")]
    Domain(String),

    #[error("empty grid")]
    EmptyGrid,

    /// Doubling the angle grid changed the result; the samples are not band-limited.
    #[error("aliasing: doubling the grid from {grid} to {} nodes changed a component by {deviation:e}", 2 * grid)]
    Aliasing { grid: usize, deviation: f64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("singular jacobian (|det| = {0:e})")]
    SingularJacobian(f64),

    #[error("empty index set")]
    EmptyIndexSet,

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("duplicate index {0}")]
    DuplicateIndex(usize),

    #[error("series truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("series error: {0}")]
    Series(String),

    #[error("window too small: normalization drift {0:e}")]
    WindowTooSmall(f64),

    #[error("no real turning points for energy {0}")]
    NoTurningPoints(f64),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
