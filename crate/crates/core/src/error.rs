use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("model/grid mismatch: {0}")]
    ModelGridMismatch(String),

    #[error("invalid kernel data: {0}")]
    InvalidKernel(String),

    #[error("grid index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("non-finite entry in {0}")]
    NonFinite(&'static str),

    #[error("numeric failure: {0}")]
    NumericFailure(String),

    /// An eigenvalue fell below the clamping threshold where a positive
    /// semidefinite input was required.
    #[error("eigenvalue {value:e} below clamping threshold {threshold:e}")]
    NotPositive { value: f64, threshold: f64 },

    #[error("function pair violates f(t)g(t) = t at t = {t:e} (f*g = {product:e})")]
    PairViolation { t: f64, product: f64 },

    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
