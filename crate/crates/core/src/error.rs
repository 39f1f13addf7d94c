use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("capacity exceeded: {quantity} = {value} is above the configured limit {limit}")]
    Capacity {
        quantity: &'static str,
        value: String,
        limit: String,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("L={l}, N={n}: every odd-sector basis state is non-interacting, ratio undefined")]
    EmptyInteractingSet { l: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degenerate statistic: {0}")]
    Degenerate(String),

    #[error("solver did not converge: {0}")]
    NonConvergence(String),

    #[error("histogram support mismatch: {0}")]
    SupportMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("cache corruption: {0}")]
    CacheCorrupt(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
