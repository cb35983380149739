//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input contains no data")]
    EmptyInput,

    #[error("answer level {value} at row {row}, item {item:?} is outside 1..={max}")]
    InvalidLevel {
        row: usize,
        item: String,
        value: i64,
        max: u8,
    },

    #[error("vector is not a probability distribution (sum = {sum})")]
    NotADistribution { sum: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionError { left: usize, right: usize },

    #[error("cluster count {t} out of range 1..={items}")]
    InvalidClusterCount { t: usize, items: usize },

    #[error("{items} items exceed the exhaustive enumeration bound of {max}")]
    EnumerationBound { items: usize, max: usize },

    #[error("{0}")]
    DomainError(String),

    #[error("total-score variance is zero; alpha is undefined")]
    DegenerateScale,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
