use thiserror::Error;

/// Errors produced by the digit-law library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("digit must be in 1..=9, got {0}")]
    InvalidDigit(u64),

    #[error("0 has no leading digit")]
    NoLeadingDigit,

    #[error("exact evaluation at n = {n} exceeds the ceiling {ceiling}; use float mode")]
    ExactCeiling { n: u64, ceiling: u64 },

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),

    #[error("n = {n} is below digit {digit}: no block is defined")]
    BelowDigit { digit: u8, n: u64 },

    #[error("scan of {steps} steps exceeds the budget of {budget}")]
    BudgetExceeded { steps: u64, budget: u64 },

    #[error("empty histogram")]
    EmptyHistogram,

    #[error("empty range {lo}..={hi}")]
    EmptyRange { lo: u64, hi: u64 },

    #[error("probabilities sum to {0}, expected 1")]
    NotNormalized(f64),

    #[error("invalid column selector {column}: records have {width} fields")]
    InvalidColumn { column: usize, width: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
