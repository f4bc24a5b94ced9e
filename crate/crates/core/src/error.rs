use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("width {0} outside the supported range 1..=9")]
    InvalidWidth(u8),

    #[error("value {value} out of range for width {width} (max {max})")]
    ValueOutOfRange { value: u64, width: u8, max: u64 },

    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: u8, right: u8 },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid grouping: {0}")]
    InvalidGrouping(String),

    #[error("invalid shift params: {0}")]
    InvalidShiftParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("width {width} exceeds the atlas ceiling {ceiling}")]
    WidthTooLarge { width: u8, ceiling: u8 },

    #[error("atlas construction requires the pad zero policy")]
    ShrinkPolicyUnsupported,

    #[error("step budget {0} exhausted before a state repeated")]
    StepBudgetExceeded(u64),

    #[error("malformed trajectory: {0}")]
    MalformedTrajectory(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
