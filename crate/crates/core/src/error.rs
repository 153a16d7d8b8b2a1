use thiserror::Error;

/// Errors produced by the polynomial, series and family layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not invertible: {0}")]
    NonInvertible(String),

    #[error("symbolic power requires constant term exactly 1, found `{0}`")]
    LeadingTermNotOne(String),

    #[error("shift by {shift} exceeds truncation order {order}")]
    ShiftBeyondOrder { shift: usize, order: usize },

    #[error("index k = {k} exceeds n = {n}")]
    KExceedsN { n: u32, k: u32 },

    #[error("need {needed} sequence arguments, got {got}")]
    NotEnoughArguments { needed: usize, got: usize },

    #[error("parity closed form requires k >= 1")]
    ParityRequiresPositiveK,

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: String, reason: String },

    #[error("modulus values must be odd, got {0}")]
    EvenModulus(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
