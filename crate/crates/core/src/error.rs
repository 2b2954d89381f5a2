use thiserror::Error;

/// Errors raised by the ordinal and worm operations, the parser and the oracle.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Left subtraction `-a + b` with `a > b`.
    #[error("left subtraction underflow: {left} exceeds {right}")]
    Underflow { left: String, right: String },

    /// An operation that needs a positive ordinal was given 0.
    #[error("operation `{0}` is undefined at 0")]
    ZeroInput(&'static str),

    /// A construction would need a Veblen index at or beyond Gamma_0.
    #[error("notation overflow: value is not below Gamma_0")]
    GammaZeroOverflow,

    /// The worm has a modality below the required bound.
    #[error("worm {worm} is not in S_{bound}: it has a modality below {bound}")]
    NotInFragment { worm: String, bound: String },

    /// The operation requires a worm in Beklemishev normal form.
    #[error("worm {0} is not in Beklemishev normal form")]
    NotBnf(String),

    /// Turing schedules only exist for worms whose modalities are natural numbers.
    #[error("modality {0} is not a natural number; progressions beyond level omega need (hyper)arithmetical interpretations that are not modelled here")]
    ModalityTooLarge(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// Enumeration request beyond the configured cap.
    #[error("universe too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
