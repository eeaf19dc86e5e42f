use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("0^0 is indeterminate")]
    IndeterminateForm,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid generators: {0}")]
    InvalidGenerators(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A closed form or Apéry identity produced a non-integral value.
    /// On validated input this means a transcription or validation bug.
    #[error("integrality violation in {context}: got {value}")]
    IntegralityViolation { context: &'static str, value: String },

    #[error("degenerate lambda: {0}")]
    LambdaDegenerate(String),

    #[error("representability scan exceeded the cap of {cap} cells")]
    BoundOverflow { cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
