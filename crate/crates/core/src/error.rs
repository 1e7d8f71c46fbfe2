use thiserror::Error;

/// Errors raised by the counting library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("operation not supported for this field: {0}")]
    Unsupported(&'static str),

    #[error("the zero ideal has no finite norm")]
    ZeroIdeal,

    #[error("denominator must be nonzero")]
    InvalidDenominator,

    #[error("numerator and denominator are not coprime")]
    NotCoprime,

    #[error("degenerate samples: {0}")]
    DegenerateSamples(String),

    #[error("objects from different fields cannot be compared")]
    MixedFields,
}

impl Error {
    /// Short machine-readable tag, used by the command line front end.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidField(_) => "invalid_field",
            Error::Unsupported(_) => "unsupported",
            Error::ZeroIdeal => "zero_ideal",
            Error::InvalidDenominator => "invalid_denominator",
            Error::NotCoprime => "not_coprime",
            Error::DegenerateSamples(_) => "degenerate_samples",
            Error::MixedFields => "mixed_fields",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
