use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid domain parameters: {0}")]
    InvalidParams(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("expected {expected} values, got {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("element does not match the domain: {0}")]
    Shape(String),

    #[error("numerical degeneracy: {0}")]
    NumericalDegeneracy(String),

    #[error("argument outside the domain of definition: {0}")]
    DomainError(String),

    #[error("polynomial is not in the span of the basis: {0}")]
    BasisError(String),

    #[error("point lies outside the domain: {0}")]
    OutsideDomain(String),

    #[error("volume of {0} is not known; supply it explicitly or estimate it")]
    VolumeUnknown(String),

    #[error("rejection sampling acceptance ratio {ratio:.3e} is too low (accepted {accepted} of {samples})")]
    LowAcceptance {
        ratio: f64,
        accepted: u64,
        samples: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
