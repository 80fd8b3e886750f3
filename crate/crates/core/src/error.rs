use alloc::string::String;

/// Errors raised by the model, wavefunction, oracle and polynomial layers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("parameter domain: {0}")]
    ParameterDomain(String),

    #[error("pair separation underflow between particles {a} and {b}")]
    SeparationUnderflow { a: usize, b: usize },

    #[error("configuration is within {ratio:e} (relative) of a node of the trial factor")]
    NodeProximity { ratio: f64 },

    #[error("sampling exhausted after {attempts} rejected attempts")]
    SamplingExhausted { attempts: u64 },

    #[error("every one of the {rejected} configurations sat on a node")]
    AllSamplesRejected { rejected: usize },

    #[error("coefficient degree overflow: product of two beta-dependent coefficients")]
    CoefficientOverflow,

    #[error("polynomial not divisible by (z{a} - z{b}); remainder {remainder}")]
    NotDivisible { a: usize, b: usize, remainder: String },

    #[error("projection left a non-zero residual: {0}")]
    ProjectionResidual(String),

    #[error("not an eigenvector: {0}")]
    NotEigenvector(String),

    #[error("ill-conditioned embedding: {0}")]
    RankDeficient(String),

    #[error("regime mismatch: {0}")]
    Regime(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
