//! Error type shared across the engine.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("{0}")]
    RangeError(String),

    #[error("axiom failure: {0}")]
    AxiomFailure(String),

    #[error("integral space has dimension {found}, expected 1")]
    IntegralDimension { found: usize },

    #[error("structure check failed: {0}")]
    StructureCheck(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("serialization: {0}")]
    Serialization(String),
}
