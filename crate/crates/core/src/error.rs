use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term must vanish: {0}")]
    NonZeroConstantTerm(String),
    #[error("constant term is not a unit: {0}")]
    NonUnitConstantTerm(String),
    #[error("insufficient order: need {needed}, have {available}")]
    InsufficientOrder { needed: String, available: String },
    #[error("p-window overflow: {0}")]
    WindowOverflow(String),
    #[error("exponent not representable on the half-integer grid: {0}")]
    QuarterExponent(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at t = 1")]
    PoleAtOne,
    #[error("invalid class: {0}")]
    InvalidClass(String),
    #[error("enumeration bound exceeded: requested {requested}, bound {bound}")]
    EnumerationBound { requested: u32, bound: u32 },
    #[error("Eisenstein series weight must be even and at least 2, got {0}")]
    OddWeight(u32),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("not quasi-modular of weight {weight}: {reason}")]
    NotQuasiModular { weight: u32, reason: String },
    #[error("unsupported expression: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
