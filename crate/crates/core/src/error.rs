use thiserror::Error;

/// Errors raised anywhere in the engine, the identity suite or the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("unknown identity case `{0}`")]
    UnknownCase(String),
    #[error("p-adic domain error: {0}")]
    DomainError(String),
    #[error("p-adic precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("term budget exceeded: {0} terms requested")]
    BudgetExceeded(u128),
    #[error("character of order {order} does not embed in Z_{p}")]
    CharacterNotEmbeddable { order: u32, p: u64 },
    #[error("series does not converge: {0}")]
    DivergentSpec(String),
    #[error("no value assigned to indeterminate `{0}`")]
    Unassigned(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
