use thiserror::Error;

/// Errors raised by the algebraic and combinatorial routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at t = 0")]
    PoleAtZero,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("group tag mismatch: {0} vs {1}")]
    TagMismatch(String, String),
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("root {root} is not a positive root of {system}")]
    RootNotInSystem { root: String, system: String },
    #[error("invalid root system: {0}")]
    InvalidSystem(String),
    #[error("not an involution: {0}")]
    NotInvolution(String),
    #[error("support not well-defined for non-basis involution {0}")]
    SupportNotWellDefined(String),
    #[error("roots {0} and {1} are not orthogonal")]
    NotOrthogonal(String, String),
    #[error("weight of root {0} is zero")]
    ZeroWeight(String),
    #[error("matrix is not invertible upper triangular")]
    NotInvertible,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid index tuple: {0}")]
    InvalidTuple(String),
    #[error("[-{a},{a}]x[-{b},{b}] is not an empty rectangle")]
    RectangleNotEmpty { a: usize, b: usize },
    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),
    #[error("pair is not of the requested type: {0}")]
    WrongPairType(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
