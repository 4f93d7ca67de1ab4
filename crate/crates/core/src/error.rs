use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parts are not weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },
    #[error("filling is not a standard tableau of the given shape: {0}")]
    NotStandard(String),
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cyclotomic factor Phi_{index} has negative exponent {exponent}")]
    NegativeExponent { index: usize, exponent: i64 },
    #[error("shape has {size} cells, exceeding the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("word conversion needs every block to be a single row")]
    ShapeNotOneRowBlocks,
    #[error("d = {d} does not divide m = {m}")]
    DNotDividingM { d: usize, m: usize },
    #[error("expected {expected} blocks, found {found}")]
    BlockCountMismatch { expected: usize, found: usize },
    #[error("operation needs a straight (non-skew) shape")]
    NotStraight,
    #[error("operation needs a nonempty shape")]
    EmptyShape,
    #[error("tableau belongs to the exceptional set")]
    ExceptionalTableau,
    #[error("no maj-increasing move found for {0}")]
    NoRuleApplies(String),
}

pub type Result<T> = std::result::Result<T, Error>;
