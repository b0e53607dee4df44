use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal rank {rank} for type {kind}")]
    IllegalRank { kind: String, rank: usize },

    #[error("unknown diagram type `{0}`")]
    UnknownKind(String),

    #[error("dimension mismatch: expected {expected} coefficients, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not a positive root: {0}")]
    NotPositiveRoot(String),

    #[error("zero class")]
    ZeroClass,

    #[error("not an effective divisor: {0}")]
    NotEffective(String),

    #[error("invalid marking: {0}")]
    InvalidMarking(String),

    #[error("black nodes {0} and {1} are adjacent; the lift is undefined")]
    AdjacentBlackNodes(String, String),

    #[error("class {0} does not correspond to a positive root")]
    NotRootClass(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("not a Laurent polynomial: {0}")]
    NotPolynomial(String),

    #[error("non-integer coefficient {0}")]
    NonIntegerCoefficient(String),

    #[error("euler class undefined: {0}")]
    EulerClassUndefined(String),

    #[error("ext decomposition failed: {0}")]
    ExtDecomposition(String),

    #[error("euler class degrees differ: e(Ext2) has degree {ext2}, e(Ext1) has degree {ext1}")]
    DegreeMismatch { ext2: i64, ext1: i64 },

    #[error("descriptor: {0}")]
    Descriptor(String),

    #[error("descriptor line {line}: {msg}")]
    DescriptorSyntax { line: usize, msg: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown fixed component `{0}`")]
    UnknownComponent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
