use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed coefficient `{0}`")]
pub struct ScalarParseError(pub String);

/// Parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UndefinedGenerator,
    MalformedCoefficient,
    DuplicateProduct,
    DuplicateGenerator,
    MirrorMismatch,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid Lie superalgebra data: {0}")]
    InvalidLieData(String),
    #[error("representation check failed for ({0}, {1})")]
    InvalidRepresentation(String, String),
    #[error("matrices do not commute")]
    NonCommuting,
    #[error("product leaves the span of the chosen basis: {0}")]
    ClosureFailure(String),
    #[error("invalid 2-cocycle: {0}")]
    InvalidCocycle(String),
    #[error("not a submodule: {0}")]
    NotASubmodule(String),
    #[error("module must be free of rank 1 (rank {0})")]
    RankNotOne(usize),
    #[error("module must be free")]
    NotFree,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown built-in `{0}`")]
    UnknownBuiltin(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
