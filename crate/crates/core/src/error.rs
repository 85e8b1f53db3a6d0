use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A cap on Buchberger's algorithm that was hit before the basis was complete.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResourceLimit {
    Pairs(usize),
    Degree(u32),
}

impl std::fmt::Display for ResourceLimit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResourceLimit::Pairs(n) => write!(f, "more than {n} critical pairs"),
            ResourceLimit::Degree(d) => write!(f, "basis element of degree above {d}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable contexts differ")]
    ContextMismatch,
    #[error("coefficient fields differ")]
    FieldMismatch,
    #[error("monomial orders differ")]
    OrderMismatch,
    #[error("exponent vector has length {got}, context has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("matrix must be {expected}x{expected}")]
    MatrixShape { expected: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("resource limit exceeded: {0}")]
    Resource(ResourceLimit),
    #[error("generic initial ideal unstable: trial {trial} gave a different initial ideal than trial 0")]
    UnstableGin { trial: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    InvalidInput(String),
    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
