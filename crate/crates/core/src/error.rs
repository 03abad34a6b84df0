use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {label} outside 1..={max}")]
    OutOfRangeLabel { label: usize, max: usize },
    #[error("trees need at least 3 vertices (n >= 2), got {0}")]
    TooFewVertices(usize),
    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("not a tree: {0}")]
    InvalidTree(String),
    #[error("image {0:?} is not a permutation of the vertices")]
    NotPermutation(Vec<usize>),
    #[error("permutation {0:?} is not a single cycle through every vertex")]
    NotSingleCycle(Vec<usize>),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("companion dimension must be at least 2, got {0}")]
    BadDimension(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("gcd({j}, {modulus}) = {gcd} != 1")]
    NotCoprime { j: usize, modulus: usize, gcd: usize },
    #[error("witness identity violated: {0}")]
    WitnessFailed(String),
    #[error("claim violated: {0}")]
    ClaimViolated(String),
    #[error("{what} = {value} outside {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: String,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("no fixture for figure {0}")]
    FixtureMissing(String),
    #[error("figure {figure}: {detail}")]
    MismatchAgainstCaption { figure: String, detail: String },
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Variant name, for machine-readable error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OutOfRangeLabel { .. } => "OutOfRangeLabel",
            Error::TooFewVertices(_) => "TooFewVertices",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::InvalidTree(_) => "InvalidTree",
            Error::NotPermutation(_) => "NotPermutation",
            Error::NotSingleCycle(_) => "NotSingleCycle",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSquare { .. } => "NotSquare",
            Error::Singular => "Singular",
            Error::BadDimension(_) => "BadDimension",
            Error::NotPrime(_) => "NotPrime",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::WitnessFailed(_) => "WitnessFailed",
            Error::ClaimViolated(_) => "ClaimViolated",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::Parse { .. } => "Parse",
            Error::FixtureMissing(_) => "FixtureMissing",
            Error::MismatchAgainstCaption { .. } => "MismatchAgainstCaption",
            Error::Io(_) => "Io",
        }
    }

    /// True for errors that mean a mathematical claim failed, as opposed to
    /// bad input.
    pub fn is_claim_failure(&self) -> bool {
        matches!(
            self,
            Error::WitnessFailed(_) | Error::ClaimViolated(_) | Error::MismatchAgainstCaption { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
