use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("negative exponent {0}")]
    NegativeExponent(i64),

    #[error("cannot parse rational {0:?}: expected \"p/q\" or \"p\"")]
    ParseRational(String),

    #[error("empty point set")]
    EmptyPointSet,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point {index} has coordinate {value} outside [0, 1]")]
    OutsideUnitCube { index: usize, value: String },

    #[error("point {index} has weight 0")]
    ZeroWeight { index: usize },

    #[error("no blue points")]
    NoBluePoints,

    #[error("degenerate reduction: {0}")]
    DegenerateReduction(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance above oracle soft limit: {0}")]
    OracleLimit(String),

    #[error("construction invariant violated: {0}")]
    Invariant(String),

    #[error("graph file line {line}: {message}")]
    GraphFormat { line: usize, message: String },

    #[error("loops forbidden (graph is simple): vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("instance file: {0}")]
    InstanceFormat(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
