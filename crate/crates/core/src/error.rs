use thiserror::Error;

/// Errors produced by the algebra, model builders and the verification runner.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operands are defined over different variable tables")]
    TableMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable table: {0}")]
    InvalidVarTable(String),

    #[error("Hamiltonian must be even")]
    HamiltonianNotEven,

    #[error("operation requires parity-homogeneous input: {0}")]
    MixedParity(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degenerate supercharge pair: |alpha|^2 == |beta|^2")]
    DegenerateSupercharges,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a quadratic Hamiltonian: {0}")]
    NotQuadratic(String),

    #[error("not a bilinear form in the phase vectors: {0}")]
    NotBilinear(String),

    #[error("parity-violating substitution for `{0}`")]
    ParityViolatingMap(String),

    #[error("potential matrix is not positive definite (eigenvalues {0:?})")]
    NotPositiveDefinite([f64; 2]),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("decomposition residual {0:e} above tolerance")]
    DecompositionResidual(f64),

    #[error("usage: {0}")]
    Usage(String),

    #[error("config: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
