use thiserror::Error;

/// Errors raised by graph construction and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge {edge} gain has modulus {modulus}, expected 1")]
    NonUnitGain { edge: usize, modulus: f64 },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("vertex sequence is not a cycle of the graph")]
    NotACycle,
    #[error("underlying graph is not 2-connected")]
    NotTwoConnected,
    #[error("underlying graph is bipartite")]
    Bipartite,
    #[error("enumeration budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("order {n} exceeds the configured cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("eigenvalue iteration did not converge")]
    ConvergenceFailure,
    #[error("matrix is not Hermitian at ({row}, {col})")]
    NotHermitian { row: usize, col: usize },
    #[error("matrix entry ({row}, {col}) is neither zero nor a unit")]
    NonUnitEntry { row: usize, col: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
