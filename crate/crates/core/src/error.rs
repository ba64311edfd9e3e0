use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not acyclic: cycle through vertex {0}")]
    NotAcyclic(u32),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),

    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),

    #[error("vertex label {0} out of range 1..={1}")]
    VertexOutOfRange(u32, usize),

    #[error("instance too large for {op}: n = {n} exceeds cap {cap}")]
    TooLarge { op: &'static str, n: usize, cap: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("conditional probability undefined: conditioning event has probability zero")]
    UndefinedConditional,

    #[error("{0} does not stochastically dominate {1}")]
    NotDominated(String, String),

    #[error("retry budget of {0} exhausted in perturb-verify sampler")]
    RetryBudgetExhausted(usize),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
