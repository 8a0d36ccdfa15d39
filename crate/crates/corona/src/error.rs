use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must be non-empty")]
    EmptyGraph,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
    #[error("edge-list parse error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial division is not exact")]
    NonDivisible,
    #[error("gcd of two zero polynomials is undefined")]
    GcdBothZero,
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("interpolation produced a non-integral coefficient: {0}")]
    NonIntegralInterpolant(String),
    #[error("resource budget exceeded: {0}")]
    ResourceBudget(String),
    #[error("internal invariant breach: {0}")]
    InvariantBreach(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("polynomial has non-real roots ({real} real of {degree})")]
    NonRealRoots { real: usize, degree: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
