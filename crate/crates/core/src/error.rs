use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(
        "no generic linear form found after {retries} attempts at step {step}; \
         try another seed or a larger prime"
    )]
    GenericityFailure { step: usize, retries: usize },

    #[error("internal limit exceeded: {0}")]
    InternalLimit(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("oracle budget exceeded: strand of dimension {dim} (limit {limit})")]
    BudgetExceeded { dim: usize, limit: usize },

    #[error("the unit ideal defines the empty scheme")]
    EmptyScheme,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
