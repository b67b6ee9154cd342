use thiserror::Error;

/// Errors raised by the library. Verification failures are not errors: they
/// are recorded as ledger statuses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot factor zero")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("factorization is empty (the integer 1 has no prime divisors)")]
    EmptyFactorization,
    #[error("exact division failed: {0}")]
    NotDivisible(String),

    #[error("syntax error in group spec {spec:?}: {reason}")]
    Syntax { spec: String, reason: String },
    #[error("{0} is not a prime power")]
    NotPrimePower(String),
    #[error("{group} is not simple: {constraint}")]
    NotSimple { group: String, constraint: String },
    #[error("unknown sporadic group {0:?}")]
    UnknownSporadic(String),
    #[error("unsupported group {group}: {reason}")]
    Unsupported { group: String, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("{0} is not a vertex of the graph")]
    NotAVertex(u64),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {0} vertices; at most 64 are supported")]
    GraphTooLarge(usize),
    #[error("cannot parse graph: {0}")]
    GraphParse(String),

    #[error("{0}")]
    OutOfRange(String),
    #[error("invalid bounds: {0}")]
    Bounds(String),
}

pub type Result<T> = std::result::Result<T, Error>;
