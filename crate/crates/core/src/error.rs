use alloc::string::String;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not amply regular with the given parameters")]
    NotAmplyRegular,
    #[error("graph is disconnected")]
    Disconnected,

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field or graph order too large: {0}")]
    TooLarge(u64),
    #[error("Paley graphs need q = 1 mod 4, got {0}")]
    NotPaleyOrder(u64),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("measures are supported on different components")]
    InfiniteDistance,
    #[error("idleness must lie in [0, 1]")]
    InvalidIdleness,
    #[error("invalid probability measure: {0}")]
    InvalidMeasure(String),
    #[error("integer overflow while clearing denominators")]
    Overflow,

    #[error("bipartite sides have different sizes")]
    UnbalancedSides,

    #[error("b = 1 is handled by the single-vertex rules, not the quadratic")]
    UseBOneCheck,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("parameters violate d(d-a-1) = (n-d-1)b")]
    NotSrgParameters,
    #[error("eigenvalue multiplicities are not positive integers")]
    InfeasibleParameters,

    #[error("x - y is not a non-zero square")]
    InvalidPair,
    #[error("order {0} is not a prime power > 5 congruent to 1 mod 4")]
    InvalidOrder(u64),
}

pub type Result<T> = core::result::Result<T, Error>;
