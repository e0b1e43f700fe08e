use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("homomorphism is not well defined: {0}")]
    NotWellDefined(String),
    #[error("element has no preimage")]
    NoSolution,
    #[error("group is infinite")]
    Infinite,
    #[error("chain square does not commute")]
    NotChainMap,
    #[error("endpoints do not match: {0}")]
    Endpoints(String),
    #[error("not a valid null homotopy of the composite")]
    InvalidNullHomotopy,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("map is not essentially surjective")]
    NotEssentiallySurjective,
    #[error("source is not discrete free")]
    NotDiscreteFree,
    #[error("source group is not free")]
    NotFree,
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("candidate cap of {cap} exceeded")]
    Overflow { cap: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
