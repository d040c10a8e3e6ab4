use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("EmptyInput: no generators given")]
    EmptyInput,
    #[error("ZeroGenerator: generators must be positive")]
    ZeroGenerator,
    #[error("NonCoprime: generators have gcd {gcd}")]
    NonCoprime { gcd: u64 },
    #[error("Overflow: Apéry values exceed the 64-bit range")]
    Overflow,
    #[error("DegenerateSemigroup: operation undefined for the semigroup of all naturals")]
    DegenerateSemigroup,
    #[error("IndexOutOfRange: index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("InvalidGasSpec: {0}")]
    InvalidGasSpec(String),
    #[error("InternalInconsistency: {0}")]
    InternalInconsistency(String),
    #[error("ResourceLimit: node limit of {limit} exceeded")]
    ResourceLimit { limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
