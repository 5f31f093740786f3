use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument that must be positive was zero.
    #[error("{0} must be positive")]
    Zero(&'static str),

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("negative exponent nu = {0} is not supported")]
    NegativeNu(i64),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid torsion order {0}: orders must be at least 2")]
    InvalidTorsion(u64),

    /// A count that must come out exact did not. This always indicates a bug
    /// (or a fiber provider that does not describe a real group).
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    /// The brute-force oracle refused a computation past its bounds.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
}
