use thiserror::Error;

use crate::Domain;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an arithmetic function needs at least one value")]
    Empty,
    #[error("value {value} at index {index} is not an element of {domain}")]
    NotInDomain {
        index: usize,
        value: String,
        domain: Domain,
    },
    #[error("cannot combine a function over {0} with a function over {1}")]
    DomainMismatch(Domain, Domain),
    #[error("index {index} is outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("bound mismatch: expected {expected}, found {found}")]
    BoundMismatch { expected: usize, found: usize },
    #[error("function is not a unit (leading value {0})")]
    NotAUnit(String),
    #[error("function is zero at this bound and has no visible rank")]
    NoVisibleRank,
    #[error("unknown function name `{0}`")]
    UnknownName(String),
    #[error("parameter k = {k} is out of range for `{name}`")]
    ParameterOutOfRange { name: String, k: u32 },
    #[error("{0} is not a positive integer in the supported range")]
    InvalidLatticeRoot(u64),
    #[error("{value} is not an element of the divisor lattice of {root}")]
    NotAnElement { value: u64, root: u64 },
    #[error("{0} has no prime factorization (expected n >= 2)")]
    NoFactorization(u64),
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("malformed function file: {0}")]
    Format(String),
}
