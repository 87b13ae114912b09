use thiserror::Error;

/// Errors surfaced by the library. Every rejected precondition gets its own
/// variant so the CLI can print a distinct message per failure mode.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fraction {0}/{1} is not irreducible")]
    Reducible(u64, u64),

    #[error("0/0 is not a fraction")]
    ZeroZero,

    #[error("{0}")]
    OutOfDomain(String),

    #[error("pair ({0}, {1}) is not coprime")]
    NotCoprime(u64, u64),

    #[error("{0}/{1} and {2}/{3} are not Farey neighbors")]
    NotNeighbors(u64, u64, u64, u64),

    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("division by zero while evaluating a continued fraction")]
    DivisionByZero,

    #[error("continued fraction evaluates to a negative value")]
    NegativeValue,

    #[error("exponent off the expected grid: {0}")]
    GridViolation(String),

    #[error("diagram has {0} crossings; the state sum is capped at {1}")]
    TooManyCrossings(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn out_of_domain(msg: impl Into<String>) -> Self {
        Error::OutOfDomain(msg.into())
    }
}
