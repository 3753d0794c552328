use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("minimal polynomial {0} is reducible over the prime field")]
    Reducible(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("S-pair budget of {0} exhausted")]
    ResourceLimit(usize),
    #[error("f does not vanish at the origin")]
    NotAtOrigin,
    #[error("denominator vanishes on the hypersurface: {0}")]
    DivisionUndefined(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("equation not available in characteristic {p}: {what}")]
    WrongCharacteristic { p: u32, what: String },
}
