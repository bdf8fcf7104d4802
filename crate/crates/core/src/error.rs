use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("field of size {p}^{degree} exceeds the size cap of {cap} elements")]
    FieldTooLarge { p: u32, degree: u32, cap: u64 },

    #[error("no embedded polynomial for F_{p}^{degree}; supply one with --poly")]
    NoDefaultPolynomial { p: u32, degree: u32 },

    #[error("defining polynomial is not primitive (root has order {order}, expected {expected})")]
    NonPrimitivePolynomial { order: u64, expected: u64 },

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),

    #[error("zero has no multiplicative inverse")]
    InverseOfZero,

    #[error("{s} does not divide the extension degree {n}")]
    NotADivisor { s: u32, n: u32 },

    #[error("all generators are zero")]
    ZeroSubspace,

    #[error("operands live in different field towers")]
    MixedTowers,

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("subspace does not contain 1")]
    MissingOne,

    #[error("cap exceeded: {what} reached {reached} (cap {cap})")]
    CapExceeded {
        what: &'static str,
        reached: u128,
        cap: u128,
    },

    #[error("invalid subspace literal: {0}")]
    Literal(String),

    #[error("expected an orbit of group {expected}, got {found}")]
    WrongGroup { expected: String, found: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("map is not invertible")]
    Singular,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
