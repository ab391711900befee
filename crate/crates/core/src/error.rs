use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrimeP(u64),
    #[error("modulus polynomial {0:?} is reducible over F_p (or not monic of degree r)")]
    ReduciblePolynomial(Vec<u32>),
    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),
    #[error("ring has {size} elements, cap is {cap}")]
    UnsupportedSize { size: u128, cap: u64 },
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("empty vector")]
    EmptyVector,
    #[error("cannot parse element {0:?}")]
    ParseElement(String),
    #[error("matrix needs {needed} columns, cap is {cap}")]
    SizeCapExceeded { needed: u128, cap: u64 },
    #[error("enumeration needs {needed} codewords, cap is {cap}")]
    EnumerationCapExceeded { needed: u128, cap: u64 },
    #[error("invalid type vector {0:?}: need s entries with t_1 >= 1")]
    InvalidTypeVector(Vec<u32>),
    #[error("operation requires a Z_(p^s) ring")]
    NotZps,
    #[error("codeword is zero")]
    ZeroCodeword,
    #[error("k = {0} is not supported here")]
    UnsupportedK(u32),
    #[error("distribution contains only the zero codeword")]
    DegenerateDistribution,
    #[error("verification mismatch at weight {weight}: expected {expected}, found {found}")]
    VerificationMismatch { weight: u64, expected: u64, found: u64 },
    #[error("{what} mismatch: expected {expected}, found {found}")]
    ParameterMismatch { what: &'static str, expected: u64, found: u64 },
    #[error("parameter overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
