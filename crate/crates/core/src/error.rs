use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: i64 },

    #[error("gcd({h}, {k}) != 1")]
    NotCoprime { h: u64, k: u64 },

    #[error("a({index}) is outside the coefficient table (n_max = {n_max})")]
    TableTooShort { index: i64, n_max: i64 },

    #[error("index {index} outside the sequence window [{lo}, {hi}]")]
    OutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("Bessel argument must be non-negative")]
    NegativeArgument,

    #[error("precision must be at least {min} bits, got {got}")]
    PrecisionTooLow { min: u32, got: u32 },

    #[error("imaginary part {value} exceeds 2^-{bound_bits} (n = {n})")]
    ImaginaryResidue { n: u64, value: String, bound_bits: u32 },

    #[error("a({n}) unresolved after {terms} terms at {precision} bits")]
    Unresolved { n: u64, terms: u64, precision: u32 },

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("main term vanishes at n = {n}")]
    ZeroMainTerm { n: i64 },

    #[error("value at n = {n} is not real")]
    NonReal { n: i64 },

    #[error("non-positive value {value} at n = {n}")]
    NonPositiveValue { n: i64, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;
