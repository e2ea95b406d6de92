use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("degree too small: need degree >= 2, got {0}")]
    DegreeTooSmall(usize),

    #[error("polynomial is not primitive: content {0}")]
    NotPrimitive(String),

    #[error("polynomial is reducible over the rationals ({0})")]
    Reducible(String),

    #[error("limit too large: {limit} exceeds cap {cap}")]
    LimitTooLarge { limit: u64, cap: u64 },

    #[error("modulus {n} out of range [1, {limit}]")]
    ModulusOutOfRange { n: u64, limit: u64 },

    #[error("polynomial vanishes mod {p}")]
    VanishesModP { p: u64 },

    #[error("prime power too large: {p}^{k} overflows 64 bits")]
    PrimePowerTooLarge { p: u64, k: u32 },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("modulus product {0} * {1} overflows 64 bits")]
    ProductTooLarge(u64, u64),

    #[error("no root pairs below cutoff")]
    EmptySequence,

    #[error("malformed rectangle: {0}")]
    MalformedRectangle(String),

    #[error("counterexample requires identical polynomials")]
    PolynomialsDiffer,

    #[error("normalization bracket violated: M={m}, sum={sum}, slack={slack}")]
    BracketViolation { m: u64, sum: u64, slack: u64 },

    #[error("parse error at position {position}: {message} (input {input:?})")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("invalid cache entry for modulus {n}: {reason}")]
    CacheInvalid { n: u64, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
