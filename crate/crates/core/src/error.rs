use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("program length {0} is not a multiple of 3")]
    InvalidLength(usize),
    #[error("invalid opcode {opcode:03b} at instruction {index}")]
    InvalidOpcode { opcode: u8, index: usize },
    #[error("buffer exceeded cap of {cap} bits")]
    BufferOverflow { cap: usize },
    #[error("malformed stream: {0}")]
    MalformedStream(String),
    #[error("malformed prefix: {0}")]
    MalformedPrefix(String),
    #[error("unknown estimator backend {0:?}")]
    UnknownBackend(String),
    #[error("unknown encoder {0:?}")]
    UnknownEncoder(String),
    #[error("length mismatch: {left} vs {right} bits")]
    LengthMismatch { left: usize, right: usize },
    #[error("normalization violated: {0}")]
    NormalizationViolation(String),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("distribution is not lossless: H(X1,X2|Y) = {0:.9} bits")]
    NotLossless(f64),
    #[error("string of {0} bits is too short for a neighborhood")]
    TooShort(usize),
    #[error("input outside encoder domain: {0}")]
    DomainViolation(String),
    #[error("odd input length {0} for a Feistel encoder")]
    OddLength(usize),
    #[error("unconditional complexity is zero")]
    ZeroDenominator,
    #[error("string is not in the encoder image")]
    NotInImage,
    #[error("no neighbor encodes to the target")]
    NoMatchingNeighbor,
    #[error("corpus size {0} exceeds 2^24 bytes")]
    SizeExceeded(usize),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::InvalidLength(_) => "invalid-length",
            Error::InvalidOpcode { .. } => "invalid-opcode",
            Error::BufferOverflow { .. } => "buffer-overflow",
            Error::MalformedStream(_) => "malformed-stream",
            Error::MalformedPrefix(_) => "malformed-prefix",
            Error::UnknownBackend(_) => "unknown-backend",
            Error::UnknownEncoder(_) => "unknown-encoder",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::NormalizationViolation(_) => "normalization-violation",
            Error::InvalidDistribution(_) => "invalid-distribution",
            Error::NotLossless(_) => "not-lossless",
            Error::TooShort(_) => "too-short",
            Error::DomainViolation(_) => "domain-violation",
            Error::OddLength(_) => "odd-length",
            Error::ZeroDenominator => "zero-denominator",
            Error::NotInImage => "not-in-image",
            Error::NoMatchingNeighbor => "no-matching-neighbor",
            Error::SizeExceeded(_) => "size-exceeded",
            Error::Io(_) => "io-error",
        }
    }

    /// Process exit status: 2 input error, 3 precondition violation,
    /// 4 internal limit exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BufferOverflow { .. } | Error::SizeExceeded(_) => 4,
            Error::LengthMismatch { .. }
            | Error::NormalizationViolation(_)
            | Error::NotLossless(_)
            | Error::TooShort(_)
            | Error::DomainViolation(_)
            | Error::OddLength(_)
            | Error::ZeroDenominator
            | Error::NotInImage
            | Error::NoMatchingNeighbor => 3,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
