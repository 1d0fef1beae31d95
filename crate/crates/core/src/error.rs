use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("token {position} ({token:?}): malformed, expected `value^color`")]
    MalformedToken { position: usize, token: String },

    #[error("token {position}: color {color} out of range for modulus {modulus}")]
    ColorOutOfRange {
        position: usize,
        color: u32,
        modulus: u32,
    },

    #[error("token {position}: value {value} breaks the permutation of 1..{len}")]
    NotAPermutation {
        position: usize,
        value: u32,
        len: usize,
    },

    #[error("color modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: u32, found: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("group of size {size} exceeds the enumeration limit {limit}")]
    GuardExceeded { size: String, limit: u64 },

    #[error("series exponential needs a zero constant term")]
    NonzeroConstantTerm,

    #[error("series orders differ ({left} vs {right})")]
    SeriesOrderMismatch { left: usize, right: usize },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}
