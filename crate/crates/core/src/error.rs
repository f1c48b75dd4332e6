use thiserror::Error;

/// Errors produced by the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length {0} exceeds the 64-bit word cap")]
    TooLong(usize),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A computation would exceed its exhaustive-enumeration guard.
    #[error("{what} = {value} exceeds the enumeration guard of {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("matrix text parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("received word parse error: {0}")]
    BadWord(String),

    /// A fully known parity-check equation is violated; the received word
    /// cannot come from an erasure-only channel.
    #[error("parity-check row {row} is violated by the non-erased symbols")]
    ChannelViolation { row: usize },

    /// No codeword agrees with the non-erased symbols.
    #[error("no codeword matches the non-erased symbols")]
    NoMatchingCodeword,

    #[error("matrix is not a parity-check matrix of the code: {0}")]
    NotParityCheck(String),

    #[error("matrix has rank {rank}, but a parity-check matrix needs rank {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid channel configuration: {0}")]
    InvalidChannel(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
