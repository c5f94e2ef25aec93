use thiserror::Error;

/// Errors produced by pattern ingestion, basis enumeration and estimation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty pattern")]
    EmptyInput,

    #[error("illegal character {ch:?} at position {position} (expected '0', '1' or ',')")]
    IllegalCharacter { ch: char, position: usize },

    #[error("length mismatch: expected {expected} bits, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("pattern length {0} out of range (must be 1..=64)")]
    LengthOutOfRange(usize),

    #[error("dataset contains no patterns")]
    EmptyDataset,

    #[error("line {line}: pattern has {found} bits but earlier patterns have {expected}")]
    RaggedLengths {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("variable index {index} out of range 1..={length}")]
    IndexOutOfRange { index: usize, length: usize },

    #[error("length {length} exceeds the exhaustive-enumeration cap of {cap}")]
    CapExceeded { length: usize, cap: usize },

    #[error("transform input length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("argument out of range: {0}")]
    Range(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
