use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("index violation: {0}")]
    Index(String),

    #[error("braid is not pure")]
    NotPure,

    #[error("free word exceeded {limit} letters during the Artin action")]
    ResourceLimit { limit: usize },

    #[error("cannot parse braid word: {0}")]
    Parse(String),

    #[error("matrix is not congruent to the identity mod 2")]
    NotLevelTwo,

    #[error("closure exceeded {limit} elements ({partial} found so far)")]
    ClosureLimit { limit: usize, partial: usize },

    #[error("generator {index} is not invertible mod {modulus}")]
    NotInvertible { index: usize, modulus: u8 },

    #[error("shape mismatch: {0}")]
    Mismatch(String),

    #[error("subgroup is not contained in the ambient group")]
    NotContained,

    #[error("symplectization failed: {0}")]
    Symplectize(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
