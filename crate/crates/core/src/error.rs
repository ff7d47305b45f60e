use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token {token:?} at byte {position}")]
    MalformedToken { position: usize, token: String },

    #[error("generator index {index} at byte {position} is out of range 1..={bound}")]
    IndexOutOfRange {
        position: usize,
        index: usize,
        bound: usize,
    },

    #[error("generator index {index} is out of range 1..={bound}")]
    GeneratorOutOfRange { index: usize, bound: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("rank must be positive")]
    ZeroRank,

    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("cannot specialize at t = {0}: only t = 1 and t = -1 keep integer entries")]
    NonUnitSpecialization(i64),

    #[error("word has odd exponent sum and is not in the even subgroup")]
    OddWord,

    #[error("vector coordinates sum to {0}, expected 0")]
    Unbalanced(i64),

    #[error("word is not in the kernel of epsilon")]
    NotInKernel,

    #[error("invalid pure generator indices ({i}, {j}) for {strands} strands")]
    InvalidPureGenerator { strands: usize, i: usize, j: usize },

    #[error("invalid normal generator {0}")]
    InvalidNormalGenerator(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}
