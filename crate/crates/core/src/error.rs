use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("inner shape {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("decorated count requires a tableau")]
    DecoratedCountNeedsTableau,
    #[error("not a tableau word: {0}")]
    NotATableauWord(String),
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("letter {letter} exceeds alphabet size {n}")]
    LetterOutOfRange { letter: u32, n: usize },
    #[error("not odd symmetric of this degree: {0}")]
    NotInSpan(String),
    #[error("partition {partition} has more than {n} parts")]
    TooManyParts { partition: String, n: usize },
    #[error("skew tableau row word is not Yamanouchi")]
    NotYamanouchi,
    #[error("not in any LR polytope: {0}")]
    BadMarginals(String),
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("methods disagree: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
