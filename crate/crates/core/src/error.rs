use thiserror::Error;

/// Errors produced by braid parsing and the algorithms built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("strand count {0} is not supported (must be between 1 and {max})", max = crate::MAX_STRANDS)]
    UnsupportedStrandCount(usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("strand selection is empty or out of range")]
    InvalidStrandSelection,

    #[error("n = {n} is out of range (allowed {min}..={max})")]
    OutOfRange { n: usize, min: usize, max: usize },

    #[error("summit set exceeded the cap of {cap} elements")]
    SummitCapExceeded { cap: usize },

    #[error("closure has {components} components; a knot is required")]
    NotAKnot { components: usize },

    #[error("braid word contains negative letters")]
    NotPositive,

    #[error("closure is split: generator sigma_{missing} does not occur")]
    SplitClosure { missing: usize },
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
