use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("letter {letter} is outside an alphabet of size {alphabet_size}")]
    InvalidLetter { letter: usize, alphabet_size: usize },

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("not a permutation of 1..={degree}: {mapping:?}")]
    NotAPermutation { degree: usize, mapping: Vec<usize> },

    #[error("permutation of degree {degree} applied to a sequence of length {length}")]
    DegreeMismatch { degree: usize, length: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("word {word} has no neighbouring permutation; no cover exists")]
    Infeasible { word: String },

    #[error("corrupt checkpoint {path}: {reason}; restart required")]
    CorruptCheckpoint { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_owned(),
            reason: reason.into(),
        }
    }
}
