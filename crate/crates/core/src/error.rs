use thiserror::Error;

/// Errors raised by alphabet, word, set, automaton and graph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("word uses a letter index {index} outside an alphabet of {size} letters")]
    AlphabetMismatch { index: usize, size: usize },
    #[error("automaton does not accept an upward-closed language (witness `{0}`)")]
    NotUpwardClosed(String),
    #[error("side condition violated for {rule}: {condition}")]
    SideConditionViolated {
        rule: &'static str,
        condition: String,
    },
    #[error("alphabet hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("graph has arcs in both directions between `{0}` and `{1}`")]
    DoubleArc(String, String),
    #[error("explicit loop at `{0}`; loops are implicit")]
    Loop(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid document: {0}")]
    Document(String),
}

impl Error {
    /// Short machine-readable name used in error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyAlphabet => "EmptyAlphabet",
            Error::DuplicateLetter(_) => "DuplicateLetterError",
            Error::UnknownLetter(_) => "UnknownLetter",
            Error::Cycle(..) => "CycleError",
            Error::AlphabetMismatch { .. } => "AlphabetMismatch",
            Error::NotUpwardClosed(_) => "NotUpwardClosed",
            Error::SideConditionViolated { .. } => "SideConditionViolated",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::UnknownRule(_) => "UnknownRule",
            Error::DoubleArc(..) => "DoubleArcError",
            Error::Loop(_) => "LoopError",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::Document(_) => "InvalidDocument",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
