use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A position or factor reference falls outside the word.
    #[error("{what} out of range: {value} (word length {len})")]
    Range {
        what: &'static str,
        value: usize,
        len: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Text input contained a character outside `a..=z`.
    #[error("invalid character {ch:?} at position {position}")]
    Format { ch: char, position: usize },

    /// A structural property that should follow from the inputs failed.
    #[error("invariant broken: {0}")]
    Invariant(String),

    #[error("runtime failure: {0}")]
    Runtime(String),

    #[error("symbol {symbol} not below alphabet size {alphabet}")]
    Symbol { symbol: u8, alphabet: u8 },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
