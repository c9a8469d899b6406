use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level {needed} exceeds the enumerated universe (max set level {max}) in {context}")]
    LevelOverflow {
        needed: usize,
        max: usize,
        context: String,
    },
    #[error("universe level {level} has 2^{log2_size} elements, over the budget of {budget}")]
    Budget { level: usize, log2_size: usize, budget: u64 },
    #[error("quantifier range over level {level} has {size} elements, over the limit of {limit}")]
    RangeTooLarge { level: usize, size: usize, limit: usize },
    #[error("level mismatch in {context}: {left} vs {right}")]
    LevelMismatch {
        left: usize,
        right: usize,
        context: String,
    },
    #[error("not a cardinal: {0}")]
    NotCardinal(String),
    #[error("invalid set value: {0}")]
    BadSetVal(String),
    #[error("evaluation error: {0}")]
    Eval(String),
    #[error("witness binding `{0}` is outside its quantifier range")]
    OutOfRange(String),
    #[error("unknown check selection `{0}`")]
    UnknownSelection(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Errors caused by the size of the universe rather than by a value.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::LevelOverflow { .. } | Error::Budget { .. } | Error::RangeTooLarge { .. }
        )
    }
}
