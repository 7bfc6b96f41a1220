use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("position {pos} is outside 1..={n}")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("range [{i}, {j}] is outside a string of length {n}")]
    RangeOutOfBounds { i: usize, j: usize, n: usize },

    #[error("window length {d} is outside 1..={max}")]
    LengthOutOfRange { d: usize, max: usize },

    #[error("input string is empty")]
    EmptyInput,

    #[error("character {0:?} is not in the alphabet")]
    UnknownChar(char),

    #[error("malformed RLE token {token:?}: {reason}")]
    MalformedToken { token: String, reason: &'static str },

    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),
}
