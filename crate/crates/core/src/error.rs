use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty defining sequence")]
    EmptySequence,
    #[error("pair {index}: malformed token {token:?} (expected \"p,p'\")")]
    MalformedPair { index: usize, token: String },
    #[error("pair {index}: ({p},{p_prime}) is invalid, need p, p' >= 1 and |p - p'| = 1")]
    InvalidPair { index: usize, p: usize, p_prime: usize },
    #[error("invalid letter {0:?}, words are over {{a, b}}")]
    InvalidLetter(char),
    #[error("word length {len} exceeds the guard of {limit} letters")]
    GuardExceeded { len: u64, limit: u64 },
    #[error("not block-complete for ({p},{p_prime}): {reason}")]
    NotBlockComplete { p: usize, p_prime: usize, reason: String },
    #[error("not a factor of a ({p},{p_prime}) level: a-gap of length {gap} at position {position}")]
    NotLevelFactor { p: usize, p_prime: usize, gap: usize, position: usize },
    #[error("position {position} out of range 1..={max}")]
    OutOfRange { position: u64, max: u64 },
    #[error("level {level} out of range 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("({start},{end},{period}) is not a run: {reason}")]
    NotARun { start: usize, end: usize, period: usize, reason: String },
    #[error("arithmetic overflow while evaluating lengths")]
    Overflow,
}
