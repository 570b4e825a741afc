//! Finite Sturmian words: generation from defining sequences, linear-time run
//! enumeration, closed-form counts and indexes, and a brute-force oracle to
//! check all of it against.

#![forbid(unsafe_code)]

pub mod characterize;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod eta;
pub mod oracle;
pub mod words;

pub use error::{Error, Result};
pub use oracle::{NormalizedRun, Run};
pub use words::{DefiningSequence, Guard, Letter, ParamPair, Word};
