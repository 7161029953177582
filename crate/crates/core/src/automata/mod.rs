//! Automata over base-`k` digit tuples: DFAOs for sequences, multi-track
//! DFAs for relations, and the operations the decision procedure needs.
//!
//! Every automaton reads least significant digit first. The number 0 is the
//! empty word, and all automata treat trailing all-zero tuples as padding.

mod dfao;
mod linear;
mod multi;
mod partition;
mod regex;

pub use dfao::Dfao;
pub use linear::{linear, linear_carry_bound, LinRel};
pub use multi::{BoolOp, MultiDfa};
pub use regex::{compile_regex, regex_compile, DigitRegex, RegexMatch};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomataError {
    #[error("base must be at least 2, got {0}")]
    BadBase(u32),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(u32, u32),
    #[error("initial state {0} out of range")]
    BadInitial(u32),
    #[error("transition table is not total")]
    NotTotal,
    #[error("transition target {0} out of range")]
    StateOutOfRange(u32),
    #[error("output {0} not below modulus {1}")]
    OutputOutOfRange(u32, u32),
    #[error("state {0} changes output on a trailing zero")]
    NotZeroStable(u32),
    #[error("state {0} changes acceptance on an all-zero tuple")]
    NotPadInvariant(u32),
    #[error("unknown track {0:?}")]
    UnknownTrack(String),
    #[error("duplicate track {0:?}")]
    DuplicateTrack(String),
    #[error("track sets differ: {0:?} vs {1:?}")]
    TrackMismatch(Vec<String>, Vec<String>),
    #[error("linear relation needs at least one track")]
    NoTracks,
    #[error("digit {0} is not below base {1}")]
    DigitTooLarge(u32, u32),
    #[error("bad pattern {pattern:?} at {position}: {message}")]
    Regex {
        pattern: String,
        position: usize,
        message: String,
    },
}
