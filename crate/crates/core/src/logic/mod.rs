//! The query language: parsing, compilation of first-order formulas over
//! `(N, +, <, constant multiplication, sequence indexing)` to multi-track
//! DFAs, and the session that holds named sequences and predicates.

mod ast;
mod compile;
mod parser;
mod session;

pub use ast::{Command, CommandKind, Formula, Quantifier, Rel, SeqRhs, Term};
pub use compile::compile;
pub use parser::{parse, parse_formula};
pub use session::{Predicate, Session, Verdict};

use thiserror::Error;

use crate::automata::AutomataError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown escape \\{escape} at {line}:{col}")]
    UnknownEscape {
        line: usize,
        col: usize,
        escape: String,
    },
    #[error("missing ?lsd_k base header at {line}:{col}")]
    MissingBase { line: usize, col: usize },
    #[error("unknown sequence {0}")]
    UnknownSequence(String),
    #[error("unknown predicate {0}")]
    UnknownPredicate(String),
    #[error("{name} takes {expected} arguments, got {found}")]
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("{name} has base {found}, formula has base {expected}")]
    BaseMismatch {
        name: String,
        expected: u32,
        found: u32,
    },
    #[error("output @{value} of {seq} is not below its modulus {modulus}")]
    OutputTooLarge { seq: String, value: u32, modulus: u32 },
    #[error("sequence {0} is already registered")]
    DuplicateSequence(String),
    #[error("variable {0} is already bound by an enclosing quantifier")]
    Rebound(String),
    #[error("cannot build sequence {name}: {message}")]
    Sequence { name: String, message: String },
    #[error("in command {name} at line {line}: {source}")]
    Command {
        name: String,
        line: usize,
        source: Box<LogicError>,
    },
    #[error(transparent)]
    Automata(#[from] AutomataError),
}
