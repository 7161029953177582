//! Persistence, the built-in registry, oracle cross-checks and the named
//! theorem checks.

mod checks;
mod dot;
mod format;
mod registry;
pub mod scripts;
mod xcheck;

use std::path::{Path, PathBuf};

use thiserror::Error;

pub use checks::{
    find_check, list_checks, oracle_runs, run_check, run_check_with, shifted_regex, CheckDef,
    CheckResult, Step, CHECKS,
};
pub use dot::{export_dot, to_dot};
pub use format::{emit, load_automaton, parse_automaton, save_automaton, Automaton, DFAO_TRACK};
pub use registry::{
    builtin_dfao, builtin_kind, builtin_registry, builtin_registry_cached, coherent,
    BUILTIN_NAMES, COHERENCE_PREFIX,
};
pub use xcheck::{xcheck, XcheckReport};

use crate::automata::AutomataError;
use crate::laurent::LaurentError;
use crate::logic::LogicError;
use crate::sequences::SequenceError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("{name} failed its oracle self-test: {message}")]
    Incoherent { name: String, message: String },
    #[error(transparent)]
    Automata(#[from] AutomataError),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

impl HarnessError {
    pub(crate) fn io(path: &Path, e: std::io::Error) -> Self {
        HarnessError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        }
    }
}
