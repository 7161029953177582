use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;

use super::ast::Command;
use super::{compile, parse, LogicError};
use crate::automata::{Dfao, MultiDfa};

/// A stored predicate: parameters in alphabetical order are the tracks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicate {
    pub params: Vec<String>,
    pub dfa: MultiDfa,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Automaton(MultiDfa),
}

impl Verdict {
    pub fn truth(&self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Automaton(_) => None,
        }
    }

    pub fn automaton(&self) -> Option<&MultiDfa> {
        match self {
            Verdict::Automaton(a) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::True => f.write_str("TRUE"),
            Verdict::False => f.write_str("FALSE"),
            Verdict::Automaton(a) => write!(
                f,
                "automaton ({} states, tracks {})",
                a.state_count(),
                a.tracks().join(",")
            ),
        }
    }
}

type Builder = Box<dyn Fn() -> Result<Dfao, String>>;

struct SeqEntry {
    value: OnceCell<Dfao>,
    builder: Option<Builder>,
}

/// Named sequences and predicates, plus a log of command results.
#[derive(Default)]
pub struct Session {
    sequences: BTreeMap<String, SeqEntry>,
    predicates: BTreeMap<String, Predicate>,
    log: Vec<(String, Verdict)>,
}

impl fmt::Debug for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Session")
            .field("sequences", &self.sequences.keys().collect::<Vec<_>>())
            .field("predicates", &self.predicates.keys().collect::<Vec<_>>())
            .field("log", &self.log.len())
            .finish()
    }
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register_sequence(&mut self, name: &str, dfao: Dfao) -> Result<(), LogicError> {
        self.check_unused(name)?;
        self.sequences.insert(
            name.to_string(),
            SeqEntry {
                value: OnceCell::from(dfao),
                builder: None,
            },
        );
        Ok(())
    }

    /// Registers a sequence that is built the first time a formula uses it.
    pub fn register_lazy(
        &mut self,
        name: &str,
        build: impl Fn() -> Result<Dfao, String> + 'static,
    ) -> Result<(), LogicError> {
        self.check_unused(name)?;
        self.sequences.insert(
            name.to_string(),
            SeqEntry {
                value: OnceCell::new(),
                builder: Some(Box::new(build)),
            },
        );
        Ok(())
    }

    fn check_unused(&self, name: &str) -> Result<(), LogicError> {
        if self.sequences.contains_key(name) {
            return Err(LogicError::DuplicateSequence(name.to_string()));
        }
        Ok(())
    }

    pub fn sequence(&self, name: &str) -> Result<&Dfao, LogicError> {
        let entry = self
            .sequences
            .get(name)
            .ok_or_else(|| LogicError::UnknownSequence(name.to_string()))?;
        if let Some(d) = entry.value.get() {
            return Ok(d);
        }
        let build = entry.builder.as_ref().expect("lazy entries carry a builder");
        let dfao = build().map_err(|message| LogicError::Sequence {
            name: name.to_string(),
            message,
        })?;
        Ok(entry.value.get_or_init(|| dfao))
    }

    pub fn sequence_names(&self) -> Vec<String> {
        self.sequences.keys().cloned().collect()
    }

    pub fn has_sequence(&self, name: &str) -> bool {
        self.sequences.contains_key(name)
    }

    pub fn predicate(&self, name: &str) -> Result<&Predicate, LogicError> {
        self.predicates
            .get(name)
            .ok_or_else(|| LogicError::UnknownPredicate(name.to_string()))
    }

    /// Stores `dfa` as a callable predicate; its tracks are the parameters.
    pub fn define(&mut self, name: &str, dfa: MultiDfa) {
        let dfa = dfa.sorted_tracks();
        let params = dfa.tracks().to_vec();
        self.predicates
            .insert(name.to_string(), Predicate { params, dfa });
    }

    pub fn log(&self) -> &[(String, Verdict)] {
        &self.log
    }

    /// Compiles a command, registers the result as a predicate (for both
    /// `def` and `eval`) and logs the verdict.
    pub fn eval_command(&mut self, cmd: &Command) -> Result<Verdict, LogicError> {
        let dfa = compile(&cmd.formula, cmd.base, self)?;
        let verdict = match dfa.truth() {
            Some(true) => Verdict::True,
            Some(false) => Verdict::False,
            None => Verdict::Automaton(dfa.clone()),
        };
        self.define(&cmd.name, dfa);
        self.log.push((cmd.name.clone(), verdict.clone()));
        Ok(verdict)
    }

    /// Runs every command of a script in order. The first failure aborts.
    pub fn run_script(&mut self, src: &str) -> Result<Vec<(String, Verdict)>, LogicError> {
        let commands = parse(src)?;
        let mut out = Vec::with_capacity(commands.len());
        for cmd in &commands {
            let verdict = self.eval_command(cmd).map_err(|e| LogicError::Command {
                name: cmd.name.clone(),
                line: cmd.line,
                source: Box::new(e),
            })?;
            out.push((cmd.name.clone(), verdict));
        }
        Ok(out)
    }
}
