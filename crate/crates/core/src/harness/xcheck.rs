use std::fmt;

use super::HarnessError;
use crate::laurent::{synth_dfao, DEFAULT_STATE_LIMIT};
use crate::sequences::{builtin_ctspec, oracle, SeqKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XcheckReport {
    pub kind: SeqKind,
    pub p: u32,
    pub count: usize,
    pub states: usize,
    /// `(n, automaton value, oracle value)` at the first disagreement.
    pub mismatch: Option<(u64, u32, u32)>,
    /// Whether the value 0 occurs below `count`.
    pub zero_seen: bool,
}

impl XcheckReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for XcheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mismatch {
            None => write!(
                f,
                "{} mod {}: {} states, agrees with the oracle for n < {}",
                self.kind, self.p, self.states, self.count
            ),
            Some((n, a, o)) => write!(
                f,
                "{} mod {}: mismatch at n={n}: automaton {a}, oracle {o}",
                self.kind, self.p
            ),
        }
    }
}

/// Synthesizes the automaton for `kind` mod `p` and compares it with the
/// brute-force oracle for every `n < count`.
pub fn xcheck(kind: SeqKind, p: u32, count: usize) -> Result<XcheckReport, HarnessError> {
    let dfao = synth_dfao(&builtin_ctspec(kind, p)?, DEFAULT_STATE_LIMIT)?;
    let table = oracle(kind, count, p);
    let mut mismatch = None;
    for (n, &want) in table.values.iter().enumerate() {
        let got = dfao.value(n as u64);
        if got != want {
            mismatch = Some((n as u64, got, want));
            break;
        }
    }
    Ok(XcheckReport {
        kind,
        p,
        count,
        states: dfao.state_count(),
        mismatch,
        zero_seen: table.values.contains(&0),
    })
}
