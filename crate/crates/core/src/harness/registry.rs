//! The built-in sequences, synthesized on first use and optionally cached
//! on disk as `ctaut` files.

use std::fs;
use std::path::{Path, PathBuf};

use super::{load_automaton, save_automaton, Automaton, HarnessError};
use crate::automata::Dfao;
use crate::laurent::{synth_dfao, DEFAULT_STATE_LIMIT};
use crate::logic::Session;
use crate::sequences::{builtin_ctspec, oracle, thue_morse_dfao, SeqKind};

pub const BUILTIN_NAMES: [&str; 8] = [
    "T_lsd", "MOT2", "MOT3", "MOT5", "TRI3", "TRI5", "CAT3", "CAT5",
];

/// Prefix checked against the oracle whenever a built-in is loaded.
pub const COHERENCE_PREFIX: usize = 10_000;

/// The `(kind, p)` behind a built-in constant-term sequence name.
pub fn builtin_kind(name: &str) -> Option<(SeqKind, u32)> {
    let (kind, p) = match name.get(..3)? {
        "MOT" => (SeqKind::Motzkin, &name[3..]),
        "TRI" => (SeqKind::Trinomial, &name[3..]),
        "CAT" => (SeqKind::Catalan, &name[3..]),
        _ => return None,
    };
    let p: u32 = p.parse().ok()?;
    BUILTIN_NAMES.contains(&name).then_some((kind, p))
}

/// First `n < count` where `dfao` disagrees with the reference values.
fn first_mismatch(dfao: &Dfao, reference: impl Fn(usize) -> u32, count: usize) -> Option<usize> {
    (0..count).find(|&n| dfao.value(n as u64) != reference(n))
}

/// Checks a built-in against its independent oracle on a prefix.
pub fn coherent(name: &str, dfao: &Dfao, count: usize) -> Result<(), String> {
    let bad = if name == "T_lsd" {
        first_mismatch(dfao, |n| n.count_ones() % 2, count)
    } else {
        let (kind, p) = builtin_kind(name).ok_or_else(|| format!("{name} is not built in"))?;
        if dfao.base() != p || dfao.modulus() != p {
            return Err(format!("{name} has base {} and modulus {}", dfao.base(), dfao.modulus()));
        }
        let table = oracle(kind, count, p);
        first_mismatch(dfao, |n| table.values[n], count)
    };
    match bad {
        None => Ok(()),
        Some(n) => Err(format!("{name} disagrees with its oracle at n={n}")),
    }
}

fn synthesize(name: &str) -> Result<Dfao, HarnessError> {
    if name == "T_lsd" {
        return Ok(thue_morse_dfao());
    }
    let (kind, p) = builtin_kind(name).ok_or_else(|| HarnessError::UnknownSequence(name.to_string()))?;
    Ok(synth_dfao(&builtin_ctspec(kind, p)?, DEFAULT_STATE_LIMIT)?)
}

/// Loads a built-in from `cache` if a coherent copy is there, otherwise
/// synthesizes it (and writes it to `cache` when given).
pub fn builtin_dfao(name: &str, cache: Option<&Path>) -> Result<Dfao, HarnessError> {
    if !BUILTIN_NAMES.contains(&name) {
        return Err(HarnessError::UnknownSequence(name.to_string()));
    }
    let path = cache.map(|dir| dir.join(format!("{name}.ctaut")));
    if let Some(path) = &path {
        if let Ok(Automaton::Dfao(d)) = load_automaton(path) {
            if coherent(name, &d, COHERENCE_PREFIX).is_ok() {
                return Ok(d);
            }
        }
    }
    let dfao = synthesize(name)?;
    coherent(name, &dfao, COHERENCE_PREFIX).map_err(|message| HarnessError::Incoherent {
        name: name.to_string(),
        message,
    })?;
    if let (Some(dir), Some(path)) = (cache, &path) {
        fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
        save_automaton(&Automaton::Dfao(dfao.clone()), path)?;
    }
    Ok(dfao)
}

/// A session holding every built-in sequence, without a disk cache.
pub fn builtin_registry() -> Session {
    builtin_registry_cached(None)
}

pub fn builtin_registry_cached(cache: Option<PathBuf>) -> Session {
    let mut s = Session::new();
    for name in BUILTIN_NAMES {
        let cache = cache.clone();
        s.register_lazy(name, move || {
            builtin_dfao(name, cache.as_deref()).map_err(|e| e.to_string())
        })
        .expect("built-in names are distinct");
    }
    s
}
