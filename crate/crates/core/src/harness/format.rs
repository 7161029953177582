//! The `ctaut` text format.
//!
//! ```text
//! ctaut 1
//! base <k> kind <dfa|dfao> [mod <m>] tracks <a,b,...|->
//! states <N> initial <q0>
//! s <id> <accept|reject|out <v>>
//! t <from> <d1[,d2,...]|-> <to>
//! ```
//!
//! Digits of a transition are listed in track order. `#` starts a comment.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::HarnessError;
use crate::automata::{AutomataError, Dfao, MultiDfa};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Dfao(Dfao),
    Dfa(MultiDfa),
}

impl From<Dfao> for Automaton {
    fn from(d: Dfao) -> Self {
        Automaton::Dfao(d)
    }
}

impl From<MultiDfa> for Automaton {
    fn from(d: MultiDfa) -> Self {
        Automaton::Dfa(d)
    }
}

impl Automaton {
    pub fn base(&self) -> u32 {
        match self {
            Automaton::Dfao(d) => d.base(),
            Automaton::Dfa(d) => d.base(),
        }
    }

    pub fn state_count(&self) -> usize {
        match self {
            Automaton::Dfao(d) => d.state_count(),
            Automaton::Dfa(d) => d.state_count(),
        }
    }
}

/// Track name written for the single input of a DFAO.
pub const DFAO_TRACK: &str = "n";

fn digits_of(symbol: usize, base: u32, width: usize) -> String {
    if width == 0 {
        return "-".to_string();
    }
    let mut digits = vec![0usize; width];
    let mut s = symbol;
    for d in digits.iter_mut().rev() {
        *d = s % base as usize;
        s /= base as usize;
    }
    digits
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn emit(a: &Automaton) -> String {
    let mut out = String::from("ctaut 1\n");
    match a {
        Automaton::Dfao(d) => {
            let k = d.base() as usize;
            writeln!(
                out,
                "base {} kind dfao mod {} tracks {DFAO_TRACK}",
                d.base(),
                d.modulus()
            )
            .unwrap();
            writeln!(out, "states {} initial {}", d.state_count(), d.initial()).unwrap();
            for (q, v) in d.outputs().iter().enumerate() {
                writeln!(out, "s {q} out {v}").unwrap();
            }
            for (i, to) in d.transitions().iter().enumerate() {
                writeln!(out, "t {} {} {to}", i / k, i % k).unwrap();
            }
        }
        Automaton::Dfa(d) => {
            let tracks = if d.tracks().is_empty() {
                "-".to_string()
            } else {
                d.tracks().join(",")
            };
            writeln!(out, "base {} kind dfa tracks {tracks}", d.base()).unwrap();
            writeln!(out, "states {} initial {}", d.state_count(), d.initial()).unwrap();
            for (q, &acc) in d.accepting().iter().enumerate() {
                let word = if acc { "accept" } else { "reject" };
                writeln!(out, "s {q} {word}").unwrap();
            }
            let sigma = d.alphabet_size();
            let width = d.tracks().len();
            for (i, to) in d.transitions().iter().enumerate() {
                let digits = digits_of(i % sigma, d.base(), width);
                writeln!(out, "t {} {digits} {to}", i / sigma).unwrap();
            }
        }
    }
    out
}

fn bad(line: usize, message: impl Into<String>) -> HarnessError {
    HarnessError::Format {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, HarnessError> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| bad(line, format!("expected {what}")))
}

fn keyword(tok: Option<&str>, want: &str, line: usize) -> Result<(), HarnessError> {
    if tok == Some(want) {
        Ok(())
    } else {
        Err(bad(line, format!("expected {want:?}")))
    }
}

pub fn parse_automaton(text: &str) -> Result<Automaton, HarnessError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    });
    let (ln, magic) = lines.next().ok_or_else(|| bad(1, "empty file"))?;
    if magic.split_whitespace().collect::<Vec<_>>() != ["ctaut", "1"] {
        return Err(bad(ln, "expected header \"ctaut 1\""));
    }

    let (ln, header) = lines.next().ok_or_else(|| bad(ln + 1, "missing base line"))?;
    let mut it = header.split_whitespace();
    keyword(it.next(), "base", ln)?;
    let base: u32 = number(it.next(), ln, "a base")?;
    if base < 2 {
        return Err(bad(ln, "base must be at least 2"));
    }
    keyword(it.next(), "kind", ln)?;
    let is_dfao = match it.next() {
        Some("dfao") => true,
        Some("dfa") => false,
        _ => return Err(bad(ln, "kind must be dfa or dfao")),
    };
    let mut modulus = 0u32;
    let mut next = it.next();
    if is_dfao {
        keyword(next, "mod", ln)?;
        modulus = number(it.next(), ln, "a modulus")?;
        next = it.next();
    }
    keyword(next, "tracks", ln)?;
    let tracks: Vec<String> = match it.next() {
        Some("-") => Vec::new(),
        Some(list) => list.split(',').map(str::to_string).collect(),
        None => return Err(bad(ln, "missing track list")),
    };
    if it.next().is_some() {
        return Err(bad(ln, "trailing fields"));
    }
    if tracks.iter().any(|t| t.is_empty()) {
        return Err(bad(ln, "empty track name"));
    }
    if is_dfao && tracks.len() != 1 {
        return Err(bad(ln, "a dfao has exactly one track"));
    }
    let width = tracks.len();
    let sigma = (base as usize)
        .checked_pow(width as u32)
        .ok_or_else(|| bad(ln, "alphabet too large"))?;

    let (states_ln, states_line) = lines.next().ok_or_else(|| bad(ln + 1, "missing states line"))?;
    let ln = states_ln;
    let mut it = states_line.split_whitespace();
    keyword(it.next(), "states", ln)?;
    let n: usize = number(it.next(), ln, "a state count")?;
    keyword(it.next(), "initial", ln)?;
    let initial: u32 = number(it.next(), ln, "an initial state")?;
    if n == 0 {
        return Err(bad(ln, "at least one state is required"));
    }

    let mut labels: Vec<Option<u32>> = vec![None; n];
    let mut trans: Vec<Option<u32>> = vec![None; n * sigma];
    for (ln, l) in lines {
        let mut it = l.split_whitespace();
        match it.next() {
            Some("s") => {
                let q: usize = number(it.next(), ln, "a state id")?;
                if q >= n {
                    return Err(bad(ln, format!("state {q} out of range")));
                }
                let label = match (it.next(), is_dfao) {
                    (Some("accept"), false) => 1,
                    (Some("reject"), false) => 0,
                    (Some("out"), true) => number(it.next(), ln, "an output")?,
                    _ => return Err(bad(ln, "bad state label")),
                };
                if labels[q].replace(label).is_some() {
                    return Err(bad(ln, format!("state {q} declared twice")));
                }
            }
            Some("t") => {
                let from: usize = number(it.next(), ln, "a source state")?;
                let digits = it.next().ok_or_else(|| bad(ln, "missing digits"))?;
                let to: u32 = number(it.next(), ln, "a target state")?;
                if from >= n {
                    return Err(bad(ln, format!("state {from} out of range")));
                }
                let ds: Vec<u32> = if digits == "-" {
                    Vec::new()
                } else {
                    digits
                        .split(',')
                        .map(|d| number(Some(d), ln, "a digit"))
                        .collect::<Result<_, _>>()?
                };
                if ds.len() != width {
                    return Err(bad(ln, format!("expected {width} digits")));
                }
                if let Some(&d) = ds.iter().find(|&&d| d >= base) {
                    return Err(bad(ln, format!("digit {d} not below base {base}")));
                }
                let sym = ds.iter().fold(0usize, |s, &d| s * base as usize + d as usize);
                if trans[from * sigma + sym].replace(to).is_some() {
                    return Err(bad(ln, "duplicate transition"));
                }
            }
            _ => return Err(bad(ln, "expected an s or t record")),
        }
        if it.next().is_some() {
            return Err(bad(ln, "trailing fields"));
        }
    }
    let labels: Vec<u32> = labels
        .into_iter()
        .enumerate()
        .map(|(q, l)| l.ok_or_else(|| bad(states_ln, format!("state {q} is never declared"))))
        .collect::<Result<_, _>>()?;
    let trans: Vec<u32> = trans
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(AutomataError::NotTotal)?;
    Ok(if is_dfao {
        Automaton::Dfao(Dfao::new(base, modulus, initial, trans, labels)?)
    } else {
        let accepting = labels.into_iter().map(|l| l == 1).collect();
        Automaton::Dfa(MultiDfa::new(base, tracks, initial, trans, accepting)?)
    })
}

pub fn save_automaton(a: &Automaton, path: &Path) -> Result<(), HarnessError> {
    fs::write(path, emit(a)).map_err(|e| HarnessError::io(path, e))
}

pub fn load_automaton(path: &Path) -> Result<Automaton, HarnessError> {
    let text = fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    parse_automaton(&text)
}
