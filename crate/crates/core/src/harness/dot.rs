//! Graphviz export.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{Automaton, HarnessError};

fn tuple_label(symbol: usize, base: u32, width: usize) -> String {
    let mut digits = vec![0usize; width];
    let mut s = symbol;
    for d in digits.iter_mut().rev() {
        *d = s % base as usize;
        s /= base as usize;
    }
    match width {
        0 => "()".to_string(),
        1 => digits[0].to_string(),
        _ => format!(
            "({})",
            digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
        ),
    }
}

/// Renders `a` as a directed graph. Parallel edges are merged into one edge
/// whose label lists every digit tuple.
pub fn to_dot(a: &Automaton, name: &str) -> String {
    let (base, width, tracks, initial, n, trans): (u32, usize, String, u32, usize, &[u32]) = match a {
        Automaton::Dfao(d) => (d.base(), 1, "n".to_string(), d.initial(), d.state_count(), d.transitions()),
        Automaton::Dfa(d) => (
            d.base(),
            d.tracks().len(),
            d.tracks().join(","),
            d.initial(),
            d.state_count(),
            d.transitions(),
        ),
    };
    let sigma = (base as usize).pow(width as u32);
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", name.replace('"', "'")).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(
        out,
        "  label=\"base {base}, lsd-first, tracks ({tracks})\";"
    )
    .unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    writeln!(out, "  start [shape=point];").unwrap();
    writeln!(out, "  start -> q{initial};").unwrap();
    for q in 0..n {
        match a {
            Automaton::Dfao(d) => {
                writeln!(out, "  q{q} [label=\"{q}/{}\"];", d.output(q as u32)).unwrap()
            }
            Automaton::Dfa(d) => {
                let shape = if d.is_accepting(q as u32) { "doublecircle" } else { "circle" };
                writeln!(out, "  q{q} [label=\"{q}\", shape={shape}];").unwrap()
            }
        }
    }
    for q in 0..n {
        let mut edges: BTreeMap<u32, Vec<String>> = BTreeMap::new();
        for s in 0..sigma {
            edges
                .entry(trans[q * sigma + s])
                .or_default()
                .push(tuple_label(s, base, width));
        }
        for (to, labels) in edges {
            writeln!(out, "  q{q} -> q{to} [label=\"{}\"];", labels.join(", ")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn export_dot(a: &Automaton, name: &str, path: &Path) -> Result<(), HarnessError> {
    fs::write(path, to_dot(a, name)).map_err(|e| HarnessError::io(path, e))
}
