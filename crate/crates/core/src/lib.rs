//! Automata for combinatorial sequences modulo a prime, and a first-order
//! decision procedure over automatic sequences.
//!
//! * [`laurent`]: Laurent polynomials mod `p` and constant-term synthesis.
//! * [`automata`]: DFAOs, multi-track DFAs and their algebra.
//! * [`logic`]: the query language and its compiler to automata.
//! * [`sequences`]: built-in sequences, independent oracles, morphisms.
//! * [`harness`]: persistence, registry and the named theorem checks.

pub mod automata;
pub mod harness;
pub mod laurent;
pub mod logic;
pub mod sequences;
pub mod util;
