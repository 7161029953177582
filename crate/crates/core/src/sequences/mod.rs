//! Built-in sequences, their independent oracles, and the digit-product and
//! morphism descriptions of the central trinomial coefficients mod `p`.

mod morphism;
mod oracle;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::automata::Dfao;
use crate::laurent::{CtSpec, LaurentError, LaurentPoly};
use crate::util::{is_prime, lsd_digits};

pub use morphism::{build_tri_morphism, fixed_point_prefix, primitivity_check, MorphismSpec};
pub use oracle::{
    catalan_closed_form, catalan_exact, motzkin_binomial_sum, oracle, oracle_catalan,
    oracle_trinomial, trinomial_exact, OracleTable,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("unknown sequence kind {0:?}")]
    UnknownKind(String),
    #[error("tau_{index} vanishes mod {p}")]
    ZeroResidue { p: u32, index: u32 },
    #[error("letter {0} of an image is not in the alphabet")]
    LetterOutsideAlphabet(u32),
    #[error("letter {0} has no image")]
    MissingImage(u32),
    #[error("seed {0} is not prolongable")]
    NotProlongable(u32),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeqKind {
    Catalan,
    Motzkin,
    Trinomial,
}

impl SeqKind {
    pub const ALL: [SeqKind; 3] = [SeqKind::Catalan, SeqKind::Motzkin, SeqKind::Trinomial];

    pub fn as_str(self) -> &'static str {
        match self {
            SeqKind::Catalan => "catalan",
            SeqKind::Motzkin => "motzkin",
            SeqKind::Trinomial => "trinomial",
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeqKind {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "catalan" | "cat" => Ok(SeqKind::Catalan),
            "motzkin" | "mot" => Ok(SeqKind::Motzkin),
            "trinomial" | "tri" => Ok(SeqKind::Trinomial),
            _ => Err(SequenceError::UnknownKind(s.to_string())),
        }
    }
}

/// The `(P, Q)` pair whose constant terms give the sequence mod `p`.
pub fn builtin_ctspec(kind: SeqKind, p: u32) -> Result<CtSpec, SequenceError> {
    if !is_prime(p as u64) {
        return Err(SequenceError::NotPrime(p));
    }
    let (big_p, big_q): (&[(i64, i64)], &[(i64, i64)]) = match kind {
        SeqKind::Catalan => (&[(-1, 1), (0, 2), (1, 1)], &[(0, 1), (1, -1)]),
        SeqKind::Motzkin => (&[(-1, 1), (0, 1), (1, 1)], &[(0, 1), (2, -1)]),
        SeqKind::Trinomial => (&[(-1, 1), (0, 1), (1, 1)], &[(0, 1)]),
    };
    let name = format!("{}_mod_{}", kind, p);
    Ok(CtSpec::new(
        name,
        p,
        LaurentPoly::from_terms(p, big_p),
        LaurentPoly::from_terms(p, big_q),
    )?)
}

/// Thue-Morse: the parity of the binary digit sum.
pub fn thue_morse_dfao() -> Dfao {
    Dfao::new(2, 2, 0, vec![0, 1, 1, 0], vec![0, 1]).expect("valid Thue-Morse automaton")
}

/// `T_0 .. T_{p-1}` reduced mod `p`.
pub fn tau_table(p: u32) -> Vec<u32> {
    let (t, _) = oracle_trinomial(p as usize, p);
    t.values
}

/// `T_n mod p` as the product of `tau` over the base-`p` digits of `n`.
pub fn tri_lucas_eval(n: u64, p: u32) -> u32 {
    let tau = tau_table(p);
    tri_lucas_with(&tau, n, p)
}

pub(crate) fn tri_lucas_with(tau: &[u32], n: u64, p: u32) -> u32 {
    lsd_digits(n, p)
        .into_iter()
        .fold(1u64, |acc, d| acc * tau[d as usize] as u64 % p as u64) as u32
}

/// Primes `p <= limit` dividing no central trinomial coefficient.
pub fn a113305_primes(limit: u32) -> Vec<u32> {
    (2..=limit)
        .filter(|&p| is_prime(p as u64))
        .filter(|&p| tau_table(p).iter().all(|&t| t != 0))
        .collect()
}

pub fn multiplicative_order(a: u32, p: u32) -> Option<u32> {
    if a % p == 0 {
        return None;
    }
    let mut x = a as u64 % p as u64;
    let mut k = 1;
    while x != 1 % p as u64 {
        x = x * a as u64 % p as u64;
        k += 1;
    }
    Some(k)
}

/// Whether some `tau_i`, `i < p`, generates the multiplicative group mod `p`.
pub fn primitive_root_in_prefix(p: u32) -> bool {
    tau_table(p)
        .into_iter()
        .any(|t| multiplicative_order(t, p) == Some(p - 1))
}
