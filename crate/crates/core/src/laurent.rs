//! Laurent polynomials over `Z/m` and constant-term automaton synthesis.
//!
//! A sequence of the form `a(n) = ct[P(x)^n Q(x)] mod p` is `p`-automatic:
//! writing `n = d + p*n'` and using `P(x)^p = P(x^p)` over `F_p`,
//!
//! ```text
//! ct[P^n Q] = ct[P(x^p)^n' * P^d Q] = ct[P^n' * L0(P^d Q)]
//! ```
//!
//! where `L0` keeps the exponents divisible by `p` and divides them by `p`.
//! The states of the automaton are the polynomials reachable from `Q` under
//! `R -> L0(P^d R)`, and each state outputs its constant term.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::automata::Dfao;
use crate::util::is_prime;

/// Default bound on the number of synthesis states.
pub const DEFAULT_STATE_LIMIT: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("polynomial P has empty support")]
    EmptyP,
    #[error("state explosion: more than {0} states")]
    StateExplosion(usize),
    #[error("cannot parse polynomial {0:?}: {1}")]
    Parse(String, String),
}

/// Sparse Laurent polynomial with coefficients in `Z/modulus`.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    modulus: u32,
    coeffs: BTreeMap<i64, u32>,
}

impl LaurentPoly {
    pub fn zero(modulus: u32) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        LaurentPoly {
            modulus,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(modulus: u32) -> Self {
        Self::monomial(modulus, 0, 1)
    }

    pub fn monomial(modulus: u32, exponent: i64, coeff: i64) -> Self {
        Self::from_terms(modulus, &[(exponent, coeff)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Coefficients
    /// may be negative; repeated exponents are summed.
    pub fn from_terms(modulus: u32, terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero(modulus);
        for &(e, c) in terms {
            let c = c.rem_euclid(modulus as i64) as u32;
            p.add_term(e, c);
        }
        p
    }

    /// Parses sums of terms such as `x^-1 + 2 + x` or `1 - x^2`.
    pub fn parse(src: &str, modulus: u32) -> Result<Self, LaurentError> {
        if modulus < 2 {
            return Err(LaurentError::BadModulus(modulus));
        }
        let err = |msg: &str| LaurentError::Parse(src.to_string(), msg.to_string());
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let mut terms = Vec::new();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(err("expected '+' or '-'"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: Option<i64> = if i > start {
                Some(s[start..i].parse().map_err(|_| err("bad coefficient"))?)
            } else {
                None
            };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut exponent = 0i64;
            if i < bytes.len() && bytes[i] == b'x' {
                i += 1;
                exponent = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let estart = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exponent = s[estart..i].parse().map_err(|_| err("bad exponent"))?;
                }
            } else if coeff.is_none() {
                return Err(err("expected coefficient or 'x'"));
            }
            terms.push((exponent, sign * coeff.unwrap_or(1)));
        }
        Ok(Self::from_terms(modulus, &terms))
    }

    fn add_term(&mut self, exponent: i64, coeff: u32) {
        if coeff == 0 {
            return;
        }
        let m = self.modulus;
        let entry = self.coeffs.entry(exponent).or_insert(0);
        *entry = ((*entry as u64 + coeff as u64) % m as u64) as u32;
        if *entry == 0 {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> u32 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest and largest exponent with a nonzero coefficient.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = *self.coeffs.keys().next()?;
        let hi = *self.coeffs.keys().next_back()?;
        Some((lo, hi))
    }

    fn check(&self, other: &Self) -> Result<(), LaurentError> {
        if self.modulus != other.modulus {
            return Err(LaurentError::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let m = self.modulus as u64;
        let mut acc: BTreeMap<i64, u64> = BTreeMap::new();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let slot = acc.entry(ea + eb).or_insert(0);
                *slot = (*slot + ca as u64 * cb as u64) % m;
            }
        }
        LaurentPoly {
            modulus: self.modulus,
            coeffs: acc
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|(e, c)| (e, c as u32))
                .collect(),
        }
    }

    /// `self^e` by square-and-multiply; `e = 0` gives the constant 1.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::one(self.modulus);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Coefficient of `x^0`.
    pub fn constant_term(&self) -> u32 {
        self.coeff(0)
    }

    /// The section operator: keeps exponents divisible by `p` and divides
    /// them by `p`.
    pub fn cartier(&self, p: u32) -> Self {
        assert!(p >= 1);
        let p = p as i64;
        LaurentPoly {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e.rem_euclid(p) == 0)
                .map(|(&e, &c)| (e / p, c))
                .collect(),
        }
    }

    /// Substitutes `x -> x^p`.
    pub fn inflate(&self, p: u32) -> Self {
        LaurentPoly {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e * p as i64, c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (e, 1) => write!(f, "x^{e}")?,
                (1, c) => write!(f, "{c}x")?,
                (e, c) => write!(f, "{c}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// A constant-term sequence `a(n) = ct[P^n Q] mod p`, with `p` serving as
/// both the base and the modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtSpec {
    name: String,
    p: u32,
    big_p: LaurentPoly,
    big_q: LaurentPoly,
}

impl CtSpec {
    pub fn new(
        name: impl Into<String>,
        p: u32,
        big_p: LaurentPoly,
        big_q: LaurentPoly,
    ) -> Result<Self, LaurentError> {
        if !is_prime(p as u64) {
            return Err(LaurentError::NotPrime(p));
        }
        if big_p.modulus() != p {
            return Err(LaurentError::ModulusMismatch(big_p.modulus(), p));
        }
        if big_q.modulus() != p {
            return Err(LaurentError::ModulusMismatch(big_q.modulus(), p));
        }
        if big_p.is_zero() {
            return Err(LaurentError::EmptyP);
        }
        Ok(CtSpec {
            name: name.into(),
            p,
            big_p,
            big_q,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn p_poly(&self) -> &LaurentPoly {
        &self.big_p
    }

    pub fn q_poly(&self) -> &LaurentPoly {
        &self.big_q
    }

    /// Direct evaluation of `ct[P^n Q] mod p`; exponential in the number of
    /// digits only through the size of `P^n`, so keep `n` small.
    pub fn value_direct(&self, n: u64) -> u32 {
        self.big_p.pow(n).mul_unchecked(&self.big_q).constant_term()
    }

    /// Window `[-(a + ceil(a/(p-1))), b + ceil(b/(p-1))]` that contains the
    /// support of every synthesis state, where `[-a, b]` bounds the joint
    /// support of `P` and `Q` (and contains 0).
    pub fn state_window(&self) -> (i64, i64) {
        let (mut lo, mut hi) = (0i64, 0i64);
        for poly in [&self.big_p, &self.big_q] {
            if let Some((l, h)) = poly.support() {
                lo = lo.min(l);
                hi = hi.max(h);
            }
        }
        let a = -lo;
        let b = hi;
        let step = self.p as i64 - 1;
        let ceil = |v: i64| (v + step - 1) / step;
        (-(a + ceil(a)), b + ceil(b))
    }
}

/// Reachable synthesis states in breadth-first discovery order (digits
/// ascending), together with the transition table indexed `state * p + d`.
pub fn reachable_states(
    spec: &CtSpec,
    state_limit: usize,
) -> Result<(Vec<LaurentPoly>, Vec<u32>), LaurentError> {
    let p = spec.p;
    let powers: Vec<LaurentPoly> = (0..p as u64).map(|d| spec.big_p.pow(d)).collect();
    let mut index: HashMap<LaurentPoly, u32> = HashMap::new();
    let mut states: Vec<LaurentPoly> = Vec::new();
    let mut trans: Vec<u32> = Vec::new();
    let mut queue = VecDeque::new();

    index.insert(spec.big_q.clone(), 0);
    states.push(spec.big_q.clone());
    queue.push_back(0u32);
    if state_limit == 0 {
        return Err(LaurentError::StateExplosion(state_limit));
    }

    while let Some(q) = queue.pop_front() {
        let current = states[q as usize].clone();
        for power in &powers {
            let next = power.mul_unchecked(&current).cartier(p);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if states.len() >= state_limit {
                        return Err(LaurentError::StateExplosion(state_limit));
                    }
                    let id = states.len() as u32;
                    index.insert(next.clone(), id);
                    states.push(next);
                    queue.push_back(id);
                    id
                }
            };
            trans.push(id);
        }
    }
    Ok((states, trans))
}

/// Synthesizes the minimal lsd-first DFAO computing `ct[P^n Q] mod p`.
pub fn synth_dfao(spec: &CtSpec, state_limit: usize) -> Result<Dfao, LaurentError> {
    let (states, trans) = reachable_states(spec, state_limit)?;
    let out: Vec<u32> = states.iter().map(|s| s.constant_term()).collect();
    let raw = Dfao::new(spec.p, spec.p, 0, trans, out)
        .expect("synthesized automaton is total and zero-stable");
    Ok(raw.minimize())
}
