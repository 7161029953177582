use super::partition::{bfs_order, moore, restrict};
use super::{AutomataError, MultiDfa};
use crate::util::lsd_digits;

/// Deterministic finite automaton with output, reading base-`k` digits
/// least significant first. Each state carries a residue mod `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfao {
    base: u32,
    modulus: u32,
    initial: u32,
    trans: Vec<u32>,
    out: Vec<u32>,
}

impl Dfao {
    /// Validates totality, output range and trailing-zero stability
    /// (`out(delta(q, 0)) = out(q)` on reachable states).
    pub fn new(
        base: u32,
        modulus: u32,
        initial: u32,
        trans: Vec<u32>,
        out: Vec<u32>,
    ) -> Result<Self, AutomataError> {
        if base < 2 {
            return Err(AutomataError::BadBase(base));
        }
        if modulus < 2 {
            return Err(AutomataError::BadModulus(modulus));
        }
        let n = out.len();
        if n == 0 || initial as usize >= n {
            return Err(AutomataError::BadInitial(initial));
        }
        if trans.len() != n * base as usize {
            return Err(AutomataError::NotTotal);
        }
        if let Some(&t) = trans.iter().find(|&&t| t as usize >= n) {
            return Err(AutomataError::StateOutOfRange(t));
        }
        if let Some(&v) = out.iter().find(|&&v| v >= modulus) {
            return Err(AutomataError::OutputOutOfRange(v, modulus));
        }
        let a = Dfao {
            base,
            modulus,
            initial,
            trans,
            out,
        };
        let (order, _) = bfs_order(n, base as usize, &a.trans, initial);
        for &q in &order {
            if a.out[a.next(q, 0) as usize] != a.out[q as usize] {
                return Err(AutomataError::NotZeroStable(q));
            }
        }
        Ok(a)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.out.len()
    }

    pub fn next(&self, q: u32, digit: u32) -> u32 {
        self.trans[q as usize * self.base as usize + digit as usize]
    }

    pub fn output(&self, q: u32) -> u32 {
        self.out[q as usize]
    }

    pub fn transitions(&self) -> &[u32] {
        &self.trans
    }

    pub fn outputs(&self) -> &[u32] {
        &self.out
    }

    /// Runs the automaton on lsd-first digits.
    pub fn run(&self, digits: &[u32]) -> u32 {
        digits.iter().fold(self.initial, |q, &d| self.next(q, d))
    }

    /// The sequence value at `n`.
    pub fn value(&self, n: u64) -> u32 {
        self.out[self.run(&lsd_digits(n, self.base)) as usize]
    }

    /// Moore minimization; states renumbered breadth-first from the initial
    /// state, digits ascending.
    pub fn minimize(&self) -> Dfao {
        let k = self.base as usize;
        let (order, rank) = bfs_order(self.out.len(), k, &self.trans, self.initial);
        let trans = restrict(k, &self.trans, &order, &rank);
        let out: Vec<u32> = order.iter().map(|&q| self.out[q as usize]).collect();
        let classes = moore(order.len(), k, &trans, &out);
        let blocks = classes.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut q_trans = vec![0u32; blocks * k];
        let mut q_out = vec![0u32; blocks];
        for q in 0..order.len() {
            let b = classes[q] as usize;
            q_out[b] = out[q];
            for d in 0..k {
                q_trans[b * k + d] = classes[trans[q * k + d] as usize];
            }
        }
        let (order, rank) = bfs_order(blocks, k, &q_trans, classes[0]);
        Dfao {
            base: self.base,
            modulus: self.modulus,
            initial: 0,
            trans: restrict(k, &q_trans, &order, &rank),
            out: order.iter().map(|&b| q_out[b as usize]).collect(),
        }
    }

    /// Single-track automaton accepting the representations of
    /// `{ n : a(n) = value }`.
    pub fn slice(&self, value: u32, track: &str) -> MultiDfa {
        self.slice_where(track, |v| v == value)
    }

    /// Single-track automaton accepting `{ n : keep(a(n)) }`.
    pub fn slice_where(&self, track: &str, keep: impl Fn(u32) -> bool) -> MultiDfa {
        let accepting = self.out.iter().map(|&v| keep(v)).collect();
        MultiDfa::from_parts_unchecked(
            self.base,
            vec![track.to_string()],
            self.initial,
            self.trans.clone(),
            accepting,
        )
        .minimize()
    }
}
