//! The morphism `f(tau_i) = (tau_i tau_0)(tau_i tau_1)...(tau_i tau_{p-1})`
//! whose fixed point is `T_n mod p`.

use std::collections::{BTreeMap, BTreeSet};

use super::{tau_table, SequenceError};
use crate::util::is_prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismSpec {
    alphabet: BTreeSet<u32>,
    images: BTreeMap<u32, Vec<u32>>,
    seed: u32,
}

impl MorphismSpec {
    pub fn new(
        alphabet: BTreeSet<u32>,
        images: BTreeMap<u32, Vec<u32>>,
        seed: u32,
    ) -> Result<Self, SequenceError> {
        for a in alphabet.iter().chain(std::iter::once(&seed)) {
            if !images.contains_key(a) {
                return Err(SequenceError::MissingImage(*a));
            }
        }
        for image in images.values() {
            if let Some(&bad) = image.iter().find(|l| !alphabet.contains(l)) {
                return Err(SequenceError::LetterOutsideAlphabet(bad));
            }
        }
        Ok(MorphismSpec {
            alphabet,
            images,
            seed,
        })
    }

    pub fn alphabet(&self) -> &BTreeSet<u32> {
        &self.alphabet
    }

    pub fn image(&self, letter: u32) -> &[u32] {
        &self.images[&letter]
    }

    pub fn images(&self) -> &BTreeMap<u32, Vec<u32>> {
        &self.images
    }

    pub fn seed(&self) -> u32 {
        self.seed
    }
}

pub fn build_tri_morphism(p: u32) -> Result<MorphismSpec, SequenceError> {
    if !is_prime(p as u64) {
        return Err(SequenceError::NotPrime(p));
    }
    let tau = tau_table(p);
    if let Some(i) = tau.iter().position(|&t| t == 0) {
        return Err(SequenceError::ZeroResidue { p, index: i as u32 });
    }
    let mut alphabet: BTreeSet<u32> = tau.iter().copied().collect();
    let mut frontier: Vec<u32> = alphabet.iter().copied().collect();
    while let Some(a) = frontier.pop() {
        for &t in &tau {
            let b = (a as u64 * t as u64 % p as u64) as u32;
            if alphabet.insert(b) {
                frontier.push(b);
            }
        }
    }
    let images = alphabet
        .iter()
        .map(|&a| {
            let image = tau
                .iter()
                .map(|&t| (a as u64 * t as u64 % p as u64) as u32)
                .collect();
            (a, image)
        })
        .collect();
    MorphismSpec::new(alphabet, images, 1)
}

/// Least `t` with every letter occurring in `f^t(a)` for every letter `a`,
/// searched up to Wielandt's bound `(q-1)^2 + 1`.
pub fn primitivity_check(m: &MorphismSpec) -> (bool, Option<usize>) {
    let letters: Vec<u32> = m.alphabet.iter().copied().collect();
    let q = letters.len();
    if q == 0 {
        return (false, None);
    }
    let index: BTreeMap<u32, usize> = letters.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let step: Vec<Vec<bool>> = letters
        .iter()
        .map(|a| {
            let mut row = vec![false; q];
            for l in m.image(*a) {
                row[index[l]] = true;
            }
            row
        })
        .collect();
    let bound = (q - 1) * (q - 1) + 1;
    let mut reach = step.clone();
    for t in 1..=bound {
        if reach.iter().all(|row| row.iter().all(|&b| b)) {
            return (true, Some(t));
        }
        reach = reach
            .iter()
            .map(|row| {
                let mut out = vec![false; q];
                for (i, _) in row.iter().enumerate().filter(|(_, &b)| b) {
                    for (o, &s) in out.iter_mut().zip(&step[i]) {
                        *o |= s;
                    }
                }
                out
            })
            .collect();
    }
    (false, None)
}

/// The first `len` letters of `f^omega(seed)`.
pub fn fixed_point_prefix(m: &MorphismSpec, len: usize) -> Result<Vec<u32>, SequenceError> {
    let first = m.image(m.seed);
    if first.first() != Some(&m.seed) {
        return Err(SequenceError::NotProlongable(m.seed));
    }
    if len == 0 {
        return Ok(Vec::new());
    }
    let mut out = first.to_vec();
    let mut next = 1;
    while out.len() < len {
        if next >= out.len() {
            // Only erasing or unit images remain, so the fixed point is finite.
            return Err(SequenceError::NotProlongable(m.seed));
        }
        let letter = out[next];
        out.extend_from_slice(m.image(letter));
        next += 1;
    }
    out.truncate(len);
    Ok(out)
}
