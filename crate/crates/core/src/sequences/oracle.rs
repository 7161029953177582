//! Brute-force tables computed directly in `Z/m`.
//!
//! Reduction mod `m` is a ring homomorphism, so the trinomial triangle and
//! the Catalan convolution can be run on residues. The exact big-integer
//! variants exist to cross-check those against the closed forms.

use num_bigint::BigUint;
use num_traits::{One, WrappingAdd, WrappingSub, Zero};

use super::SeqKind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTable {
    pub kind: SeqKind,
    pub modulus: u32,
    pub values: Vec<u32>,
}

impl OracleTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<u32> {
        self.values.get(n).copied()
    }
}

/// Table of `kind` for `n < count`, reduced mod `m`.
pub fn oracle(kind: SeqKind, count: usize, m: u32) -> OracleTable {
    match kind {
        SeqKind::Catalan => oracle_catalan(count, m),
        SeqKind::Motzkin => oracle_trinomial(count, m).1,
        SeqKind::Trinomial => oracle_trinomial(count, m).0,
    }
}

/// Central trinomial coefficients and Motzkin numbers for `n < count`, mod `m`.
///
/// Row `r` of the triangle holds `[x^j](1+x+x^2)^r`. Only the half `j <= r`
/// is stored; the entry past the middle is supplied by symmetry. Then
/// `T_r = c(r,0)` and `M_r = c(r,0) - c(r,2)` with `c(r,2) = [x^(r-2)]`.
pub fn oracle_trinomial(count: usize, m: u32) -> (OracleTable, OracleTable) {
    assert!(m >= 1, "modulus must be positive");
    let (t, mot) = if m <= 128 {
        triangle::<u8>(count, m as u64)
    } else if m <= 1 << 31 {
        triangle::<u32>(count, m as u64)
    } else {
        triangle::<u64>(count, m as u64)
    };
    (
        OracleTable {
            kind: SeqKind::Trinomial,
            modulus: m,
            values: t,
        },
        OracleTable {
            kind: SeqKind::Motzkin,
            modulus: m,
            values: mot,
        },
    )
}

fn triangle<T>(count: usize, m: u64) -> (Vec<u32>, Vec<u32>)
where
    T: Copy + Default + WrappingAdd + WrappingSub + Ord + TryFrom<u64>,
    u64: From<T>,
{
    let cell = |v: u64| T::try_from(v).ok().expect("residue fits the cell type");
    let mt = cell(m);
    let zero = T::default();
    let mut cur = vec![zero; count + 4];
    let mut nxt = vec![zero; count + 4];
    cur[2] = cell(1 % m);
    let mut t = Vec::with_capacity(count);
    let mut mot = Vec::with_capacity(count);
    for r in 0..count {
        let centre = u64::from(cur[r + 2]);
        let side = u64::from(cur[r]);
        t.push(centre as u32);
        mot.push(((centre + m - side) % m) as u32);
        if r + 1 == count {
            break;
        }
        cur[r + 3] = if r >= 1 { cur[r + 1] } else { zero };
        let len = r + 2;
        let a = &cur[2..2 + len];
        let b = &cur[1..1 + len];
        let c = &cur[..len];
        let out = &mut nxt[2..2 + len];
        for j in 0..len {
            // Branch-free `(x + y + z) mod m` for residues; min picks the
            // reduced value because a wrapped subtraction is large.
            let s = a[j].wrapping_add(&b[j]);
            let s = s.min(s.wrapping_sub(&mt));
            let s = s.wrapping_add(&c[j]);
            out[j] = s.min(s.wrapping_sub(&mt));
        }
        std::mem::swap(&mut cur, &mut nxt);
    }
    (t, mot)
}

/// Catalan numbers for `n < count`, mod `m`, by `C_{k+1} = sum C_i C_{k-i}`.
pub fn oracle_catalan(count: usize, m: u32) -> OracleTable {
    assert!(m >= 1, "modulus must be positive");
    let mut c = vec![0u32; count];
    // rev[count-1-j] = C_j, so C_{k-i} for ascending i is a forward slice.
    let mut rev = vec![0u32; count];
    if count > 0 {
        c[0] = 1 % m;
        rev[count - 1] = c[0];
    }
    let m64 = m as u64;
    for k in 0..count.saturating_sub(1) {
        let h = (k + 1) / 2;
        let lo = &c[..h];
        let hi = &rev[count - 1 - k..count - 1 - k + h];
        let mut s = 2 * dot_mod(lo, hi, m) % m64;
        if k % 2 == 0 {
            let mid = c[k / 2] as u64;
            s = (s + mid * mid) % m64;
        }
        c[k + 1] = s as u32;
        rev[count - 2 - k] = s as u32;
    }
    OracleTable {
        kind: SeqKind::Catalan,
        modulus: m,
        values: c,
    }
}

fn dot_mod(a: &[u32], b: &[u32], m: u32) -> u64 {
    let m64 = m as u64;
    if m <= 1 << 16 {
        let sq = ((m - 1) as u64).pow(2).max(1);
        let chunk = ((u32::MAX as u64) / sq).max(1) as usize;
        let mut total = 0u64;
        for (ca, cb) in a.chunks(chunk).zip(b.chunks(chunk)) {
            let s = ca
                .iter()
                .zip(cb)
                .fold(0u32, |acc, (&x, &y)| acc.wrapping_add(x * y));
            total = (total + s as u64) % m64;
        }
        total
    } else {
        a.iter()
            .zip(b)
            .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64 % m64) % m64)
    }
}

/// Exact `T_n` and `M_n` for `n < count` from the full trinomial triangle.
pub fn trinomial_exact(count: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut row = vec![BigUint::one()];
    let mut t = Vec::with_capacity(count);
    let mut mot = Vec::with_capacity(count);
    for r in 0..count {
        t.push(row[r].clone());
        let c2 = if r >= 2 { row[r + 2].clone() } else { BigUint::zero() };
        mot.push(&row[r] - c2);
        let mut next = vec![BigUint::zero(); row.len() + 2];
        for (j, v) in row.iter().enumerate() {
            next[j] += v;
            next[j + 1] += v;
            next[j + 2] += v;
        }
        row = next;
    }
    (t, mot)
}

/// Exact Catalan numbers by convolution.
pub fn catalan_exact(count: usize) -> Vec<BigUint> {
    let mut c: Vec<BigUint> = Vec::with_capacity(count);
    if count > 0 {
        c.push(BigUint::one());
    }
    while c.len() < count {
        let k = c.len() - 1;
        let s = (0..=k).fold(BigUint::zero(), |acc, i| acc + &c[i] * &c[k - i]);
        c.push(s);
    }
    c
}

/// `C_n = binom(2n, n) / (n + 1)` for `n < count`.
pub fn catalan_closed_form(count: usize) -> Vec<BigUint> {
    (0..count as u64)
        .map(|n| {
            let mut b = BigUint::one();
            for i in 1..=n {
                b = b * (n + i) / i;
            }
            b / (n + 1)
        })
        .collect()
}

/// `M_n = sum_k binom(n, 2k) C_k` for `n < count`.
pub fn motzkin_binomial_sum(count: usize) -> Vec<BigUint> {
    let cat = catalan_closed_form(count / 2 + 1);
    (0..count as u64)
        .map(|n| {
            let mut total = BigUint::zero();
            let mut b = BigUint::one();
            for j in 0..=n {
                if j % 2 == 0 {
                    total += &b * &cat[(j / 2) as usize];
                }
                b = b * (n - j) / (j + 1);
            }
            total
        })
        .collect()
}
