use std::collections::HashMap;

use super::{AutomataError, MultiDfa};

/// Relation of a linear atom `sum c_i x_i + c rel 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinRel {
    Eq,
    Le,
}

/// Automaton for `sum coeffs[i] * x_i + constant (= | <=) 0` over the named
/// tracks, built from carry states read lsd-first.
///
/// For equality the carry starts at `constant`; each digit tuple `d` must
/// make `s + sum c_i d_i` divisible by the base and the carry becomes the
/// quotient. For `<=` the atom is rewritten as `-constant - sum c_i x_i >= 0`,
/// the carry starts at `-constant` and becomes `floor((s - sum c_i d_i) / k)`;
/// the word is accepted iff the final carry is nonnegative. Carries never
/// exceed `max(|constant|, sum |c_i|)` in magnitude.
pub fn linear(
    base: u32,
    coeffs: &[(String, i64)],
    constant: i64,
    rel: LinRel,
) -> Result<MultiDfa, AutomataError> {
    if base < 2 {
        return Err(AutomataError::BadBase(base));
    }
    if coeffs.is_empty() {
        return Err(AutomataError::NoTracks);
    }
    let tracks: Vec<String> = coeffs.iter().map(|(n, _)| n.clone()).collect();
    let width = tracks.len();
    let k = base as i64;
    let sigma = (base as usize).pow(width as u32);
    // Weighted digit sum per symbol (track 0 most significant).
    let weights: Vec<i64> = (0..sigma)
        .map(|mut s| {
            let mut total = 0i64;
            for (_, c) in coeffs.iter().rev() {
                total += c * (s % base as usize) as i64;
                s /= base as usize;
            }
            total
        })
        .collect();

    let start = match rel {
        LinRel::Eq => constant,
        LinRel::Le => -constant,
    };
    let mut index: HashMap<i64, u32> = HashMap::new();
    let mut carries = vec![start];
    index.insert(start, 0);
    // A dead state exists only for equality; allocate it lazily.
    let mut dead: Option<u32> = None;
    let mut trans: Vec<u32> = Vec::new();
    let mut head = 0;
    while head < carries.len() {
        let s = carries[head];
        head += 1;
        if Some(head as u32 - 1) == dead {
            trans.extend(std::iter::repeat(head as u32 - 1).take(sigma));
            continue;
        }
        for &w in &weights {
            let next = match rel {
                LinRel::Eq => {
                    let t = s + w;
                    if t.rem_euclid(k) != 0 {
                        None
                    } else {
                        Some(t / k)
                    }
                }
                LinRel::Le => Some((s - w).div_euclid(k)),
            };
            let id = match next {
                Some(c) => *index.entry(c).or_insert_with(|| {
                    carries.push(c);
                    carries.len() as u32 - 1
                }),
                None => *dead.get_or_insert_with(|| {
                    // Sentinel carry value that cannot collide: mark by position.
                    carries.push(i64::MIN);
                    carries.len() as u32 - 1
                }),
            };
            trans.push(id);
        }
    }
    let accepting = carries
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if Some(i as u32) == dead {
                return false;
            }
            match rel {
                LinRel::Eq => c == 0,
                LinRel::Le => c >= 0,
            }
        })
        .collect();
    Ok(MultiDfa::from_parts_unchecked(base, tracks, 0, trans, accepting).minimize())
}

/// Largest carry magnitude reached by the construction; exposed for tests.
pub fn linear_carry_bound(coeffs: &[(String, i64)], constant: i64) -> i64 {
    constant
        .abs()
        .max(coeffs.iter().map(|(_, c)| c.abs()).sum::<i64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn named(coeffs: &[(&str, i64)]) -> Vec<(String, i64)> {
        coeffs.iter().map(|(n, c)| (n.to_string(), *c)).collect()
    }

    #[test]
    fn examples() {
        let sum = linear(2, &named(&[("x", 1), ("y", 1), ("z", -1)]), 0, LinRel::Eq).unwrap();
        assert!(sum.accepts(&[1, 2, 3]));
        assert!(!sum.accepts(&[1, 2, 4]));
        let shifted = linear(2, &named(&[("n", 1), ("i", -4)]), 2, LinRel::Eq).unwrap();
        assert!(shifted.accepts(&[2, 1]));
        let le = linear(5, &named(&[("x", 1), ("y", -1)]), 0, LinRel::Le).unwrap();
        assert!(le.accepts(&[3, 5]));
        assert!(!le.accepts(&[5, 3]));
        assert!(matches!(linear(2, &[], 0, LinRel::Eq), Err(AutomataError::NoTracks)));
    }

    fn eval(coeffs: &[i64], c: i64, values: &[u64], rel: LinRel) -> bool {
        let total: i64 = c + coeffs.iter().zip(values).map(|(a, &v)| a * v as i64).sum::<i64>();
        match rel {
            LinRel::Eq => total == 0,
            LinRel::Le => total <= 0,
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_integer_evaluation(
            base in 2u32..6,
            coeffs in proptest::collection::vec(-7i64..=7, 1..=3),
            c in -30i64..=30,
            le in any::<bool>(),
            samples in proptest::collection::vec(proptest::collection::vec(0u64..500, 3), 40),
        ) {
            let rel = if le { LinRel::Le } else { LinRel::Eq };
            let names: Vec<(String, i64)> = coeffs
                .iter()
                .enumerate()
                .map(|(i, &a)| (format!("v{i}"), a))
                .collect();
            let a = linear(base, &names, c, rel).unwrap();
            prop_assert!(a.is_pad_invariant());
            for s in &samples {
                let values = &s[..coeffs.len()];
                prop_assert_eq!(a.accepts(values), eval(&coeffs, c, values, rel));
            }
        }
    }

    #[test]
    fn exhaustive_small_grid() {
        let coeffs = [3i64, -2];
        let names = named(&[("a", 3), ("b", -2)]);
        for rel in [LinRel::Eq, LinRel::Le] {
            for c in [-7i64, 0, 4] {
                let a = linear(3, &names, c, rel).unwrap();
                for x in 0..60 {
                    for y in 0..60 {
                        assert_eq!(a.accepts(&[x, y]), eval(&coeffs, c, &[x, y], rel));
                    }
                }
            }
        }
    }
}
