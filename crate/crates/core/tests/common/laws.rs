//! Random automata for the algebra-law properties.

use std::collections::BTreeMap;

use ctseq::automata::{linear, regex_compile, BoolOp, LinRel, MultiDfa};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const TRACKS: [&str; 3] = ["x", "y", "z"];

const PATTERNS: [&str; 6] = ["[01]*", "0*1*", "(01)*", "1(0|1)*", "(00)*1?", "0+"];

#[derive(Clone, Debug)]
pub enum Recipe {
    Linear(Vec<(usize, i64)>, i64, bool),
    Regex(usize, usize),
    Not(Box<Recipe>),
    Op(BoolOp, Box<Recipe>, Box<Recipe>),
    Project(usize, Box<Recipe>),
}

fn leaf() -> impl Strategy<Value = Recipe> {
    prop_oneof![
        (
            prop::collection::vec((0usize..3, -3i64..=3), 1..3),
            -6i64..=6,
            any::<bool>()
        )
            .prop_map(|(coeffs, c, eq)| Recipe::Linear(coeffs, c, eq)),
        (0usize..3, 0..PATTERNS.len()).prop_map(|(t, p)| Recipe::Regex(t, p)),
    ]
}

pub fn recipe() -> impl Strategy<Value = Recipe> {
    leaf().prop_recursive(3, 12, 2, |inner| {
        let op = prop_oneof![
            Just(BoolOp::And),
            Just(BoolOp::Or),
            Just(BoolOp::Xor),
            Just(BoolOp::Implies),
            Just(BoolOp::Iff),
        ];
        prop_oneof![
            inner.clone().prop_map(|r| Recipe::Not(Box::new(r))),
            (op, inner.clone(), inner.clone())
                .prop_map(|(op, a, b)| Recipe::Op(op, Box::new(a), Box::new(b))),
            (0usize..3, inner).prop_map(|(t, r)| Recipe::Project(t, Box::new(r))),
        ]
    })
}

/// Builds the automaton; linear leaves whose coefficients cancel fall back
/// to a regex leaf on the first named track.
pub fn build(base: u32, r: &Recipe) -> MultiDfa {
    match r {
        Recipe::Linear(coeffs, c, eq) => {
            let mut sum: BTreeMap<usize, i64> = BTreeMap::new();
            for (t, a) in coeffs {
                *sum.entry(*t).or_default() += a;
            }
            sum.retain(|_, a| *a != 0);
            let Some(&first) = sum.keys().next() else {
                return build(base, &Recipe::Regex(coeffs[0].0, 0));
            };
            let terms: Vec<(String, i64)> = sum.iter().map(|(t, a)| (TRACKS[*t].to_string(), *a)).collect();
            let rel = if *eq { LinRel::Eq } else { LinRel::Le };
            linear(base, &terms, *c, rel).unwrap_or_else(|e| panic!("linear on {first}: {e}"))
        }
        Recipe::Regex(t, p) => regex_compile(PATTERNS[*p], base, TRACKS[*t]).expect("pattern compiles"),
        Recipe::Not(a) => build(base, a).complement(),
        Recipe::Op(op, a, b) => build(base, a).product(&build(base, b), *op).expect("same base"),
        Recipe::Project(t, a) => {
            let a = build(base, a);
            if a.tracks().iter().any(|n| n == TRACKS[*t]) {
                a.project(TRACKS[*t]).expect("track exists")
            } else {
                a
            }
        }
    }
}

pub fn case() -> impl Strategy<Value = (u32, Recipe, Recipe, Vec<[u64; 3]>)> {
    (
        2u32..=3,
        recipe(),
        recipe(),
        prop::collection::vec([0u64..64, 0u64..64, 0u64..64], 12),
    )
}

fn value_of(sample: &[u64; 3]) -> impl Fn(&str) -> u64 + '_ {
    move |t| sample[TRACKS.iter().position(|n| *n == t).expect("known track")]
}

/// Number of Moore classes, computed naively.
fn moore_classes(a: &MultiDfa) -> usize {
    let n = a.state_count();
    let sigma = a.alphabet_size();
    let mut class: Vec<usize> = (0..n).map(|q| a.is_accepting(q as u32) as usize).collect();
    let mut count = class.iter().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let next: Vec<usize> = (0..n)
            .map(|q| {
                let mut sig = vec![class[q]];
                sig.extend((0..sigma).map(|s| class[a.next(q as u32, s) as usize]));
                let len = ids.len();
                *ids.entry(sig).or_insert(len)
            })
            .collect();
        if ids.len() == count {
            return count;
        }
        count = ids.len();
        class = next;
    }
}

fn reachable(a: &MultiDfa) -> usize {
    let mut seen = vec![false; a.state_count()];
    let mut stack = vec![a.initial()];
    seen[a.initial() as usize] = true;
    while let Some(q) = stack.pop() {
        for s in 0..a.alphabet_size() {
            let t = a.next(q, s);
            if !seen[t as usize] {
                seen[t as usize] = true;
                stack.push(t);
            }
        }
    }
    seen.iter().filter(|&&b| b).count()
}

/// Two interleaved copies of `a`: same language, twice the states.
fn doubled(a: &MultiDfa) -> MultiDfa {
    let n = a.state_count() as u32;
    let sigma = a.alphabet_size();
    let mut trans = Vec::with_capacity(2 * n as usize * sigma);
    for copy in 0..2 {
        for q in 0..n {
            for s in 0..sigma {
                let t = a.next(q, s);
                trans.push(if copy == 0 { t + n } else { t });
            }
        }
    }
    let accepting: Vec<bool> = (0..2 * n).map(|q| a.is_accepting(q % n)).collect();
    MultiDfa::new(a.base(), a.tracks().to_vec(), a.initial(), trans, accepting).expect("valid")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

/// Every automaton-algebra law on one generated pair.
pub fn check_laws(base: u32, ra: &Recipe, rb: &Recipe, samples: &[[u64; 3]]) -> Result<(), TestCaseError> {
    let a = build(base, ra);
    let b = build(base, rb);

    for m in [&a, &b] {
        ensure(m.is_pad_invariant(), || format!("pad violation in {m:?}"))?;
        ensure(m.minimize() == *m, || "minimize is not idempotent".into())?;
        ensure(reachable(m) == m.state_count(), || "unreachable states".into())?;
        ensure(moore_classes(m) == m.state_count(), || "not minimal".into())?;
        ensure(doubled(m).minimize() == *m, || "minimizing a redundant copy".into())?;
        ensure(m.complement().complement() == *m, || "complement is not an involution".into())?;
    }

    let ops = [BoolOp::And, BoolOp::Or, BoolOp::Xor, BoolOp::Implies, BoolOp::Iff];
    for op in ops {
        let p = a.product(&b, op).expect("same base");
        ensure(p.is_pad_invariant(), || format!("{op:?} product not pad invariant"))?;
        for s in samples {
            let want = op.apply(a.accepts_named(value_of(s)), b.accepts_named(value_of(s)));
            ensure(p.accepts_named(value_of(s)) == want, || format!("{op:?} at {s:?}"))?;
        }
    }
    let c = a.complement();
    for s in samples {
        ensure(c.accepts_named(value_of(s)) != a.accepts_named(value_of(s)), || format!("complement at {s:?}"))?;
    }

    // Projection: p(r) holds iff fixing the other tracks to r leaves a
    // nonempty language, and any witness is accepted by the original.
    for t in a.tracks().to_vec() {
        let p = a.project(&t).expect("track exists");
        ensure(p.is_pad_invariant(), || format!("projection of {t} not pad invariant"))?;
        for s in samples {
            let mut fixed = a.clone();
            for u in p.tracks() {
                let v = value_of(s)(u) as i64;
                fixed = fixed
                    .and(&linear(base, &[(u.clone(), 1)], -v, LinRel::Eq).expect("linear"))
                    .expect("same base");
            }
            let witness = fixed.witness();
            ensure(p.accepts_named(value_of(s)) == witness.is_some(), || format!("projecting {t} at {s:?}"))?;
            if let Some(w) = witness {
                ensure(a.accepts(&w), || format!("witness {w:?} rejected"))?;
            }
        }
    }
    Ok(())
}
