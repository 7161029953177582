//! Shared fixtures: a brute-force formula evaluator over oracle tables, the
//! formula corpus it is compared on, and generators for random automata.

#![allow(dead_code)]

pub mod corpus;
pub mod laws;

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;
use std::sync::OnceLock;

use ctseq::automata::MultiDfa;
use ctseq::logic::{compile, parse, parse_formula, Formula, Quantifier, Rel, SeqRhs, Session, Term};
use ctseq::sequences::{oracle, SeqKind};

/// Length of every oracle table used by the evaluator.
pub const TABLE_LEN: usize = 60_000;

/// Brute-force values of a built-in sequence, from the oracles (Thue-Morse
/// from bit counts).
pub fn table(name: &str) -> Option<&'static [u32]> {
    static TABLES: OnceLock<HashMap<&'static str, Vec<u32>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        let mut t = HashMap::new();
        t.insert(
            "T_lsd",
            (0..TABLE_LEN as u64).map(|n| n.count_ones() % 2).collect(),
        );
        for (name, kind, p) in [
            ("MOT2", SeqKind::Motzkin, 2),
            ("MOT3", SeqKind::Motzkin, 3),
            ("MOT5", SeqKind::Motzkin, 5),
            ("TRI3", SeqKind::Trinomial, 3),
            ("TRI5", SeqKind::Trinomial, 5),
            ("CAT3", SeqKind::Catalan, 3),
            ("CAT5", SeqKind::Catalan, 5),
        ] {
            t.insert(name, oracle(kind, TABLE_LEN, p).values);
        }
        t
    });
    tables.get(name).map(|v| v.as_slice())
}

#[derive(Debug)]
enum T {
    Var(usize),
    Const(i64),
    Add(Box<T>, Box<T>),
    Sub(Box<T>, Box<T>),
    Mul(i64, Box<T>),
}

impl T {
    /// `None` when some difference inside is negative.
    fn eval(&self, env: &[i64]) -> Option<i64> {
        Some(match self {
            T::Var(s) => env[*s],
            T::Const(c) => *c,
            T::Add(a, b) => a.eval(env)? + b.eval(env)?,
            T::Sub(a, b) => {
                let d = a.eval(env)? - b.eval(env)?;
                if d < 0 {
                    return None;
                }
                d
            }
            T::Mul(k, t) => k * t.eval(env)?,
        })
    }
}

#[derive(Debug)]
enum F {
    Cmp(T, Rel, T),
    Out {
        seq: &'static [u32],
        index: T,
        negated: bool,
        value: u32,
    },
    SeqEq {
        x: &'static [u32],
        i: T,
        negated: bool,
        y: &'static [u32],
        j: T,
    },
    Call {
        body: Rc<Def>,
        args: Vec<T>,
    },
    Not(Box<F>),
    And(Box<F>, Box<F>),
    Or(Box<F>, Box<F>),
    Implies(Box<F>, Box<F>),
    Iff(Box<F>, Box<F>),
    Exists(Vec<Bounded>, Box<F>),
    Forall(Vec<Bounded>, Box<F>),
}

/// A quantified slot with bounds implied by guards of the body: outside
/// `lower..=upper` the guard (a conjunct of an existential body, or of a
/// universal body's antecedent) is false.
#[derive(Debug)]
struct Bounded {
    slot: usize,
    /// Each term bounds the slot from above, inclusive.
    upper: Vec<T>,
    /// Each term bounds the slot from below, inclusive.
    lower: Vec<T>,
}

#[derive(Debug)]
struct Def {
    slots: usize,
    body: F,
}

fn at(seq: &[u32], i: i64) -> u32 {
    assert!((i as usize) < seq.len(), "index {i} is beyond the oracle table");
    seq[i as usize]
}

fn holds(rel: Rel, a: i64, b: i64) -> bool {
    match rel {
        Rel::Eq => a == b,
        Rel::Ne => a != b,
        Rel::Lt => a < b,
        Rel::Le => a <= b,
        Rel::Gt => a > b,
        Rel::Ge => a >= b,
    }
}

/// Evaluation context: quantifiers range over `0..domain`.
struct Eval {
    domain: i64,
}

impl Eval {
    fn f(&self, f: &F, env: &mut [i64]) -> bool {
        match f {
            F::Cmp(a, rel, b) => match (a.eval(env), b.eval(env)) {
                (Some(x), Some(y)) => holds(*rel, x, y),
                _ => false,
            },
            F::Out {
                seq,
                index,
                negated,
                value,
            } => match index.eval(env) {
                Some(i) => (at(seq, i) == *value) != *negated,
                None => false,
            },
            F::SeqEq { x, i, negated, y, j } => match (i.eval(env), j.eval(env)) {
                (Some(a), Some(b)) => (at(x, a) == at(y, b)) != *negated,
                _ => false,
            },
            F::Call { body, args } => {
                let mut small = [0i64; 16];
                let mut large = Vec::new();
                let inner: &mut [i64] = if body.slots <= small.len() {
                    &mut small[..body.slots]
                } else {
                    large.resize(body.slots, 0);
                    &mut large
                };
                for (k, a) in args.iter().enumerate() {
                    match a.eval(env) {
                        Some(v) => inner[k] = v,
                        None => return false,
                    }
                }
                self.f(&body.body, inner)
            }
            F::Not(g) => !self.f(g, env),
            F::And(a, b) => self.f(a, env) && self.f(b, env),
            F::Or(a, b) => self.f(a, env) || self.f(b, env),
            F::Implies(a, b) => !self.f(a, env) || self.f(b, env),
            F::Iff(a, b) => self.f(a, env) == self.f(b, env),
            F::Exists(vars, body) => self.quant(vars, body, env, true),
            F::Forall(vars, body) => self.quant(vars, body, env, false),
        }
    }

    fn quant(&self, vars: &[Bounded], body: &F, env: &mut [i64], exists: bool) -> bool {
        let Some((b, rest)) = vars.split_first() else {
            return self.f(body, env);
        };
        let v = b.slot;
        let (mut lo, mut hi) = (0, self.domain - 1);
        for t in &b.upper {
            match t.eval(env) {
                Some(x) => hi = hi.min(x),
                // The guard is false for every value.
                None => return !exists,
            }
        }
        for t in &b.lower {
            match t.eval(env) {
                Some(x) => lo = lo.max(x),
                None => return !exists,
            }
        }
        // A bound name may share its slot with a free use elsewhere.
        let saved = env[v];
        let mut result = !exists;
        for x in lo..=hi {
            env[v] = x;
            if self.quant(rest, body, env, exists) == exists {
                result = exists;
                break;
            }
        }
        env[v] = saved;
        result
    }
}

/// Brute-force semantics of a query-language environment: the built-in
/// sequences plus every command of the setup scripts, each re-evaluated from
/// its formula.
pub struct Brute {
    defs: HashMap<String, (Vec<String>, Rc<Def>)>,
}

struct Scope<'a> {
    brute: &'a Brute,
    slots: HashMap<String, usize>,
}

impl Scope<'_> {
    fn slot(&mut self, v: &str) -> usize {
        let n = self.slots.len();
        *self.slots.entry(v.to_string()).or_insert(n)
    }

    fn term(&mut self, t: &Term) -> T {
        match t {
            Term::Var(v) => T::Var(self.slot(v)),
            Term::Const(c) => T::Const(*c as i64),
            Term::Add(a, b) => T::Add(Box::new(self.term(a)), Box::new(self.term(b))),
            Term::Sub(a, b) => T::Sub(Box::new(self.term(a)), Box::new(self.term(b))),
            Term::Mul(k, t) => T::Mul(*k as i64, Box::new(self.term(t))),
        }
    }

    fn seq(name: &str) -> &'static [u32] {
        table(name).unwrap_or_else(|| panic!("no oracle for {name}"))
    }

    fn formula(&mut self, f: &Formula) -> F {
        let b = |s: &mut Self, g: &Formula| Box::new(s.formula(g));
        match f {
            Formula::Cmp(a, rel, c) => F::Cmp(self.term(a), *rel, self.term(c)),
            Formula::SeqCmp {
                seq,
                index,
                negated,
                rhs,
            } => match rhs {
                SeqRhs::Output(v) => F::Out {
                    seq: Self::seq(seq),
                    index: self.term(index),
                    negated: *negated,
                    value: *v,
                },
                SeqRhs::Seq(other, j) => F::SeqEq {
                    x: Self::seq(seq),
                    i: self.term(index),
                    negated: *negated,
                    y: Self::seq(other),
                    j: self.term(j),
                },
            },
            Formula::Call(name, args) => {
                let (_, body) = &self.brute.defs[name];
                F::Call {
                    body: body.clone(),
                    args: args.iter().map(|a| self.term(a)).collect(),
                }
            }
            Formula::Not(g) => F::Not(b(self, g)),
            Formula::And(x, y) => F::And(b(self, x), b(self, y)),
            Formula::Or(x, y) => F::Or(b(self, x), b(self, y)),
            Formula::Implies(x, y) => F::Implies(b(self, x), b(self, y)),
            Formula::Iff(x, y) => F::Iff(b(self, x), b(self, y)),
            Formula::Quant(q, vars, body) => {
                let slots: Vec<usize> = vars.iter().map(|v| self.slot(v)).collect();
                let guard = match (q, body.as_ref()) {
                    (Quantifier::Exists, g) => Some(g),
                    (Quantifier::Forall, Formula::Implies(g, _)) => Some(g.as_ref()),
                    _ => None,
                };
                let mut conjuncts = Vec::new();
                if let Some(g) = guard {
                    flatten_and(g, &mut conjuncts);
                }
                let bounded = slots
                    .iter()
                    .enumerate()
                    .map(|(k, &slot)| {
                        let later: BTreeSet<usize> = slots[k..].iter().copied().collect();
                        self.bounds(slot, &later, &conjuncts)
                    })
                    .collect();
                let body = b(self, body);
                match q {
                    Quantifier::Exists => F::Exists(bounded, body),
                    Quantifier::Forall => F::Forall(bounded, body),
                }
            }
        }
    }
}

fn flatten_and<'f>(f: &'f Formula, out: &mut Vec<&'f Formula>) {
    match f {
        Formula::And(a, b) => {
            flatten_and(a, out);
            flatten_and(b, out);
        }
        _ => out.push(f),
    }
}

/// Whether `t >= v` for every assignment: `v` occurs as a summand, possibly
/// scaled by a positive constant, and never under a subtraction.
fn dominates(t: &Term, v: &str) -> bool {
    match t {
        Term::Var(w) => w == v,
        Term::Add(a, b) => dominates(a, v) || dominates(b, v),
        Term::Mul(k, t) => *k >= 1 && dominates(t, v),
        Term::Const(_) | Term::Sub(..) => false,
    }
}

impl Scope<'_> {
    fn name_of(&self, slot: usize) -> String {
        self.slots
            .iter()
            .find(|(_, &s)| s == slot)
            .map(|(n, _)| n.clone())
            .expect("slot has a name")
    }

    /// Bounds on `slot` from comparison conjuncts whose other side mentions
    /// none of the variables still to be assigned.
    fn bounds(&mut self, slot: usize, later: &BTreeSet<usize>, conjuncts: &[&Formula]) -> Bounded {
        let v = self.name_of(slot);
        let mut bounded = Bounded {
            slot,
            upper: Vec::new(),
            lower: Vec::new(),
        };
        for c in conjuncts {
            let Formula::Cmp(a, rel, b) = c else { continue };
            // Normalize to `small rel' big` with rel' in {<, <=}.
            let (small, strict, big) = match rel {
                Rel::Lt => (a, true, b),
                Rel::Le => (a, false, b),
                Rel::Gt => (b, true, a),
                Rel::Ge => (b, false, a),
                Rel::Eq | Rel::Ne => continue,
            };
            let mut other_vars = BTreeSet::new();
            let independent = |t: &Term, scope: &mut Self, out: &mut BTreeSet<String>| {
                out.clear();
                t.vars(out);
                out.iter().all(|w| !later.contains(&scope.slot(w)))
            };
            if dominates(small, &v) && independent(big, self, &mut other_vars) {
                let t = self.term(big);
                bounded.upper.push(if strict {
                    T::Sub(Box::new(t), Box::new(T::Const(1)))
                } else {
                    t
                });
            }
            if matches!(big, Term::Var(w) if *w == v) && independent(small, self, &mut other_vars) {
                let t = self.term(small);
                bounded.lower.push(if strict {
                    T::Add(Box::new(t), Box::new(T::Const(1)))
                } else {
                    t
                });
            }
        }
        bounded
    }
}

impl Brute {
    pub fn new() -> Self {
        Brute {
            defs: HashMap::new(),
        }
    }

    /// Records every command of `script` as a predicate over its sorted free
    /// variables.
    pub fn load(&mut self, script: &str) {
        for cmd in parse(script).expect("setup script parses") {
            let params: Vec<String> = cmd.formula.free_vars().into_iter().collect();
            let def = self.translate(&cmd.formula, &params);
            self.defs.insert(cmd.name.clone(), (params, Rc::new(def)));
        }
    }

    fn translate(&self, f: &Formula, params: &[String]) -> Def {
        let mut scope = Scope {
            brute: self,
            slots: HashMap::new(),
        };
        for p in params {
            scope.slot(p);
        }
        let body = scope.formula(f);
        Def {
            slots: scope.slots.len(),
            body,
        }
    }
}

/// One formula of the differential corpus.
#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    /// Commands run (in both semantics) before the formula.
    pub setup: &'static str,
    /// `"?lsd_k formula"`.
    pub formula: &'static str,
    /// Every free variable ranges over `0..bound`.
    pub bound: u64,
    /// Quantified variables range over `0..domain`; chosen so that every
    /// quantifier in the formula is guarded within it.
    pub domain: u64,
}

/// Outcome of comparing one entry: the number of assignments checked, or
/// the first disagreement as `(assignment, automaton verdict)`.
pub type Diff = Result<usize, (Vec<(String, u64)>, bool)>;

/// Compiles the entry and compares acceptance with brute-force truth on
/// every assignment of its free variables below `bound`. The session runs
/// `entry.setup`; the brute-force side loads `brute_setup`.
pub fn differential(entry: &Entry, session: &mut Session, brute_setup: &str) -> Diff {
    session.run_script(entry.setup).expect("setup runs");
    let mut brute = Brute::new();
    brute.load(brute_setup);
    let (base, formula) = parse_formula(entry.formula).expect("formula parses");
    let dfa: MultiDfa = compile(&formula, base, session).expect("formula compiles");
    let params: Vec<String> = formula.free_vars().into_iter().collect();
    assert_eq!(dfa.tracks(), params.as_slice(), "{}", entry.name);
    let def = brute.translate(&formula, &params);
    let eval = Eval {
        domain: entry.domain as i64,
    };
    let mut env = vec![0i64; def.slots];
    let mut values = vec![0u64; params.len()];
    let mut count = 0;
    loop {
        for (k, v) in values.iter().enumerate() {
            env[k] = *v as i64;
        }
        let want = eval.f(&def.body, &mut env);
        let got = dfa.accepts(&values);
        count += 1;
        if got != want {
            return Err((params.iter().cloned().zip(values.iter().copied()).collect(), got));
        }
        // Odometer over the free variables.
        let mut k = 0;
        loop {
            if k == values.len() {
                return Ok(count);
            }
            values[k] += 1;
            if values[k] < entry.bound {
                break;
            }
            values[k] = 0;
            k += 1;
        }
    }
}

/// Free variables of a formula text, for corpus sanity checks.
pub fn free_vars(formula: &str) -> BTreeSet<String> {
    parse_formula(formula).expect("parses").1.free_vars()
}

/// Every automaton a session run of `scripts` produces: the built-in
/// sequences it touched, each open verdict, and each stored predicate, in a
/// fixed order.
pub fn script_automata(
    scripts: &[&str],
    cache: Option<std::path::PathBuf>,
) -> Vec<(String, ctseq::harness::Automaton)> {
    use ctseq::harness::{builtin_registry_cached, Automaton, BUILTIN_NAMES};
    let mut session = builtin_registry_cached(cache);
    let mut out = Vec::new();
    let mut names = Vec::new();
    for script in scripts {
        for (k, (name, verdict)) in session.run_script(script).expect("script runs").into_iter().enumerate() {
            if let Some(dfa) = verdict.automaton() {
                out.push((format!("{name}#{k}"), Automaton::from(dfa.clone())));
            }
            names.push(name);
        }
    }
    names.sort();
    names.dedup();
    for name in names {
        let p = session.predicate(&name).expect("registered");
        out.push((format!("${name}"), Automaton::from(p.dfa.clone())));
    }
    for name in BUILTIN_NAMES {
        out.push((name.to_string(), Automaton::from(session.sequence(name).expect("builds").clone())));
    }
    out
}
