//! Formula to automaton compilation.
//!
//! Terms are flattened to linear forms `sum a_i x_i + c`. Every truncated
//! subtraction `a - b` contributes a side condition `a - b >= 0` that is
//! conjoined at the enclosing atom, so the atom is false wherever a
//! difference is undefined. Compound sequence indices and non-variable
//! call arguments introduce fresh variables (named `#k`, which no user
//! identifier can clash with) that are projected away as soon as every
//! factor mentioning them has been conjoined.

use std::collections::{BTreeMap, BTreeSet};

use super::ast::{Formula, Quantifier, Rel, SeqRhs, Term};
use super::{LogicError, Session};
use crate::automata::{linear, BoolOp, Dfao, LinRel, MultiDfa};

/// Compiles `f` in base `base`. The result's tracks are the free variables
/// of `f` in alphabetical order.
pub fn compile(f: &Formula, base: u32, session: &Session) -> Result<MultiDfa, LogicError> {
    let mut c = Compiler {
        base,
        session,
        fresh: 0,
    };
    let dfa = c.formula(f, &BTreeSet::new())?;
    let free = f.free_vars();
    let missing: Vec<String> = free
        .iter()
        .filter(|v| !dfa.tracks().contains(v))
        .cloned()
        .collect();
    let dfa = if missing.is_empty() {
        dfa
    } else {
        dfa.and(&MultiDfa::universal(base, missing, true))?
    };
    Ok(dfa.sorted_tracks())
}

#[derive(Clone, Debug, Default)]
struct Linear {
    coeffs: BTreeMap<String, i64>,
    constant: i64,
}

impl Linear {
    fn scaled(mut self, k: i64) -> Linear {
        self.coeffs.values_mut().for_each(|c| *c *= k);
        self.constant *= k;
        self
    }

    fn plus(mut self, other: Linear, sign: i64) -> Linear {
        for (v, c) in other.coeffs {
            *self.coeffs.entry(v).or_insert(0) += sign * c;
        }
        self.constant += sign * other.constant;
        self
    }
}

struct Compiler<'a> {
    base: u32,
    session: &'a Session,
    fresh: usize,
}

impl<'a> Compiler<'a> {
    fn fresh_var(&mut self) -> String {
        let v = format!("#{}", self.fresh);
        self.fresh += 1;
        v
    }

    /// Linear form of `t`, pushing `e >= 0` side conditions for differences.
    fn linearize(&self, t: &Term, sides: &mut Vec<Linear>) -> Linear {
        match t {
            Term::Var(v) => {
                let mut l = Linear::default();
                l.coeffs.insert(v.clone(), 1);
                l
            }
            Term::Const(c) => Linear {
                coeffs: BTreeMap::new(),
                constant: *c as i64,
            },
            Term::Add(a, b) => {
                let a = self.linearize(a, sides);
                a.plus(self.linearize(b, sides), 1)
            }
            Term::Sub(a, b) => {
                let a = self.linearize(a, sides);
                let d = a.plus(self.linearize(b, sides), -1);
                sides.push(d.clone());
                d
            }
            Term::Mul(k, t) => self.linearize(t, sides).scaled(*k as i64),
        }
    }

    /// Automaton for `l = 0` or `l <= 0`.
    fn atom(&self, l: &Linear, rel: LinRel) -> Result<MultiDfa, LogicError> {
        let coeffs: Vec<(String, i64)> = l
            .coeffs
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(v, &c)| (v.clone(), c))
            .collect();
        if coeffs.is_empty() {
            let holds = match rel {
                LinRel::Eq => l.constant == 0,
                LinRel::Le => l.constant <= 0,
            };
            return Ok(MultiDfa::constant(self.base, holds));
        }
        Ok(linear(self.base, &coeffs, l.constant, rel)?)
    }

    fn side_conditions(&self, sides: &[Linear]) -> Result<Vec<MultiDfa>, LogicError> {
        sides
            .iter()
            .map(|d| self.atom(&d.clone().scaled(-1), LinRel::Le))
            .collect()
    }

    fn formula(&mut self, f: &Formula, bound: &BTreeSet<String>) -> Result<MultiDfa, LogicError> {
        match f {
            Formula::Cmp(a, rel, b) => self.compare(a, *rel, b),
            Formula::SeqCmp {
                seq,
                index,
                negated,
                rhs,
            } => self.seq_compare(seq, index, *negated, rhs),
            Formula::Call(name, args) => self.call(name, args),
            Formula::Not(g) => Ok(self.formula(g, bound)?.complement()),
            Formula::And(a, b) => self.binary(a, b, BoolOp::And, bound),
            Formula::Or(a, b) => self.binary(a, b, BoolOp::Or, bound),
            Formula::Implies(a, b) => self.binary(a, b, BoolOp::Implies, bound),
            Formula::Iff(a, b) => self.binary(a, b, BoolOp::Iff, bound),
            Formula::Quant(q, vars, body) => {
                let mut inner = bound.clone();
                for v in vars {
                    if !inner.insert(v.clone()) {
                        return Err(LogicError::Rebound(v.clone()));
                    }
                }
                let mut dfa = self.formula(body, &inner)?;
                if *q == Quantifier::Forall {
                    dfa = dfa.complement();
                }
                for v in vars {
                    if dfa.tracks().contains(v) {
                        dfa = dfa.project(v)?;
                    }
                }
                if *q == Quantifier::Forall {
                    dfa = dfa.complement();
                }
                Ok(dfa)
            }
        }
    }

    fn binary(
        &mut self,
        a: &Formula,
        b: &Formula,
        op: BoolOp,
        bound: &BTreeSet<String>,
    ) -> Result<MultiDfa, LogicError> {
        let a = self.formula(a, bound)?;
        let b = self.formula(b, bound)?;
        Ok(a.product(&b, op)?)
    }

    fn compare(&mut self, a: &Term, rel: Rel, b: &Term) -> Result<MultiDfa, LogicError> {
        let mut sides = Vec::new();
        let la = self.linearize(a, &mut sides);
        let lb = self.linearize(b, &mut sides);
        let diff = la.plus(lb, -1);
        let one = Linear {
            coeffs: BTreeMap::new(),
            constant: 1,
        };
        let main = match rel {
            Rel::Eq => self.atom(&diff, LinRel::Eq)?,
            Rel::Ne => self.atom(&diff, LinRel::Eq)?.complement(),
            Rel::Le => self.atom(&diff, LinRel::Le)?,
            Rel::Lt => self.atom(&diff.plus(one, 1), LinRel::Le)?,
            Rel::Ge => self.atom(&diff.scaled(-1), LinRel::Le)?,
            Rel::Gt => self.atom(&diff.scaled(-1).plus(one, 1), LinRel::Le)?,
        };
        let mut factors = self.side_conditions(&sides)?;
        factors.push(main);
        conjoin_eliminating(self.base, factors, &[])
    }

    /// The variable naming the value of `index`, plus the factors that
    /// define it when it is fresh.
    fn index_var(
        &mut self,
        index: &Term,
        factors: &mut Vec<MultiDfa>,
        fresh: &mut Vec<String>,
    ) -> Result<String, LogicError> {
        if let Term::Var(v) = index {
            return Ok(v.clone());
        }
        let u = self.fresh_var();
        let mut sides = Vec::new();
        let l = self.linearize(index, &mut sides);
        let mut def = Linear::default();
        def.coeffs.insert(u.clone(), 1);
        factors.push(self.atom(&def.plus(l, -1), LinRel::Eq)?);
        factors.extend(self.side_conditions(&sides)?);
        fresh.push(u.clone());
        Ok(u)
    }

    fn sequence(&self, name: &str) -> Result<&'a Dfao, LogicError> {
        let session: &'a Session = self.session;
        let dfao = session.sequence(name)?;
        if dfao.base() != self.base {
            return Err(LogicError::BaseMismatch {
                name: name.to_string(),
                expected: self.base,
                found: dfao.base(),
            });
        }
        Ok(dfao)
    }

    fn seq_compare(
        &mut self,
        seq: &str,
        index: &Term,
        negated: bool,
        rhs: &SeqRhs,
    ) -> Result<MultiDfa, LogicError> {
        let x = self.sequence(seq)?;
        let mut factors = Vec::new();
        let mut fresh = Vec::new();
        let u = self.index_var(index, &mut factors, &mut fresh)?;
        let relation = match rhs {
            SeqRhs::Output(v) => {
                if *v >= x.modulus() {
                    return Err(LogicError::OutputTooLarge {
                        seq: seq.to_string(),
                        value: *v,
                        modulus: x.modulus(),
                    });
                }
                x.slice_where(&u, |o| (o == *v) != negated)
            }
            SeqRhs::Seq(other, index2) => {
                let y = self.sequence(other)?;
                let w = self.index_var(index2, &mut factors, &mut fresh)?;
                let values = x.modulus().max(y.modulus());
                let mut equal = MultiDfa::constant(self.base, false);
                for v in 0..values {
                    let both = x.slice(v, &u).and(&y.slice(v, &w))?;
                    equal = equal.or(&both)?;
                }
                if negated {
                    equal.complement()
                } else {
                    equal
                }
            }
        };
        factors.push(relation);
        conjoin_eliminating(self.base, factors, &fresh)
    }

    fn call(&mut self, name: &str, args: &[Term]) -> Result<MultiDfa, LogicError> {
        let session: &'a Session = self.session;
        let pred = session.predicate(name)?;
        if pred.params.len() != args.len() {
            return Err(LogicError::Arity {
                name: name.to_string(),
                expected: pred.params.len(),
                found: args.len(),
            });
        }
        if pred.dfa.base() != self.base {
            return Err(LogicError::BaseMismatch {
                name: name.to_string(),
                expected: self.base,
                found: pred.dfa.base(),
            });
        }
        let mut factors = Vec::new();
        let mut fresh = Vec::new();
        let mut rename = BTreeMap::new();
        let mut used = BTreeSet::new();
        for (param, arg) in pred.params.iter().zip(args) {
            let target = match arg {
                Term::Var(v) if !used.contains(v) => v.clone(),
                Term::Var(_) => {
                    // Repeated variable: route it through a fresh copy.
                    let copy = Term::Add(Box::new(arg.clone()), Box::new(Term::Const(0)));
                    self.index_var(&copy, &mut factors, &mut fresh)?
                }
                _ => self.index_var(arg, &mut factors, &mut fresh)?,
            };
            used.insert(target.clone());
            rename.insert(param.clone(), target);
        }
        factors.push(pred.dfa.rename_tracks(&rename)?);
        conjoin_eliminating(self.base, factors, &fresh)
    }
}

/// Conjoins `factors`, projecting each variable of `eliminate` away as soon
/// as every factor that mentions it has been absorbed.
fn conjoin_eliminating(
    base: u32,
    mut factors: Vec<MultiDfa>,
    eliminate: &[String],
) -> Result<MultiDfa, LogicError> {
    for v in eliminate {
        let (with, without): (Vec<MultiDfa>, Vec<MultiDfa>) = factors
            .into_iter()
            .partition(|f| f.tracks().contains(v));
        factors = without;
        let mut acc: Option<MultiDfa> = None;
        for f in with {
            acc = Some(match acc {
                None => f,
                Some(a) => a.and(&f)?,
            });
        }
        if let Some(a) = acc {
            factors.push(a.project(v)?);
        }
    }
    let mut acc = MultiDfa::constant(base, true);
    // Smallest factors first keeps intermediate products small.
    factors.sort_by_key(|f| (f.tracks().len(), f.state_count()));
    for f in factors {
        acc = acc.and(&f)?;
    }
    Ok(acc)
}
