use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(u64),
    Add(Box<Term>, Box<Term>),
    /// Truncated subtraction: an atom containing an undefined difference is
    /// false.
    Sub(Box<Term>, Box<Term>),
    Mul(u64, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Const(_) => {}
            Term::Add(a, b) | Term::Sub(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Term::Mul(_, t) => t.vars(out),
        }
    }

    fn is_sum(&self) -> bool {
        matches!(self, Term::Add(..) | Term::Sub(..))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Rel {
    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Gt => ">",
            Rel::Ge => ">=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Exists,
    Forall,
}

/// Right-hand side of a sequence comparison.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeqRhs {
    Output(u32),
    Seq(String, Term),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Cmp(Term, Rel, Term),
    /// `seq[index] = rhs`, or `!=` when `negated`.
    SeqCmp {
        seq: String,
        index: Term,
        negated: bool,
        rhs: SeqRhs,
    },
    Call(String, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Quant(Quantifier, Vec<String>, Box<Formula>),
}

impl Formula {
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Cmp(a, _, b) => {
                a.vars(out);
                b.vars(out);
            }
            Formula::SeqCmp { index, rhs, .. } => {
                index.vars(out);
                if let SeqRhs::Seq(_, t) = rhs {
                    t.vars(out);
                }
            }
            Formula::Call(_, args) => args.iter().for_each(|a| a.vars(out)),
            Formula::Not(f) => f.collect_free(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_free(out);
                b.collect_free(out);
            }
            Formula::Quant(_, vars, body) => {
                let mut inner = BTreeSet::new();
                body.collect_free(&mut inner);
                for v in vars {
                    inner.remove(v);
                }
                out.extend(inner);
            }
        }
    }

    /// Variables bound by some quantifier inside the formula.
    pub fn bound_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk(&mut |f| {
            if let Formula::Quant(_, vars, _) = f {
                out.extend(vars.iter().cloned());
            }
        });
        out
    }

    /// Names of the predicates called anywhere in the formula.
    pub fn calls(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk(&mut |f| {
            if let Formula::Call(name, _) = f {
                out.insert(name.clone());
            }
        });
        out
    }

    pub fn walk(&self, visit: &mut impl FnMut(&Formula)) {
        visit(self);
        match self {
            Formula::Not(f) | Formula::Quant(_, _, f) => f.walk(visit),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.walk(visit);
                b.walk(visit);
            }
            _ => {}
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommandKind {
    Def,
    Eval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub kind: CommandKind,
    pub name: String,
    pub base: u32,
    pub formula: Formula,
    /// Position of the command keyword in the script.
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrapped = |t: &Term, f: &mut fmt::Formatter<'_>| {
            if t.is_sum() {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        };
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) => write!(f, "{c}"),
            Term::Add(a, b) => {
                write!(f, "{a}+")?;
                wrapped(b, f)
            }
            Term::Sub(a, b) => {
                write!(f, "{a}-")?;
                wrapped(b, f)
            }
            Term::Mul(c, t) => {
                write!(f, "{c}*")?;
                wrapped(t, f)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Cmp(a, r, b) => write!(f, "{a}{}{b}", r.symbol()),
            Formula::SeqCmp {
                seq,
                index,
                negated,
                rhs,
            } => {
                let op = if *negated { "!=" } else { "=" };
                match rhs {
                    SeqRhs::Output(v) => write!(f, "{seq}[{index}]{op}@{v}"),
                    SeqRhs::Seq(s, t) => write!(f, "{seq}[{index}]{op}{s}[{t}]"),
                }
            }
            Formula::Call(name, args) => {
                write!(f, "${name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Formula::Not(a) => write!(f, "(~{a})"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::Implies(a, b) => write!(f, "({a} => {b})"),
            Formula::Iff(a, b) => write!(f, "({a} <=> {b})"),
            Formula::Quant(q, vars, body) => {
                let letter = match q {
                    Quantifier::Exists => "E",
                    Quantifier::Forall => "A",
                };
                write!(f, "({letter} {} {body})", vars.join(","))
            }
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kw = match self.kind {
            CommandKind::Def => "def",
            CommandKind::Eval => "eval",
        };
        write!(f, "{kw} {} \"?lsd_{} {}\":", self.name, self.base, self.formula)
    }
}
