//! Digit-pattern regular expressions over base-`k` representations.
//!
//! Syntax: digit literals `0`-`9`, classes `[01]`, `[0-2]` or `{0,1}`, `.`
//! for any digit, grouping `( )`, union `|`, and postfix `*`, `+`, `?`.
//! Whitespace and `·` are ignored, so `2·1·1*` and `211*` are the same
//! pattern.

use std::collections::{BTreeSet, HashMap};

use super::{AutomataError, MultiDfa};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DigitRegex {
    /// Matches only the empty word.
    Epsilon,
    /// One digit from the set.
    Class(BTreeSet<u32>),
    /// Any single digit of the base.
    Any,
    Concat(Vec<DigitRegex>),
    Union(Vec<DigitRegex>),
    Star(Box<DigitRegex>),
    Plus(Box<DigitRegex>),
    Optional(Box<DigitRegex>),
}

/// How a pattern is matched against a number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegexMatch {
    /// The canonical lsd representation (empty for 0, last digit nonzero)
    /// must match.
    Canonical,
    /// Some representation, i.e. the canonical one followed by any number
    /// of zeros, must match.
    AnyPadding,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl DigitRegex {
    pub fn parse(src: &str) -> Result<DigitRegex, AutomataError> {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace() && *c != '·')
            .collect();
        let mut p = Parser { chars, pos: 0, src };
        let r = p.union()?;
        if p.pos != p.chars.len() {
            return Err(p.error("unexpected character"));
        }
        Ok(r)
    }

    pub fn literal(digit: u32) -> DigitRegex {
        DigitRegex::Class(BTreeSet::from([digit]))
    }

    fn max_digit(&self) -> Option<u32> {
        match self {
            DigitRegex::Epsilon | DigitRegex::Any => None,
            DigitRegex::Class(set) => set.iter().next_back().copied(),
            DigitRegex::Concat(v) | DigitRegex::Union(v) => {
                v.iter().filter_map(|r| r.max_digit()).max()
            }
            DigitRegex::Star(r) | DigitRegex::Plus(r) | DigitRegex::Optional(r) => r.max_digit(),
        }
    }
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> AutomataError {
        let at = self
            .chars
            .get(self.pos)
            .map_or(self.src.len(), |&(i, _)| i);
        AutomataError::Regex {
            pattern: self.src.to_string(),
            position: at,
            message: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn union(&mut self) -> Result<DigitRegex, AutomataError> {
        let mut alts = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            alts.push(self.concat()?);
        }
        Ok(if alts.len() == 1 {
            alts.pop().unwrap()
        } else {
            DigitRegex::Union(alts)
        })
    }

    fn concat(&mut self) -> Result<DigitRegex, AutomataError> {
        let mut items = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            items.push(self.postfix()?);
        }
        Ok(match items.len() {
            0 => DigitRegex::Epsilon,
            1 => items.pop().unwrap(),
            _ => DigitRegex::Concat(items),
        })
    }

    fn postfix(&mut self) -> Result<DigitRegex, AutomataError> {
        let mut r = self.atom()?;
        while let Some(c) = self.peek() {
            r = match c {
                '*' => DigitRegex::Star(Box::new(r)),
                '+' => DigitRegex::Plus(Box::new(r)),
                '?' => DigitRegex::Optional(Box::new(r)),
                _ => break,
            };
            self.pos += 1;
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<DigitRegex, AutomataError> {
        let c = self.peek().ok_or_else(|| self.error("unexpected end of pattern"))?;
        match c {
            '0'..='9' => {
                self.pos += 1;
                Ok(DigitRegex::literal(c.to_digit(10).unwrap()))
            }
            '.' | 'Σ' => {
                self.pos += 1;
                Ok(DigitRegex::Any)
            }
            '(' => {
                self.pos += 1;
                let r = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(r)
            }
            '[' => self.class(']'),
            '{' => self.class('}'),
            _ => Err(self.error("unexpected character")),
        }
    }

    fn class(&mut self, close: char) -> Result<DigitRegex, AutomataError> {
        self.pos += 1;
        let mut set = BTreeSet::new();
        loop {
            match self.peek() {
                Some(c) if c == close => {
                    self.pos += 1;
                    break;
                }
                Some(',') => self.pos += 1,
                Some(c @ '0'..='9') => {
                    self.pos += 1;
                    let lo = c.to_digit(10).unwrap();
                    if self.peek() == Some('-') {
                        self.pos += 1;
                        match self.peek() {
                            Some(h @ '0'..='9') => {
                                self.pos += 1;
                                let hi = h.to_digit(10).unwrap();
                                if hi < lo {
                                    return Err(self.error("empty range"));
                                }
                                set.extend(lo..=hi);
                            }
                            _ => return Err(self.error("bad range")),
                        }
                    } else {
                        set.insert(lo);
                    }
                }
                _ => return Err(self.error("unterminated class")),
            }
        }
        if set.is_empty() {
            return Err(self.error("empty class"));
        }
        Ok(DigitRegex::Class(set))
    }
}

/// Thompson NFA: per state, labelled edges (`None` = epsilon).
struct Nfa {
    edges: Vec<Vec<(Option<u32>, usize)>>,
}

impl Nfa {
    fn state(&mut self) -> usize {
        self.edges.push(Vec::new());
        self.edges.len() - 1
    }

    /// Builds a fragment and returns its (start, accept) states.
    fn build(&mut self, r: &DigitRegex, base: u32) -> (usize, usize) {
        let s = self.state();
        let f = self.state();
        match r {
            DigitRegex::Epsilon => self.edges[s].push((None, f)),
            DigitRegex::Class(set) => {
                for &d in set {
                    self.edges[s].push((Some(d), f));
                }
            }
            DigitRegex::Any => {
                for d in 0..base {
                    self.edges[s].push((Some(d), f));
                }
            }
            DigitRegex::Concat(items) => {
                let mut cur = s;
                for item in items {
                    let (a, b) = self.build(item, base);
                    self.edges[cur].push((None, a));
                    cur = b;
                }
                self.edges[cur].push((None, f));
            }
            DigitRegex::Union(alts) => {
                for alt in alts {
                    let (a, b) = self.build(alt, base);
                    self.edges[s].push((None, a));
                    self.edges[b].push((None, f));
                }
            }
            DigitRegex::Star(inner) | DigitRegex::Plus(inner) | DigitRegex::Optional(inner) => {
                let (a, b) = self.build(inner, base);
                self.edges[s].push((None, a));
                self.edges[b].push((None, f));
                if !matches!(r, DigitRegex::Plus(_)) {
                    self.edges[s].push((None, f));
                }
                if !matches!(r, DigitRegex::Optional(_)) {
                    self.edges[b].push((None, a));
                }
            }
        }
        (s, f)
    }

    fn closure(&self, set: &mut Vec<usize>) {
        let mut stack = set.clone();
        while let Some(q) = stack.pop() {
            for &(label, t) in &self.edges[q] {
                if label.is_none() && !set.contains(&t) {
                    set.push(t);
                    stack.push(t);
                }
            }
        }
        set.sort_unstable();
    }
}

/// Subset construction: complete DFA over digits `0..base`, returned as
/// (transition table, accepting flags); state 0 is initial.
fn determinize(r: &DigitRegex, base: u32) -> (Vec<u32>, Vec<bool>) {
    let mut nfa = Nfa { edges: Vec::new() };
    let (start, accept) = nfa.build(r, base);
    let mut init = vec![start];
    nfa.closure(&mut init);
    let mut index: HashMap<Vec<usize>, u32> = HashMap::new();
    let mut sets = vec![init.clone()];
    index.insert(init, 0);
    let mut trans = Vec::new();
    let mut head = 0;
    while head < sets.len() {
        let set = sets[head].clone();
        head += 1;
        for d in 0..base {
            let mut next: Vec<usize> = Vec::new();
            for &q in &set {
                for &(label, t) in &nfa.edges[q] {
                    if label == Some(d) && !next.contains(&t) {
                        next.push(t);
                    }
                }
            }
            nfa.closure(&mut next);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = sets.len() as u32;
                    index.insert(next.clone(), id);
                    sets.push(next);
                    id
                }
            };
            trans.push(id);
        }
    }
    let accepting = sets.iter().map(|s| s.contains(&accept)).collect();
    (trans, accepting)
}

/// Compiles a digit pattern into a single-track automaton on `track`,
/// accepting every padded representation of each matching number.
pub fn compile_regex(
    r: &DigitRegex,
    base: u32,
    track: &str,
    mode: RegexMatch,
) -> Result<MultiDfa, AutomataError> {
    if base < 2 {
        return Err(AutomataError::BadBase(base));
    }
    if let Some(d) = r.max_digit() {
        if d >= base {
            return Err(AutomataError::DigitTooLarge(d, base));
        }
    }
    let (trans, mut accepting) = determinize(r, base);
    let k = base as usize;
    let n = accepting.len();
    if mode == RegexMatch::AnyPadding {
        // Accept wherever a run of zeros reaches acceptance.
        loop {
            let mut changed = false;
            for q in 0..n {
                if !accepting[q] && accepting[trans[q * k] as usize] {
                    accepting[q] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
    // Pair (state after the last nonzero digit, state after the whole
    // word); the first component decides acceptance.
    let mut index: HashMap<(u32, u32), u32> = HashMap::new();
    let mut pairs = vec![(0u32, 0u32)];
    index.insert((0, 0), 0);
    let mut out_trans = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (stripped, full) = pairs[head];
        head += 1;
        for d in 0..base {
            let full_next = trans[full as usize * k + d as usize];
            let stripped_next = if d == 0 { stripped } else { full_next };
            let key = (stripped_next, full_next);
            let next_id = pairs.len() as u32;
            let id = *index.entry(key).or_insert_with(|| {
                pairs.push(key);
                next_id
            });
            out_trans.push(id);
        }
    }
    let out_acc = pairs.iter().map(|&(s, _)| accepting[s as usize]).collect();
    Ok(MultiDfa::from_parts_unchecked(base, vec![track.to_string()], 0, out_trans, out_acc).minimize())
}

/// Canonical-representation compilation of a pattern given as text.
pub fn regex_compile(pattern: &str, base: u32, track: &str) -> Result<MultiDfa, AutomataError> {
    compile_regex(&DigitRegex::parse(pattern)?, base, track, RegexMatch::Canonical)
}
