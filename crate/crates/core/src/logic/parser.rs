//! Lexer and recursive-descent parser for query scripts.
//!
//! Precedence, tightest first: atoms, `~`, `&`, `|`, `=>`, `<=>`. A
//! quantifier's body runs to the end of the enclosing parenthesized group.

use super::ast::{Command, CommandKind, Formula, Quantifier, Rel, SeqRhs, Term};
use super::LogicError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Quant(Quantifier, Option<String>),
    Output(u32),
    Call(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Rel(Rel),
    Not,
    And,
    Or,
    Implies,
    Iff,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

/// A character of formula text together with its position in the script.
type PosChar = (char, usize, usize);

fn syntax(line: usize, col: usize, message: impl Into<String>) -> LogicError {
    LogicError::Syntax {
        line,
        col,
        message: message.into(),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn lex(chars: &[PosChar], end: (usize, usize)) -> Result<Vec<Spanned>, LogicError> {
    let mut out = Vec::new();
    let mut i = 0;
    let at = |i: usize| chars.get(i).map(|c| c.0);
    while i < chars.len() {
        let (c, line, col) = chars[i];
        let push = |out: &mut Vec<Spanned>, tok| out.push(Spanned { tok, line, col });
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if is_ident_start(c) {
            let start = i;
            while at(i).is_some_and(is_ident_char) {
                i += 1;
            }
            let word: String = chars[start..i].iter().map(|c| c.0).collect();
            let mut j = i;
            while at(j).is_some_and(char::is_whitespace) {
                j += 1;
            }
            let indexed = at(j) == Some('[');
            let quant = match word.chars().next() {
                Some('E') => Some(Quantifier::Exists),
                Some('A') => Some(Quantifier::Forall),
                _ => None,
            };
            match quant {
                Some(q) if !indexed => {
                    let rest = &word[1..];
                    let var = (!rest.is_empty()).then(|| rest.to_string());
                    push(&mut out, Tok::Quant(q, var));
                }
                _ => push(&mut out, Tok::Ident(word)),
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while at(i).is_some_and(|c| c.is_ascii_digit()) {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|c| c.0).collect();
            let n = digits
                .parse::<u64>()
                .map_err(|_| syntax(line, col, format!("number {digits} is too large")))?;
            push(&mut out, Tok::Num(n));
            continue;
        }
        if c == '@' {
            i += 1;
            let start = i;
            while at(i).is_some_and(|c| c.is_ascii_digit()) {
                i += 1;
            }
            if start == i {
                return Err(syntax(line, col, "expected a digit after '@'"));
            }
            let digits: String = chars[start..i].iter().map(|c| c.0).collect();
            let v = digits
                .parse::<u32>()
                .map_err(|_| syntax(line, col, format!("output {digits} is too large")))?;
            push(&mut out, Tok::Output(v));
            continue;
        }
        if c == '$' {
            i += 1;
            let start = i;
            if !at(i).is_some_and(is_ident_start) {
                return Err(syntax(line, col, "expected a predicate name after '$'"));
            }
            while at(i).is_some_and(is_ident_char) {
                i += 1;
            }
            let name: String = chars[start..i].iter().map(|c| c.0).collect();
            push(&mut out, Tok::Call(name));
            continue;
        }
        let rest: String = chars[i..(i + 3).min(chars.len())].iter().map(|c| c.0).collect();
        let (tok, len) = if rest.starts_with("<=>") {
            (Tok::Iff, 3)
        } else if rest.starts_with("=>") {
            (Tok::Implies, 2)
        } else if rest.starts_with("<=") {
            (Tok::Rel(Rel::Le), 2)
        } else if rest.starts_with(">=") {
            (Tok::Rel(Rel::Ge), 2)
        } else if rest.starts_with("!=") {
            (Tok::Rel(Rel::Ne), 2)
        } else {
            let tok = match c {
                '=' => Tok::Rel(Rel::Eq),
                '<' => Tok::Rel(Rel::Lt),
                '>' => Tok::Rel(Rel::Gt),
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '~' => Tok::Not,
                '&' => Tok::And,
                '|' => Tok::Or,
                _ => return Err(syntax(line, col, format!("unexpected character {c:?}"))),
            };
            (tok, 1)
        };
        push(&mut out, tok);
        i += len;
    }
    out.push(Spanned {
        tok: Tok::End,
        line: end.0,
        col: end.1,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> LogicError {
        let s = &self.toks[self.pos];
        syntax(s.line, s.col, message)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), LogicError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn iff(&mut self) -> Result<Formula, LogicError> {
        let mut left = self.implies()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            let right = self.implies()?;
            left = Formula::Iff(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn implies(&mut self) -> Result<Formula, LogicError> {
        let left = self.or()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let right = self.implies()?;
            return Ok(Formula::Implies(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula, LogicError> {
        let mut left = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let right = self.and()?;
            left = Formula::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula, LogicError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let right = self.unary()?;
            left = Formula::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, LogicError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::Not(Box::new(self.unary()?)))
            }
            Tok::Quant(q, first) => {
                self.bump();
                let mut vars = Vec::new();
                match first {
                    Some(v) => vars.push(v),
                    None => vars.push(self.ident("a quantified variable")?),
                }
                while *self.peek() == Tok::Comma {
                    self.bump();
                    vars.push(self.ident("a quantified variable")?);
                }
                for (i, v) in vars.iter().enumerate() {
                    if vars[..i].contains(v) {
                        return Err(self.error(format!("variable {v} quantified twice")));
                    }
                }
                let body = self.iff()?;
                Ok(Formula::Quant(q, vars, Box::new(body)))
            }
            _ => self.primary(),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, LogicError> {
        match self.peek().clone() {
            Tok::Ident(v) => {
                self.bump();
                Ok(v)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn primary(&mut self) -> Result<Formula, LogicError> {
        if *self.peek() == Tok::LParen {
            // Either a parenthesized formula or a comparison whose left term
            // starts with a parenthesis; try the formula first.
            let save = self.pos;
            self.bump();
            let group = self.iff().and_then(|f| {
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            });
            match group {
                Ok(f) if !self.continues_term() => return Ok(f),
                Ok(_) => self.pos = save,
                Err(e) => {
                    let reached = self.pos;
                    self.pos = save;
                    return self.atom().map_err(|e2| if reached > self.pos { e } else { e2 });
                }
            }
        }
        self.atom()
    }

    fn continues_term(&self) -> bool {
        matches!(self.peek(), Tok::Plus | Tok::Minus | Tok::Star | Tok::Rel(_))
    }

    fn atom(&mut self) -> Result<Formula, LogicError> {
        match self.peek().clone() {
            Tok::Call(name) => {
                self.bump();
                self.expect(Tok::LParen, "'(' after predicate name")?;
                let mut args = Vec::new();
                if *self.peek() != Tok::RParen {
                    args.push(self.term()?);
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        args.push(self.term()?);
                    }
                }
                self.expect(Tok::RParen, "')' after arguments")?;
                Ok(Formula::Call(name, args))
            }
            Tok::Ident(name) if *self.peek_at(1) == Tok::LBracket => {
                let (seq, index) = self.indexed()?;
                let negated = match self.peek() {
                    Tok::Rel(Rel::Eq) => false,
                    Tok::Rel(Rel::Ne) => true,
                    _ => return Err(self.error("sequence values compare only with = or !=")),
                };
                self.bump();
                let rhs = match self.peek().clone() {
                    Tok::Output(v) => {
                        self.bump();
                        SeqRhs::Output(v)
                    }
                    Tok::Ident(_) if *self.peek_at(1) == Tok::LBracket => {
                        let (s, t) = self.indexed()?;
                        SeqRhs::Seq(s, t)
                    }
                    _ => return Err(self.error("expected @value or an indexed sequence")),
                };
                debug_assert_eq!(seq, name);
                Ok(Formula::SeqCmp {
                    seq,
                    index,
                    negated,
                    rhs,
                })
            }
            Tok::End => Err(self.error("unexpected end of formula")),
            _ => {
                let left = self.term()?;
                let rel = match self.peek() {
                    Tok::Rel(r) => *r,
                    _ => return Err(self.error("expected a comparison")),
                };
                self.bump();
                let right = self.term()?;
                Ok(Formula::Cmp(left, rel, right))
            }
        }
    }

    fn indexed(&mut self) -> Result<(String, Term), LogicError> {
        let name = self.ident("a sequence name")?;
        self.expect(Tok::LBracket, "'['")?;
        let index = self.term()?;
        self.expect(Tok::RBracket, "']'")?;
        Ok((name, index))
    }

    fn term(&mut self) -> Result<Term, LogicError> {
        let mut left = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    left = Term::Add(Box::new(left), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    left = Term::Sub(Box::new(left), Box::new(self.product()?));
                }
                _ => return Ok(left),
            }
        }
    }

    fn product(&mut self) -> Result<Term, LogicError> {
        let mut left = self.factor()?;
        while *self.peek() == Tok::Star {
            let star = self.pos;
            self.bump();
            let right = self.factor()?;
            left = match (left, right) {
                (Term::Const(a), Term::Const(b)) => Term::Const(a.checked_mul(b).ok_or_else(|| {
                    self.error("constant product overflows")
                })?),
                (Term::Const(c), t) | (t, Term::Const(c)) => Term::Mul(c, Box::new(t)),
                _ => {
                    let s = &self.toks[star];
                    return Err(syntax(
                        s.line,
                        s.col,
                        "multiplication needs a constant operand",
                    ));
                }
            };
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<Term, LogicError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Term::Const(n))
            }
            Tok::Ident(v) => {
                if *self.peek_at(1) == Tok::LBracket {
                    return Err(self.error("a sequence value cannot be used as a number"));
                }
                self.bump();
                Ok(Term::Var(v))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

/// Parses formula text starting with the `?lsd_k` header.
fn parse_formula_chars(chars: &[PosChar], end: (usize, usize)) -> Result<(u32, Formula), LogicError> {
    let mut i = 0;
    while i < chars.len() && chars[i].0.is_whitespace() {
        i += 1;
    }
    let (line, col) = chars.get(i).map(|c| (c.1, c.2)).unwrap_or(end);
    let header: String = chars[i..].iter().take(5).map(|c| c.0).collect();
    if header != "?lsd_" {
        if header.starts_with("?msd") {
            return Err(syntax(line, col, "only ?lsd_k formulas are supported"));
        }
        return Err(LogicError::MissingBase { line, col });
    }
    i += 5;
    let start = i;
    while i < chars.len() && chars[i].0.is_ascii_digit() {
        i += 1;
    }
    let digits: String = chars[start..i].iter().map(|c| c.0).collect();
    let base = digits
        .parse::<u32>()
        .ok()
        .filter(|&b| b >= 2)
        .ok_or(LogicError::MissingBase { line, col })?;
    let toks = lex(&chars[i..], end)?;
    let mut p = Parser { toks, pos: 0 };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(p.error(match p.peek() {
            Tok::RParen => "unbalanced ')'",
            _ => "unexpected token after formula",
        }));
    }
    Ok((base, f))
}

fn positioned(src: &str) -> Vec<PosChar> {
    let mut out = Vec::with_capacity(src.len());
    let (mut line, mut col) = (1, 1);
    for c in src.chars() {
        out.push((c, line, col));
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    out
}

/// Parses a bare formula such as `?lsd_2 En n+1=0`.
pub fn parse_formula(src: &str) -> Result<(u32, Formula), LogicError> {
    let chars = positioned(src);
    let end = chars
        .last()
        .map(|&(c, l, col)| if c == '\n' { (l + 1, 1) } else { (l, col + 1) })
        .unwrap_or((1, 1));
    parse_formula_chars(&chars, end)
}

/// Parses a script of `def NAME "FORMULA":` and `eval NAME "FORMULA":`
/// commands. `#` starts a comment outside quoted formulas.
pub fn parse(src: &str) -> Result<Vec<Command>, LogicError> {
    let chars = positioned(src);
    let eof = chars
        .last()
        .map(|&(c, l, col)| if c == '\n' { (l + 1, 1) } else { (l, col + 1) })
        .unwrap_or((1, 1));
    let pos_of = |i: usize| chars.get(i).map(|c| (c.1, c.2)).unwrap_or(eof);
    let mut commands = Vec::new();
    let mut i = 0;
    let skip_blank = |i: &mut usize| loop {
        match chars.get(*i).map(|c| c.0) {
            Some(c) if c.is_whitespace() => *i += 1,
            Some('#') => {
                while chars.get(*i).is_some_and(|c| c.0 != '\n') {
                    *i += 1;
                }
            }
            _ => break,
        }
    };
    let word = |i: &mut usize| -> String {
        let start = *i;
        while chars.get(*i).is_some_and(|c| is_ident_char(c.0)) {
            *i += 1;
        }
        chars[start..*i].iter().map(|c| c.0).collect()
    };
    loop {
        skip_blank(&mut i);
        if i >= chars.len() {
            break;
        }
        let (line, col) = pos_of(i);
        let kind = match word(&mut i).as_str() {
            "def" => CommandKind::Def,
            "eval" => CommandKind::Eval,
            "" => {
                return Err(syntax(line, col, format!("unexpected character {:?}", chars[i].0)))
            }
            other => return Err(syntax(line, col, format!("expected def or eval, found {other:?}"))),
        };
        skip_blank(&mut i);
        let (nl, nc) = pos_of(i);
        if !chars.get(i).is_some_and(|c| is_ident_start(c.0)) {
            return Err(syntax(nl, nc, "expected a command name"));
        }
        let name = word(&mut i);
        skip_blank(&mut i);
        let (ql, qc) = pos_of(i);
        if chars.get(i).map(|c| c.0) != Some('"') {
            return Err(syntax(ql, qc, "expected a quoted formula"));
        }
        i += 1;
        let mut body: Vec<PosChar> = Vec::new();
        loop {
            match chars.get(i) {
                None => return Err(syntax(ql, qc, "unterminated string")),
                Some(&('"', _, _)) => {
                    i += 1;
                    break;
                }
                Some(&('\\', l, c)) => {
                    let escaped = match chars.get(i + 1).map(|c| c.0) {
                        Some('"') => '"',
                        Some('\\') => '\\',
                        Some('n') => '\n',
                        Some('t') => '\t',
                        other => {
                            return Err(LogicError::UnknownEscape {
                                line: l,
                                col: c,
                                escape: other.map(String::from).unwrap_or_default(),
                            })
                        }
                    };
                    body.push((escaped, l, c));
                    i += 2;
                }
                Some(&c) => {
                    body.push(c);
                    i += 1;
                }
            }
        }
        let close = pos_of(i.saturating_sub(1));
        let (base, formula) = parse_formula_chars(&body, close)?;
        skip_blank(&mut i);
        match chars.get(i).map(|c| c.0) {
            Some(':') | Some(';') => i += 1,
            _ => {
                let (l, c) = pos_of(i);
                return Err(syntax(l, c, "expected ':' after the formula"));
            }
        }
        commands.push(Command {
            kind,
            name,
            base,
            formula,
            line,
            col,
        });
    }
    Ok(commands)
}
