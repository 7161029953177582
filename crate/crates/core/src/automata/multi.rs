use std::collections::{BTreeMap, HashMap, VecDeque};

use super::partition::{bfs_order, hopcroft, restrict};
use super::AutomataError;

/// Boolean connective used by [`MultiDfa::product`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    And,
    Or,
    Xor,
    Implies,
    Iff,
}

impl BoolOp {
    pub fn apply(self, a: bool, b: bool) -> bool {
        match self {
            BoolOp::And => a && b,
            BoolOp::Or => a || b,
            BoolOp::Xor => a != b,
            BoolOp::Implies => !a || b,
            BoolOp::Iff => a == b,
        }
    }
}

/// Deterministic complete automaton over tuples of base-`k` digits, one
/// named track per variable, read least significant digit first.
///
/// A symbol is the tuple `(d_0, ..., d_{t-1})` encoded as
/// `sum d_i * k^(t-1-i)`, so symbol order is lexicographic tuple order and
/// symbol 0 is the all-zero tuple. Acceptance never depends on trailing
/// all-zero tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiDfa {
    base: u32,
    tracks: Vec<String>,
    initial: u32,
    trans: Vec<u32>,
    accepting: Vec<bool>,
}

fn alphabet_size(base: u32, tracks: usize) -> usize {
    (base as usize).pow(tracks as u32)
}

fn decode(mut sym: usize, base: u32, width: usize) -> Vec<u32> {
    let mut digits = vec![0u32; width];
    for slot in digits.iter_mut().rev() {
        *slot = (sym % base as usize) as u32;
        sym /= base as usize;
    }
    digits
}

fn encode(digits: impl IntoIterator<Item = u32>, base: u32) -> usize {
    digits
        .into_iter()
        .fold(0usize, |acc, d| acc * base as usize + d as usize)
}

/// Subset count after which projection switches to double reversal.
const FORWARD_CAP: usize = 20_000;

/// Subset construction from `start`. `step(q, sym, push)` pushes the
/// successors of `q` on `sym`. Returns the subsets (sorted state lists) and
/// the transition table, or `None` once more than `cap` subsets appear.
fn determinize(
    n: usize,
    sigma: usize,
    mut start: Vec<u32>,
    cap: Option<usize>,
    step: impl Fn(u32, usize, &mut dyn FnMut(u32)),
) -> Option<(Vec<Vec<u32>>, Vec<u32>)> {
    start.sort_unstable();
    start.dedup();
    let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut subsets = vec![start];
    let mut trans: Vec<u32> = Vec::new();
    let mut seen = vec![false; n];
    let mut next_set: Vec<u32> = Vec::new();
    let mut head = 0;
    while head < subsets.len() {
        for sym in 0..sigma {
            next_set.clear();
            for &q in &subsets[head] {
                step(q, sym, &mut |t| {
                    if !seen[t as usize] {
                        seen[t as usize] = true;
                        next_set.push(t);
                    }
                });
            }
            for &t in &next_set {
                seen[t as usize] = false;
            }
            next_set.sort_unstable();
            let id = match index.get(&next_set) {
                Some(&id) => id,
                None => {
                    let id = subsets.len() as u32;
                    index.insert(next_set.clone(), id);
                    subsets.push(next_set.clone());
                    id
                }
            };
            trans.push(id);
        }
        head += 1;
        if cap.is_some_and(|c| subsets.len() > c) {
            return None;
        }
    }
    Some((subsets, trans))
}

/// Predecessor lists keyed by (symbol, target).
struct Preds {
    n: usize,
    start: Vec<u32>,
    sources: Vec<u32>,
}

impl Preds {
    fn new(n: usize, sigma: usize, edges: Vec<(usize, u32, u32)>) -> Preds {
        let mut start = vec![0u32; n * sigma + 1];
        for &(sym, t, _) in &edges {
            start[sym * n + t as usize + 1] += 1;
        }
        for i in 0..n * sigma {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut sources = vec![0u32; edges.len()];
        for (sym, t, p) in edges {
            let key = sym * n + t as usize;
            sources[fill[key] as usize] = p;
            fill[key] += 1;
        }
        Preds { n, start, sources }
    }

    fn each(&self, q: u32, sym: usize, push: &mut dyn FnMut(u32)) {
        let key = sym * self.n + q as usize;
        for &p in &self.sources[self.start[key] as usize..self.start[key + 1] as usize] {
            push(p);
        }
    }
}

impl MultiDfa {
    /// Builds an automaton from raw parts, checking totality, distinct track
    /// names and zero-pad invariance. The structure is kept as given.
    pub fn new(
        base: u32,
        tracks: Vec<String>,
        initial: u32,
        trans: Vec<u32>,
        accepting: Vec<bool>,
    ) -> Result<Self, AutomataError> {
        if base < 2 {
            return Err(AutomataError::BadBase(base));
        }
        for (i, t) in tracks.iter().enumerate() {
            if tracks[..i].contains(t) {
                return Err(AutomataError::DuplicateTrack(t.clone()));
            }
        }
        let n = accepting.len();
        if n == 0 || initial as usize >= n {
            return Err(AutomataError::BadInitial(initial));
        }
        if trans.len() != n * alphabet_size(base, tracks.len()) {
            return Err(AutomataError::NotTotal);
        }
        if let Some(&t) = trans.iter().find(|&&t| t as usize >= n) {
            return Err(AutomataError::StateOutOfRange(t));
        }
        let a = Self::from_parts_unchecked(base, tracks, initial, trans, accepting);
        if let Some(q) = a.pad_violation() {
            return Err(AutomataError::NotPadInvariant(q));
        }
        Ok(a)
    }

    pub(crate) fn from_parts_unchecked(
        base: u32,
        tracks: Vec<String>,
        initial: u32,
        trans: Vec<u32>,
        accepting: Vec<bool>,
    ) -> Self {
        MultiDfa {
            base,
            tracks,
            initial,
            trans,
            accepting,
        }
    }

    /// Zero-track automaton denoting a truth value.
    pub fn constant(base: u32, value: bool) -> Self {
        MultiDfa {
            base,
            tracks: Vec::new(),
            initial: 0,
            trans: vec![0],
            accepting: vec![value],
        }
    }

    /// Automaton accepting every tuple (`value = true`) or none over the
    /// given tracks.
    pub fn universal(base: u32, tracks: Vec<String>, value: bool) -> Self {
        let sigma = alphabet_size(base, tracks.len());
        MultiDfa {
            base,
            tracks,
            initial: 0,
            trans: vec![0; sigma],
            accepting: vec![value],
        }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn tracks(&self) -> &[String] {
        &self.tracks
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet_size(&self) -> usize {
        alphabet_size(self.base, self.tracks.len())
    }

    pub fn is_accepting(&self, q: u32) -> bool {
        self.accepting[q as usize]
    }

    pub fn next(&self, q: u32, symbol: usize) -> u32 {
        self.trans[q as usize * self.alphabet_size() + symbol]
    }

    pub fn transitions(&self) -> &[u32] {
        &self.trans
    }

    pub fn accepting(&self) -> &[bool] {
        &self.accepting
    }

    /// Digit tuple of a symbol, in track order.
    pub fn symbol_digits(&self, symbol: usize) -> Vec<u32> {
        decode(symbol, self.base, self.tracks.len())
    }

    pub fn symbol_of(&self, digits: &[u32]) -> usize {
        encode(digits.iter().copied(), self.base)
    }

    /// For a zero-track automaton, the truth value it denotes.
    pub fn truth(&self) -> Option<bool> {
        self.tracks
            .is_empty()
            .then(|| self.accepting[self.initial as usize])
    }

    /// Membership of a tuple given in track order.
    pub fn accepts(&self, values: &[u64]) -> bool {
        assert_eq!(values.len(), self.tracks.len(), "arity mismatch");
        let k = self.base as u64;
        let mut rest = values.to_vec();
        let mut q = self.initial;
        while rest.iter().any(|&v| v > 0) {
            let mut sym = 0usize;
            for v in rest.iter_mut() {
                sym = sym * k as usize + (*v % k) as usize;
                *v /= k;
            }
            q = self.next(q, sym);
        }
        self.accepting[q as usize]
    }

    /// Membership with values looked up by track name.
    pub fn accepts_named(&self, value_of: impl Fn(&str) -> u64) -> bool {
        let values: Vec<u64> = self.tracks.iter().map(|t| value_of(t)).collect();
        self.accepts(&values)
    }

    /// Runs a word of symbols from the initial state.
    pub fn run(&self, word: &[usize]) -> u32 {
        word.iter().fold(self.initial, |q, &s| self.next(q, s))
    }

    /// First reachable state whose acceptance differs from that of its
    /// all-zero successor, if any.
    pub fn pad_violation(&self) -> Option<u32> {
        let sigma = self.alphabet_size();
        let (order, _) = bfs_order(self.state_count(), sigma, &self.trans, self.initial);
        order
            .into_iter()
            .find(|&q| self.accepting[q as usize] != self.accepting[self.next(q, 0) as usize])
    }

    pub fn is_pad_invariant(&self) -> bool {
        self.pad_violation().is_none()
    }

    /// Hopcroft minimization with canonical breadth-first numbering.
    pub fn minimize(&self) -> MultiDfa {
        let sigma = self.alphabet_size();
        let (order, rank) = bfs_order(self.state_count(), sigma, &self.trans, self.initial);
        let trans = restrict(sigma, &self.trans, &order, &rank);
        let acc: Vec<u32> = order
            .iter()
            .map(|&q| self.accepting[q as usize] as u32)
            .collect();
        let blocks_of = hopcroft(order.len(), sigma, &trans, &acc);
        let blocks = blocks_of.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut q_trans = vec![0u32; blocks * sigma];
        let mut q_acc = vec![false; blocks];
        for q in 0..order.len() {
            let b = blocks_of[q] as usize;
            q_acc[b] = acc[q] == 1;
            for s in 0..sigma {
                q_trans[b * sigma + s] = blocks_of[trans[q * sigma + s] as usize];
            }
        }
        let (order, rank) = bfs_order(blocks, sigma, &q_trans, blocks_of[0]);
        MultiDfa {
            base: self.base,
            tracks: self.tracks.clone(),
            initial: 0,
            trans: restrict(sigma, &q_trans, &order, &rank),
            accepting: order.iter().map(|&b| q_acc[b as usize]).collect(),
        }
    }

    /// Pair construction. Tracks are aligned by name: the result has this
    /// automaton's tracks followed by the other's new tracks.
    pub fn product(&self, other: &MultiDfa, op: BoolOp) -> Result<MultiDfa, AutomataError> {
        if self.base != other.base {
            return Err(AutomataError::BaseMismatch(self.base, other.base));
        }
        let mut tracks = self.tracks.clone();
        for t in &other.tracks {
            if !tracks.contains(t) {
                tracks.push(t.clone());
            }
        }
        let sigma = alphabet_size(self.base, tracks.len());
        let other_pos: Vec<usize> = other
            .tracks
            .iter()
            .map(|t| tracks.iter().position(|u| u == t).unwrap())
            .collect();
        let mut map_a = Vec::with_capacity(sigma);
        let mut map_b = Vec::with_capacity(sigma);
        for s in 0..sigma {
            let digits = decode(s, self.base, tracks.len());
            map_a.push(encode(digits[..self.tracks.len()].iter().copied(), self.base));
            map_b.push(encode(other_pos.iter().map(|&i| digits[i]), self.base));
        }
        let (sa, sb) = (self.alphabet_size(), other.alphabet_size());
        let nb = other.state_count();

        let mut index: HashMap<u64, u32> = HashMap::new();
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        let mut trans: Vec<u32> = Vec::new();
        let key = |a: u32, b: u32| a as u64 * nb as u64 + b as u64;
        index.insert(key(self.initial, other.initial), 0);
        pairs.push((self.initial, other.initial));
        let mut head = 0;
        while head < pairs.len() {
            let (a, b) = pairs[head];
            head += 1;
            let row_a = &self.trans[a as usize * sa..(a as usize + 1) * sa];
            let row_b = &other.trans[b as usize * sb..(b as usize + 1) * sb];
            for s in 0..sigma {
                let (ta, tb) = (row_a[map_a[s]], row_b[map_b[s]]);
                let next_id = pairs.len() as u32;
                let id = *index.entry(key(ta, tb)).or_insert_with(|| {
                    pairs.push((ta, tb));
                    next_id
                });
                trans.push(id);
            }
        }
        let accepting = pairs
            .iter()
            .map(|&(a, b)| op.apply(self.accepting[a as usize], other.accepting[b as usize]))
            .collect();
        Ok(MultiDfa {
            base: self.base,
            tracks,
            initial: 0,
            trans,
            accepting,
        }
        .minimize())
    }

    pub fn and(&self, other: &MultiDfa) -> Result<MultiDfa, AutomataError> {
        self.product(other, BoolOp::And)
    }

    pub fn or(&self, other: &MultiDfa) -> Result<MultiDfa, AutomataError> {
        self.product(other, BoolOp::Or)
    }

    pub fn complement(&self) -> MultiDfa {
        MultiDfa {
            base: self.base,
            tracks: self.tracks.clone(),
            initial: self.initial,
            trans: self.trans.clone(),
            accepting: self.accepting.iter().map(|&a| !a).collect(),
        }
    }

    /// Existential projection of one track: erase it, saturate acceptance
    /// along all-zero paths of the remaining tracks, determinize, minimize.
    pub fn project(&self, track: &str) -> Result<MultiDfa, AutomataError> {
        self.project_capped(track, FORWARD_CAP)
    }

    fn project_capped(&self, track: &str, cap: usize) -> Result<MultiDfa, AutomataError> {
        let r = self
            .tracks
            .iter()
            .position(|t| t == track)
            .ok_or_else(|| AutomataError::UnknownTrack(track.to_string()))?;
        let width = self.tracks.len();
        let k = self.base;
        let sigma = self.alphabet_size();
        let rest: Vec<String> = self
            .tracks
            .iter()
            .filter(|t| *t != track)
            .cloned()
            .collect();
        let sigma_rest = alphabet_size(k, width - 1);
        // Full symbols sharing each remaining-track symbol.
        let mut lifts: Vec<Vec<usize>> = Vec::with_capacity(sigma_rest);
        for s in 0..sigma_rest {
            let digits = decode(s, k, width - 1);
            lifts.push(
                (0..k)
                    .map(|d| {
                        let mut full = digits.clone();
                        full.insert(r, d);
                        encode(full, k)
                    })
                    .collect(),
            );
        }
        // States from which acceptance is reachable reading zeros on the
        // remaining tracks.
        let n = self.state_count();
        let mut reverse: Vec<Vec<u32>> = vec![Vec::new(); n];
        for q in 0..n {
            for &s in &lifts[0] {
                reverse[self.trans[q * sigma + s] as usize].push(q as u32);
            }
        }
        let mut saturated = self.accepting.clone();
        let mut stack: Vec<u32> = (0..n as u32).filter(|&q| saturated[q as usize]).collect();
        while let Some(q) = stack.pop() {
            for &p in &reverse[q as usize] {
                if !saturated[p as usize] {
                    saturated[p as usize] = true;
                    stack.push(p);
                }
            }
        }

        let forward = determinize(n, sigma_rest, vec![self.initial], Some(cap), |q, sym, push| {
            let row = &self.trans[q as usize * sigma..(q as usize + 1) * sigma];
            for &full in &lifts[sym] {
                push(row[full]);
            }
        });
        let (trans, accepting) = match forward {
            Some((subsets, trans)) => {
                let accepting = subsets
                    .iter()
                    .map(|set| set.iter().any(|&q| saturated[q as usize]))
                    .collect();
                (trans, accepting)
            }
            None => self.project_by_reversal(sigma_rest, &lifts, &saturated),
        };
        Ok(MultiDfa {
            base: k,
            tracks: rest,
            initial: 0,
            trans,
            accepting,
        }
        .minimize())
    }

    /// Projection by double reversal: determinize the reversed automaton,
    /// then reverse that DFA and determinize again. The second result is
    /// already minimal, and both steps stay small when the forward subset
    /// construction does not.
    fn project_by_reversal(
        &self,
        sigma_rest: usize,
        lifts: &[Vec<usize>],
        saturated: &[bool],
    ) -> (Vec<u32>, Vec<bool>) {
        let n = self.state_count();
        let sigma = self.alphabet_size();
        let mut edges = Vec::with_capacity(n * sigma);
        for p in 0..n {
            let row = &self.trans[p * sigma..(p + 1) * sigma];
            for (sym, lift) in lifts.iter().enumerate() {
                for &full in lift {
                    edges.push((sym, row[full], p as u32));
                }
            }
        }
        let preds = Preds::new(n, sigma_rest, edges);
        let start: Vec<u32> = (0..n as u32).filter(|&q| saturated[q as usize]).collect();
        let (r_sets, r_trans) = determinize(n, sigma_rest, start, None, |q, sym, push| {
            preds.each(q, sym, push)
        })
        .expect("uncapped");
        let m = r_sets.len();
        let r_accepting: Vec<bool> = r_sets.iter().map(|set| set.contains(&self.initial)).collect();

        let mut edges = Vec::with_capacity(m * sigma_rest);
        for p in 0..m {
            for sym in 0..sigma_rest {
                edges.push((sym, r_trans[p * sigma_rest + sym], p as u32));
            }
        }
        let preds = Preds::new(m, sigma_rest, edges);
        let start: Vec<u32> = (0..m as u32).filter(|&q| r_accepting[q as usize]).collect();
        let (sets, trans) = determinize(m, sigma_rest, start, None, |q, sym, push| {
            preds.each(q, sym, push)
        })
        .expect("uncapped");
        let accepting = sets.iter().map(|set| set.contains(&0)).collect();
        (trans, accepting)
    }

    /// Universal quantification over a track, as `not E not`.
    pub fn project_forall(&self, track: &str) -> Result<MultiDfa, AutomataError> {
        Ok(self.complement().project(track)?.complement())
    }

    /// Simultaneous renaming of tracks; names not in `map` are kept.
    pub fn rename_tracks(&self, map: &BTreeMap<String, String>) -> Result<MultiDfa, AutomataError> {
        let tracks: Vec<String> = self
            .tracks
            .iter()
            .map(|t| map.get(t).cloned().unwrap_or_else(|| t.clone()))
            .collect();
        for (i, t) in tracks.iter().enumerate() {
            if tracks[..i].contains(t) {
                return Err(AutomataError::DuplicateTrack(t.clone()));
            }
        }
        Ok(MultiDfa {
            tracks,
            ..self.clone()
        })
    }

    pub fn rename_track(&self, from: &str, to: &str) -> Result<MultiDfa, AutomataError> {
        if !self.tracks.iter().any(|t| t == from) {
            return Err(AutomataError::UnknownTrack(from.to_string()));
        }
        let mut map = BTreeMap::new();
        map.insert(from.to_string(), to.to_string());
        self.rename_tracks(&map)
    }

    /// Permutes the tracks into the given order (which must be a permutation
    /// of the current tracks) and re-canonicalizes the numbering.
    pub fn reorder_tracks(&self, order: &[String]) -> Result<MultiDfa, AutomataError> {
        if order == self.tracks.as_slice() {
            return Ok(self.clone());
        }
        let mut sorted_a = order.to_vec();
        let mut sorted_b = self.tracks.clone();
        sorted_a.sort();
        sorted_b.sort();
        if sorted_a != sorted_b {
            return Err(AutomataError::TrackMismatch(
                order.to_vec(),
                self.tracks.clone(),
            ));
        }
        let width = order.len();
        let sigma = self.alphabet_size();
        let pos: Vec<usize> = self
            .tracks
            .iter()
            .map(|t| order.iter().position(|u| u == t).unwrap())
            .collect();
        let perm: Vec<usize> = (0..sigma)
            .map(|s| {
                let digits = decode(s, self.base, width);
                encode(pos.iter().map(|&i| digits[i]), self.base)
            })
            .collect();
        let mut trans = vec![0u32; self.trans.len()];
        for q in 0..self.state_count() {
            for s in 0..sigma {
                trans[q * sigma + s] = self.trans[q * sigma + perm[s]];
            }
        }
        Ok(MultiDfa {
            base: self.base,
            tracks: order.to_vec(),
            initial: self.initial,
            trans,
            accepting: self.accepting.clone(),
        }
        .minimize())
    }

    /// Tracks sorted alphabetically.
    pub fn sorted_tracks(&self) -> MultiDfa {
        let mut order = self.tracks.clone();
        order.sort();
        self.reorder_tracks(&order).expect("permutation of own tracks")
    }

    pub fn is_empty(&self) -> bool {
        self.witness_word().is_none()
    }

    /// Lexicographically least among the shortest accepted words.
    pub fn witness_word(&self) -> Option<Vec<usize>> {
        let sigma = self.alphabet_size();
        let n = self.state_count();
        if self.accepting[self.initial as usize] {
            return Some(Vec::new());
        }
        let mut parent: Vec<Option<(u32, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[self.initial as usize] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for s in 0..sigma {
                let t = self.next(q, s);
                if seen[t as usize] {
                    continue;
                }
                seen[t as usize] = true;
                parent[t as usize] = Some((q, s));
                if self.accepting[t as usize] {
                    let mut word = Vec::new();
                    let mut cur = t;
                    while let Some((p, sym)) = parent[cur as usize] {
                        word.push(sym);
                        cur = p;
                    }
                    word.reverse();
                    return Some(word);
                }
                queue.push_back(t);
            }
        }
        None
    }

    /// Decodes a word into one natural number per track.
    pub fn decode_word(&self, word: &[usize]) -> Vec<u64> {
        let mut values = vec![0u64; self.tracks.len()];
        let mut scale = 1u64;
        for &s in word {
            for (v, d) in values.iter_mut().zip(self.symbol_digits(s)) {
                *v += d as u64 * scale;
            }
            scale = scale.saturating_mul(self.base as u64);
        }
        values
    }

    /// Shortest accepted tuple (lexicographically least word), if any.
    pub fn witness(&self) -> Option<Vec<u64>> {
        self.witness_word().map(|w| self.decode_word(&w))
    }

    /// A tuple (in this automaton's track order) on which the two automata
    /// disagree, or `None` if they are equivalent.
    pub fn difference_witness(&self, other: &MultiDfa) -> Result<Option<Vec<u64>>, AutomataError> {
        if self.base != other.base {
            return Err(AutomataError::BaseMismatch(self.base, other.base));
        }
        let other = other.reorder_tracks(&self.tracks)?;
        let xor = self.product(&other, BoolOp::Xor)?;
        Ok(xor.witness())
    }

    /// Language equality, for automata over the same base and track set.
    pub fn equivalent(&self, other: &MultiDfa) -> Result<bool, AutomataError> {
        Ok(self.difference_witness(other)?.is_none())
    }

    /// All accepted tuples whose components are all below `limit`, in
    /// ascending lexicographic order.
    pub fn enumerate(&self, limit: u64) -> Vec<Vec<u64>> {
        if limit == 0 {
            return Vec::new();
        }
        let k = self.base as u64;
        let mut len = 0usize;
        let mut span = 1u64;
        while span < limit {
            span = span.saturating_mul(k);
            len += 1;
        }
        let sigma = self.alphabet_size();
        let n = self.state_count();
        // live[r][q]: acceptance reachable from q within r symbols.
        let mut live: Vec<Vec<bool>> = vec![self.accepting.clone()];
        for r in 1..=len {
            let prev = &live[r - 1];
            let row: Vec<bool> = (0..n)
                .map(|q| prev[q] || (0..sigma).any(|s| prev[self.trans[q * sigma + s] as usize]))
                .collect();
            live.push(row);
        }
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(len);
        self.enumerate_rec(self.initial, len, &live, &mut word, limit, &mut out);
        out.sort();
        out
    }

    fn enumerate_rec(
        &self,
        q: u32,
        remaining: usize,
        live: &[Vec<bool>],
        word: &mut Vec<usize>,
        limit: u64,
        out: &mut Vec<Vec<u64>>,
    ) {
        if !live[remaining][q as usize] {
            return;
        }
        if remaining == 0 {
            let values = self.decode_word(word);
            if values.iter().all(|&v| v < limit) {
                out.push(values);
            }
            return;
        }
        for s in 0..self.alphabet_size() {
            word.push(s);
            self.enumerate_rec(self.next(q, s), remaining - 1, live, word, limit, out);
            word.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{linear, LinRel};

    fn var(name: &str) -> Vec<String> {
        vec![name.to_string()]
    }

    /// Base-2 automaton for the even numbers.
    fn evens() -> MultiDfa {
        // state 0: nothing read (0 is even), 1: first digit 0, 2: first digit 1.
        MultiDfa::new(2, var("n"), 0, vec![1, 2, 1, 1, 2, 2], vec![true, true, false]).unwrap()
    }

    fn lin(base: u32, coeffs: &[(&str, i64)], c: i64, rel: LinRel) -> MultiDfa {
        let coeffs: Vec<(String, i64)> = coeffs.iter().map(|(n, c)| (n.to_string(), *c)).collect();
        linear(base, &coeffs, c, rel).unwrap()
    }

    #[test]
    fn new_rejects_pad_violations() {
        // Accepts exactly the empty word: "0" would be rejected.
        let bad = MultiDfa::new(2, var("n"), 0, vec![1, 1, 1, 1], vec![true, false]);
        assert!(matches!(bad, Err(AutomataError::NotPadInvariant(0))));
        let dup = MultiDfa::new(2, vec!["x".into(), "x".into()], 0, vec![0; 4], vec![true]);
        assert!(matches!(dup, Err(AutomataError::DuplicateTrack(_))));
    }

    #[test]
    fn projection_by_reversal_agrees() {
        let sum = lin(3, &[("x", 1), ("y", 2), ("z", -1)], 0, LinRel::Eq);
        let below = lin(3, &[("x", 1), ("z", -1)], 4, LinRel::Le);
        let a = sum.and(&below).unwrap();
        for t in ["x", "y", "z"] {
            let forward = a.project(t).unwrap();
            let reversed = a.project_capped(t, 0).unwrap();
            assert_eq!(forward, reversed, "projecting {t}");
        }
        let e = evens().and(&lin(2, &[("n", 1), ("m", -3)], 0, LinRel::Eq)).unwrap();
        assert_eq!(e.project("n").unwrap(), e.project_capped("n", 0).unwrap());
    }

    #[test]
    fn product_laws() {
        let e = evens();
        assert!(e.and(&e).unwrap().equivalent(&e).unwrap());
        let odd = e.complement();
        assert!(e.and(&odd).unwrap().is_empty());
        assert!(e.or(&odd).unwrap().complement().is_empty());
        let m = e.complement().complement();
        assert!(m.equivalent(&e).unwrap());
        assert!(matches!(
            e.product(&MultiDfa::universal(3, var("n"), true), BoolOp::And),
            Err(AutomataError::BaseMismatch(2, 3))
        ));
    }

    #[test]
    fn complement_examples() {
        let empty = MultiDfa::universal(2, var("n"), false);
        let all = empty.complement();
        assert!((0..50).all(|n| all.accepts(&[n])));
        // {n >= 1} complemented is {0}.
        let pos = lin(2, &[("n", -1)], 1, LinRel::Le);
        let zero = pos.complement();
        assert_eq!(zero.enumerate(100), vec![vec![0]]);
    }

    #[test]
    fn projection_examples() {
        // x + y = 3, exists y -> x <= 3.
        let sum = lin(2, &[("x", 1), ("y", 1)], -3, LinRel::Eq);
        let px = sum.project("y").unwrap();
        assert_eq!(px.tracks(), &["x".to_string()]);
        let xs: Vec<u64> = (0..20).filter(|&x| px.accepts(&[x])).collect();
        assert_eq!(xs, vec![0, 1, 2, 3]);
        // x = y, exists y -> everything.
        let eq = lin(3, &[("x", 1), ("y", -1)], 0, LinRel::Eq);
        let all = eq.project("y").unwrap();
        assert!((0..100).all(|x| all.accepts(&[x])));
        assert!(matches!(eq.project("z"), Err(AutomataError::UnknownTrack(_))));
    }

    #[test]
    fn projection_needs_padding() {
        // y = 4x in base 2: for x = 1 the witness y = 4 is longer than x.
        let a = lin(2, &[("x", 4), ("y", -1)], 0, LinRel::Eq);
        let px = a.project("y").unwrap();
        assert!((0..64).all(|x| px.accepts(&[x])));
        let py = a.project("x").unwrap();
        let ys: Vec<u64> = (0..40).filter(|&y| py.accepts(&[y])).collect();
        assert_eq!(ys, vec![0, 4, 8, 12, 16, 20, 24, 28, 32, 36]);
        assert!(px.is_pad_invariant() && py.is_pad_invariant());
    }

    #[test]
    fn projection_to_truth_value() {
        let none = lin(2, &[("n", 1)], 1, LinRel::Eq);
        assert_eq!(none.project("n").unwrap().truth(), Some(false));
        let some = lin(2, &[("n", 1)], -5, LinRel::Eq);
        assert_eq!(some.project("n").unwrap().truth(), Some(true));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(MultiDfa::universal(2, var("n"), false).witness(), None);
        let sum0 = lin(2, &[("x", 1), ("y", 1)], 0, LinRel::Eq);
        assert_eq!(sum0.witness(), Some(vec![0, 0]));
        let five = lin(2, &[("x", 1), ("y", 1)], -5, LinRel::Eq);
        // Shortest words have length 2; least symbol sequence first.
        let w = five.witness().unwrap();
        assert_eq!(w[0] + w[1], 5);
        assert_eq!(w, vec![2, 3]);
    }

    #[test]
    fn reorder_and_rename() {
        let le = lin(5, &[("x", 1), ("y", -1)], 0, LinRel::Le);
        let swapped = le.reorder_tracks(&["y".to_string(), "x".to_string()]).unwrap();
        assert!(le.accepts(&[3, 5]) && !le.accepts(&[5, 3]));
        assert!(swapped.accepts(&[5, 3]) && !swapped.accepts(&[3, 5]));
        assert!(le.equivalent(&swapped).unwrap());
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), "y".to_string());
        map.insert("y".to_string(), "x".to_string());
        let renamed = le.rename_tracks(&map).unwrap();
        assert_eq!(renamed.tracks(), &["y".to_string(), "x".to_string()]);
        assert!(renamed.accepts_named(|t| if t == "y" { 3 } else { 5 }));
        assert!(!renamed.accepts_named(|t| if t == "y" { 5 } else { 3 }));
        assert!(le.rename_track("x", "y").is_err());
    }

    #[test]
    fn enumerate_examples() {
        let e = evens();
        let got: Vec<u64> = e.enumerate(12).into_iter().map(|v| v[0]).collect();
        assert_eq!(got, vec![0, 2, 4, 6, 8, 10]);
        assert!(MultiDfa::universal(2, var("n"), false).enumerate(100).is_empty());
        let sum = lin(3, &[("x", 1), ("y", 1)], -2, LinRel::Eq);
        assert_eq!(
            sum.enumerate(10),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        assert_eq!(MultiDfa::constant(2, true).enumerate(5), vec![Vec::<u64>::new()]);
    }
}
