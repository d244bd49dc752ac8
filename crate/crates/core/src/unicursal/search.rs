//! Hamiltonian cycle search on Cayley graphs.
//!
//! Depth-first search over edge commitments. Each vertex keeps bitmasks of
//! its remaining out- and in-edges; a vertex left with one option has that
//! edge committed, committed edges are joined into path fragments, and the
//! edge that would close a fragment early is removed. Each node also checks
//! that the remaining edges still reach every vertex from the identity and
//! back.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::cayley::CayleyGraph;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Node expansion limit.
    pub budget: u64,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> SearchOptions {
        SearchOptions {
            budget,
            ..SearchOptions::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamiltonianOutcome {
    /// Generator indices `t_1..t_|G|` of a cycle through the identity.
    Found(Vec<usize>),
    /// The search space was exhausted.
    None,
    /// The budget ran out first.
    Exhausted,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub outcome: HamiltonianOutcome,
    pub expansions: u64,
    pub elapsed: Duration,
}

const NONE: u8 = u8::MAX;

struct Reduced {
    n: usize,
    k: usize,
    succ: Vec<u32>,
    pred: Vec<u32>,
    // reduced generator index -> original index
    label: Vec<usize>,
}

impl Reduced {
    fn new(g: &CayleyGraph) -> Result<Reduced> {
        let mut label: Vec<usize> = Vec::new();
        for (t, p) in g.gens().iter().enumerate() {
            if p.is_identity() || label.iter().any(|&u| g.gens()[u] == *p) {
                continue;
            }
            label.push(t);
        }
        if label.len() > 64 {
            return Err(Error::Resource("at most 64 distinct generators are supported".into()));
        }
        let n = g.vertex_count();
        let k = label.len();
        let mut succ = vec![0u32; n * k];
        let mut pred = vec![0u32; n * k];
        for v in 0..n {
            for (r, &t) in label.iter().enumerate() {
                succ[v * k + r] = g.succ(v, t) as u32;
                pred[v * k + r] = g.pred(v, t) as u32;
            }
        }
        Ok(Reduced {
            n,
            k,
            succ,
            pred,
            label,
        })
    }

    #[inline]
    fn succ(&self, v: usize, t: usize) -> usize {
        self.succ[v * self.k + t] as usize
    }

    #[inline]
    fn pred(&self, w: usize, t: usize) -> usize {
        self.pred[w * self.k + t] as usize
    }
}

#[derive(Clone, Copy)]
enum Undo {
    OutOpts(u32, u64),
    InOpts(u32, u64),
    OutChoice(u32),
    InChoice(u32),
    End(u32, u32, u32),
    Committed,
}

#[derive(Clone)]
struct State {
    out_opts: Vec<u64>,
    in_opts: Vec<u64>,
    out_choice: Vec<u8>,
    in_choice: Vec<u8>,
    other_end: Vec<u32>,
    plen: Vec<u32>,
    committed: usize,
    trail: Vec<Undo>,
    queue: Vec<u32>,
    mark: Vec<u32>,
    stamp: u32,
    stack: Vec<u32>,
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(t)
        }
    })
}

impl State {
    fn new(g: &Reduced) -> State {
        let full = if g.k == 64 { u64::MAX } else { (1u64 << g.k) - 1 };
        State {
            out_opts: vec![full; g.n],
            in_opts: vec![full; g.n],
            out_choice: vec![NONE; g.n],
            in_choice: vec![NONE; g.n],
            other_end: (0..g.n as u32).collect(),
            plen: vec![1; g.n],
            committed: 0,
            trail: Vec::new(),
            queue: (0..g.n as u32).collect(),
            mark: vec![0; g.n],
            stamp: 0,
            stack: Vec::new(),
        }
    }

    fn undo(&mut self, to: usize) {
        while self.trail.len() > to {
            match self.trail.pop().expect("trail is longer than the mark") {
                Undo::OutOpts(v, m) => self.out_opts[v as usize] = m,
                Undo::InOpts(v, m) => self.in_opts[v as usize] = m,
                Undo::OutChoice(v) => self.out_choice[v as usize] = NONE,
                Undo::InChoice(v) => self.in_choice[v as usize] = NONE,
                Undo::End(v, e, l) => {
                    self.other_end[v as usize] = e;
                    self.plen[v as usize] = l;
                }
                Undo::Committed => self.committed -= 1,
            }
        }
        self.queue.clear();
    }

    fn set_out(&mut self, v: usize, m: u64) {
        self.trail.push(Undo::OutOpts(v as u32, self.out_opts[v]));
        self.out_opts[v] = m;
    }

    fn set_in(&mut self, v: usize, m: u64) {
        self.trail.push(Undo::InOpts(v as u32, self.in_opts[v]));
        self.in_opts[v] = m;
    }

    fn set_end(&mut self, v: usize, e: usize, l: usize) {
        self.trail.push(Undo::End(v as u32, self.other_end[v], self.plen[v]));
        self.other_end[v] = e as u32;
        self.plen[v] = l as u32;
    }

    fn remove(&mut self, g: &Reduced, u: usize, t: usize) {
        let bit = 1u64 << t;
        if self.out_opts[u] & bit == 0 {
            return;
        }
        let w = g.succ(u, t);
        self.set_out(u, self.out_opts[u] & !bit);
        self.set_in(w, self.in_opts[w] & !bit);
        self.queue.push(u as u32);
        self.queue.push(w as u32);
    }

    fn commit(&mut self, g: &Reduced, u: usize, t: usize) -> bool {
        let w = g.succ(u, t);
        let bit = 1u64 << t;
        if self.out_choice[u] != NONE || self.in_choice[w] != NONE || self.out_opts[u] & bit == 0 {
            return false;
        }
        let s = self.other_end[u] as usize;
        let e = self.other_end[w] as usize;
        let closing = s == w;
        if closing && self.plen[u] as usize != g.n {
            return false;
        }
        self.out_choice[u] = t as u8;
        self.trail.push(Undo::OutChoice(u as u32));
        self.in_choice[w] = t as u8;
        self.trail.push(Undo::InChoice(w as u32));
        self.committed += 1;
        self.trail.push(Undo::Committed);
        self.set_out(u, self.out_opts[u] & !bit);
        self.set_in(w, self.in_opts[w] & !bit);
        for b in bits(self.out_opts[u]) {
            self.remove(g, u, b);
        }
        for b in bits(self.in_opts[w]) {
            let p = g.pred(w, b);
            self.remove(g, p, b);
        }
        if closing {
            return true;
        }
        let len = (self.plen[u] + self.plen[w]) as usize;
        self.set_end(s, e, len);
        self.set_end(e, s, len);
        if len == g.n {
            match bits(self.out_opts[e]).find(|&b| g.succ(e, b) == s) {
                Some(b) => self.commit(g, e, b),
                None => false,
            }
        } else {
            for b in bits(self.out_opts[e]) {
                if g.succ(e, b) == s {
                    self.remove(g, e, b);
                }
            }
            true
        }
    }

    fn propagate(&mut self, g: &Reduced) -> bool {
        while let Some(v) = self.queue.pop() {
            let v = v as usize;
            if self.out_choice[v] == NONE {
                match self.out_opts[v].count_ones() {
                    0 => return false,
                    1 => {
                        let t = self.out_opts[v].trailing_zeros() as usize;
                        if !self.commit(g, v, t) {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
            if self.in_choice[v] == NONE {
                match self.in_opts[v].count_ones() {
                    0 => return false,
                    1 => {
                        let t = self.in_opts[v].trailing_zeros() as usize;
                        let u = g.pred(v, t);
                        if !self.commit(g, u, t) {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn out_mask(&self, v: usize) -> u64 {
        let c = self.out_choice[v];
        self.out_opts[v] | if c == NONE { 0 } else { 1u64 << c }
    }

    fn in_mask(&self, v: usize) -> u64 {
        let c = self.in_choice[v];
        self.in_opts[v] | if c == NONE { 0 } else { 1u64 << c }
    }

    /// Every vertex reachable from the identity, and the identity from
    /// every vertex, along committed or remaining edges.
    fn connected(&mut self, g: &Reduced) -> bool {
        for forward in [true, false] {
            self.stamp = self.stamp.wrapping_add(1);
            if self.stamp == 0 {
                self.mark.iter_mut().for_each(|m| *m = 0);
                self.stamp = 1;
            }
            let stamp = self.stamp;
            self.mark[0] = stamp;
            self.stack.clear();
            self.stack.push(0);
            let mut count = 1;
            while let Some(v) = self.stack.pop() {
                let v = v as usize;
                let mask = if forward { self.out_mask(v) } else { self.in_mask(v) };
                for b in bits(mask) {
                    let w = if forward { g.succ(v, b) } else { g.pred(v, b) };
                    if self.mark[w] != stamp {
                        self.mark[w] = stamp;
                        count += 1;
                        self.stack.push(w as u32);
                    }
                }
            }
            if count != g.n {
                return false;
            }
        }
        true
    }

    fn tail(&self, g: &Reduced) -> usize {
        let mut v = 0;
        while self.out_choice[v] != NONE {
            v = g.succ(v, self.out_choice[v] as usize);
        }
        v
    }

    fn ordered_options(&self, g: &Reduced, v: usize) -> Vec<usize> {
        let mut opts: Vec<usize> = bits(self.out_opts[v]).collect();
        opts.sort_by_key(|&t| (self.out_opts[g.succ(v, t)].count_ones(), t));
        opts
    }

    fn word(&self, g: &Reduced) -> Vec<usize> {
        let mut word = Vec::with_capacity(g.n);
        let mut v = 0;
        for _ in 0..g.n {
            let t = self.out_choice[v] as usize;
            word.push(g.label[t]);
            v = g.succ(v, t);
        }
        word
    }
}

struct Shared {
    expansions: AtomicU64,
    budget: u64,
    stop: AtomicBool,
    out_of_budget: AtomicBool,
    found: Mutex<Option<Vec<usize>>>,
}

#[derive(PartialEq, Eq)]
enum Flow {
    Found,
    Fail,
    Stop,
}

fn dfs(g: &Reduced, s: &mut State, shared: &Shared) -> Flow {
    if s.committed == g.n {
        return Flow::Found;
    }
    if shared.stop.load(Ordering::Relaxed) {
        return Flow::Stop;
    }
    if shared.expansions.fetch_add(1, Ordering::Relaxed) >= shared.budget {
        shared.out_of_budget.store(true, Ordering::Relaxed);
        return Flow::Stop;
    }
    if !s.connected(g) {
        return Flow::Fail;
    }
    let tail = s.tail(g);
    let mark = s.trail.len();
    for t in s.ordered_options(g, tail) {
        if s.out_opts[tail] & (1u64 << t) == 0 {
            continue;
        }
        let inner = s.trail.len();
        if s.commit(g, tail, t) && s.propagate(g) {
            match dfs(g, s, shared) {
                Flow::Fail => {}
                other => return other,
            }
        }
        s.undo(inner);
        s.remove(g, tail, t);
        if !s.propagate(g) {
            break;
        }
        if s.out_choice[tail] != NONE {
            match dfs(g, s, shared) {
                Flow::Fail => break,
                other => return other,
            }
        }
    }
    s.undo(mark);
    Flow::Fail
}

/// Children of a search node, each a self-contained subproblem.
fn split(g: &Reduced, mut s: State) -> Vec<State> {
    let mut out = Vec::new();
    if s.committed == g.n {
        out.push(s);
        return out;
    }
    let tail = s.tail(g);
    for t in s.ordered_options(g, tail) {
        if s.out_opts[tail] & (1u64 << t) == 0 {
            continue;
        }
        let mut child = s.clone();
        if child.commit(g, tail, t) && child.propagate(g) {
            child.trail.clear();
            out.push(child);
        }
        s.remove(g, tail, t);
        if !s.propagate(g) {
            return out;
        }
        if s.out_choice[tail] != NONE {
            s.trail.clear();
            out.push(s);
            return out;
        }
    }
    out
}

/// Searches for a Hamiltonian cycle, i.e. a unicursal ordering of the
/// group by the generators.
pub fn hamiltonian_cycle(graph: &CayleyGraph, opts: &SearchOptions) -> Result<SearchReport> {
    let started = Instant::now();
    let g = Reduced::new(graph)?;
    let done = |outcome, expansions| SearchReport {
        outcome,
        expansions,
        elapsed: started.elapsed(),
    };
    if g.n == 1 {
        let loop_gen = graph.gens().iter().position(|p| p.is_identity());
        return Ok(done(
            loop_gen.map_or(HamiltonianOutcome::None, |t| HamiltonianOutcome::Found(vec![t])),
            1,
        ));
    }
    if g.k == 0 {
        return Ok(done(HamiltonianOutcome::None, 1));
    }
    let shared = Shared {
        expansions: AtomicU64::new(0),
        budget: opts.budget.max(1),
        stop: AtomicBool::new(false),
        out_of_budget: AtomicBool::new(false),
        found: Mutex::new(None),
    };
    let mut root = State::new(&g);
    if !root.propagate(&g) {
        return Ok(done(HamiltonianOutcome::None, 1));
    }
    root.trail.clear();

    if opts.workers <= 1 {
        if dfs(&g, &mut root, &shared) == Flow::Found {
            *shared.found.lock().expect("no poisoning") = Some(root.word(&g));
        }
    } else {
        let mut frontier = vec![root];
        for _ in 0..8 {
            if frontier.len() >= opts.workers * 4 || frontier.iter().any(|s| s.committed == g.n) {
                break;
            }
            frontier = frontier.into_iter().flat_map(|s| split(&g, s)).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::Resource(e.to_string()))?;
        pool.install(|| {
            frontier.into_par_iter().for_each(|mut s| {
                if dfs(&g, &mut s, &shared) == Flow::Found {
                    let mut slot = shared.found.lock().expect("no poisoning");
                    if slot.is_none() {
                        *slot = Some(s.word(&g));
                    }
                    shared.stop.store(true, Ordering::Relaxed);
                }
            });
        });
    }
    let expansions = shared.expansions.load(Ordering::Relaxed).min(shared.budget);
    let found = shared.found.into_inner().expect("no poisoning");
    let outcome = match found {
        Some(word) => HamiltonianOutcome::Found(word),
        None if shared.out_of_budget.load(Ordering::Relaxed) => HamiltonianOutcome::Exhausted,
        None => HamiltonianOutcome::None,
    };
    Ok(done(outcome, expansions))
}
