//! Branch and bound for the longest simple cycle through the identity.
//!
//! Edges may carry footprints: sets of tokens that an edge consumes, with
//! a cycle admissible only when its footprints are disjoint. Without
//! footprints each edge consumes its destination vertex. Lead-head graphs
//! use the rows of each lead as footprints, so admissible cycles are
//! exactly the true compositions.

use std::collections::HashMap;
use std::hash::Hash;
use std::time::{Duration, Instant};

use super::cayley::{CayleyGraph, Chain};
use super::search::DEFAULT_BUDGET;

/// Token lists per edge, indexed by `v * degree + t`.
#[derive(Clone, Debug)]
pub struct Footprints {
    degree: usize,
    tokens: Vec<Vec<u32>>,
    token_count: usize,
}

impl Footprints {
    /// Each edge consumes its destination.
    pub fn vertices(graph: &CayleyGraph) -> Footprints {
        let k = graph.degree();
        let tokens = (0..graph.vertex_count() * k)
            .map(|e| vec![graph.succ(e / k, e % k) as u32])
            .collect();
        Footprints {
            degree: k,
            tokens,
            token_count: graph.vertex_count(),
        }
    }

    /// Interns arbitrary keys produced by `f(v, t)` into dense tokens.
    pub fn from_fn<K, F>(graph: &CayleyGraph, mut f: F) -> Footprints
    where
        K: Hash + Eq,
        F: FnMut(usize, usize) -> Vec<K>,
    {
        let k = graph.degree();
        let mut ids: HashMap<K, u32> = HashMap::new();
        let mut tokens = Vec::with_capacity(graph.vertex_count() * k);
        for v in 0..graph.vertex_count() {
            for t in 0..k {
                let list = f(v, t)
                    .into_iter()
                    .map(|key| {
                        let next = ids.len() as u32;
                        *ids.entry(key).or_insert(next)
                    })
                    .collect();
                tokens.push(list);
            }
        }
        Footprints {
            degree: k,
            tokens,
            token_count: ids.len(),
        }
    }

    pub fn edge(&self, v: usize, t: usize) -> &[u32] {
        &self.tokens[v * self.degree + t]
    }

    pub fn token_count(&self) -> usize {
        self.token_count
    }

    fn min_len(&self) -> usize {
        self.tokens.iter().map(|t| t.len()).min().unwrap_or(1).max(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongestOptions {
    pub budget: u64,
    /// Stop as soon as a cycle of this length is found.
    pub target: Option<usize>,
}

impl Default for LongestOptions {
    fn default() -> Self {
        LongestOptions {
            budget: DEFAULT_BUDGET,
            target: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LongestReport {
    pub best: Option<Chain>,
    /// The search completed, or `best` met the root upper bound.
    pub optimal: bool,
    pub upper_bound: usize,
    pub expansions: u64,
    pub elapsed: Duration,
}

impl LongestReport {
    pub fn length(&self) -> usize {
        self.best.as_ref().map_or(0, |c| c.len())
    }
}

struct Search<'a> {
    g: &'a CayleyGraph,
    fp: &'a Footprints,
    min_len: usize,
    used: Vec<bool>,
    visited: Vec<bool>,
    path_v: Vec<usize>,
    path_t: Vec<usize>,
    best: Vec<usize>,
    best_v: Vec<usize>,
    stop_at: usize,
    expansions: u64,
    budget: u64,
    out_of_budget: bool,
    // scratch
    seen_v: Vec<u32>,
    seen_tok: Vec<u32>,
    stamp: u32,
    stack: Vec<usize>,
}

impl Search<'_> {
    fn admissible(&self, v: usize, t: usize) -> bool {
        let w = self.g.succ(v, t);
        (w == 0 || !self.visited[w]) && self.fp.edge(v, t).iter().all(|&x| !self.used[x as usize])
    }

    fn claim(&mut self, v: usize, t: usize, on: bool) {
        for &x in self.fp.edge(v, t) {
            self.used[x as usize] = on;
        }
    }

    /// Upper bound on the edges still addable from `v`, or `None` when the
    /// identity can no longer be reached.
    fn remaining_bound(&mut self, v: usize) -> Option<usize> {
        self.stamp += 1;
        let stamp = self.stamp;
        self.stack.clear();
        self.stack.push(v);
        self.seen_v[v] = stamp;
        let mut reach = 0usize;
        let mut toks = 0usize;
        let mut can_close = false;
        while let Some(x) = self.stack.pop() {
            for t in 0..self.g.degree() {
                if !self.admissible(x, t) {
                    continue;
                }
                for &tok in self.fp.edge(x, t) {
                    if self.seen_tok[tok as usize] != stamp {
                        self.seen_tok[tok as usize] = stamp;
                        toks += 1;
                    }
                }
                let w = self.g.succ(x, t);
                if w == 0 {
                    can_close = true;
                } else if self.seen_v[w] != stamp {
                    self.seen_v[w] = stamp;
                    reach += 1;
                    self.stack.push(w);
                }
            }
        }
        can_close.then(|| (reach + 1).min(toks / self.min_len))
    }

    fn record(&mut self) {
        if self.path_t.len() > self.best.len() {
            self.best = self.path_t.clone();
            self.best_v = self.path_v.clone();
        }
    }

    fn done(&self) -> bool {
        self.out_of_budget || self.best.len() >= self.stop_at
    }

    fn dfs(&mut self, v: usize) {
        if self.done() {
            return;
        }
        if self.expansions >= self.budget {
            self.out_of_budget = true;
            return;
        }
        self.expansions += 1;
        let depth = self.path_t.len();
        match self.remaining_bound(v) {
            Some(b) if depth + b > self.best.len() => {}
            _ => return,
        }
        let mut moves: Vec<(usize, usize)> = Vec::with_capacity(self.g.degree());
        for t in 0..self.g.degree() {
            if !self.admissible(v, t) {
                continue;
            }
            let w = self.g.succ(v, t);
            if w == 0 {
                self.path_t.push(t);
                self.record();
                self.path_t.pop();
                if self.done() {
                    return;
                }
            } else {
                let onward = (0..self.g.degree())
                    .filter(|&u| {
                        let x = self.g.succ(w, u);
                        x == 0 || !self.visited[x]
                    })
                    .count();
                moves.push((onward, t));
            }
        }
        moves.sort();
        for (_, t) in moves {
            let w = self.g.succ(v, t);
            self.claim(v, t, true);
            self.visited[w] = true;
            self.path_t.push(t);
            self.path_v.push(w);
            self.dfs(w);
            self.path_v.pop();
            self.path_t.pop();
            self.visited[w] = false;
            self.claim(v, t, false);
            if self.done() {
                return;
            }
        }
    }

    /// Greedy walks, one per generator preference, as a starting bound.
    fn greedy(&mut self) {
        let k = self.g.degree();
        for pref in 0..k {
            let mut v = 0;
            loop {
                let order = (0..k).map(|i| (i + pref) % k);
                let mut next = None;
                for t in order {
                    if !self.admissible(v, t) {
                        continue;
                    }
                    if self.g.succ(v, t) == 0 {
                        self.path_t.push(t);
                        self.record();
                        self.path_t.pop();
                    } else if next.is_none() {
                        next = Some(t);
                    }
                }
                let Some(t) = next else { break };
                let w = self.g.succ(v, t);
                self.claim(v, t, true);
                self.visited[w] = true;
                self.path_t.push(t);
                self.path_v.push(w);
                v = w;
            }
            while let Some(t) = self.path_t.pop() {
                let w = self.path_v.pop().expect("paths stay aligned");
                let u = *self.path_v.last().unwrap_or(&0);
                self.visited[w] = false;
                self.claim(u, t, false);
            }
            self.path_v.clear();
        }
    }
}

/// Longest admissible cycle through the identity. With `footprints`
/// absent each vertex is used at most once.
pub fn longest_cycle(graph: &CayleyGraph, footprints: Option<&Footprints>, opts: &LongestOptions) -> LongestReport {
    let started = Instant::now();
    let owned;
    let fp = match footprints {
        Some(f) => f,
        None => {
            owned = Footprints::vertices(graph);
            &owned
        }
    };
    let n = graph.vertex_count();
    let mut s = Search {
        g: graph,
        fp,
        min_len: fp.min_len(),
        used: vec![false; fp.token_count()],
        visited: vec![false; n],
        path_v: Vec::new(),
        path_t: Vec::new(),
        best: Vec::new(),
        best_v: Vec::new(),
        stop_at: usize::MAX,
        expansions: 0,
        budget: opts.budget.max(1),
        out_of_budget: false,
        seen_v: vec![0; n],
        seen_tok: vec![0; fp.token_count()],
        stamp: 0,
        stack: Vec::new(),
    };
    s.visited[0] = true;
    let upper = s.remaining_bound(0).unwrap_or(0).min(n);
    s.stop_at = opts.target.unwrap_or(upper).min(upper);
    if upper > 0 {
        s.greedy();
        s.dfs(0);
    }
    let best = (!s.best.is_empty()).then(|| {
        let mut elements = vec![0];
        elements.extend_from_slice(&s.best_v);
        Chain {
            elements,
            labels: s.best.clone(),
        }
    });
    let complete = !s.out_of_budget && s.best.len() < s.stop_at;
    let length = s.best.len();
    LongestReport {
        best,
        optimal: complete || length == upper,
        upper_bound: upper,
        expansions: s.expansions,
        elapsed: started.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_cycles;
    use crate::unicursal::group::{closure, GroupTable};

    fn graph(group: GroupTable, gens: &[&str]) -> CayleyGraph {
        let n = group.degree();
        CayleyGraph::new(group, gens.iter().map(|s| parse_cycles(s, n).unwrap()).collect()).unwrap()
    }

    /// Exhaustive longest cycle through vertex 0 by plain enumeration.
    fn brute(g: &CayleyGraph) -> usize {
        fn go(g: &CayleyGraph, v: usize, len: usize, seen: &mut [bool], best: &mut usize) {
            for t in 0..g.degree() {
                let w = g.succ(v, t);
                if w == 0 {
                    *best = (*best).max(len + 1);
                } else if !seen[w] {
                    seen[w] = true;
                    go(g, w, len + 1, seen, best);
                    seen[w] = false;
                }
            }
        }
        let mut seen = vec![false; g.vertex_count()];
        seen[0] = true;
        let mut best = 0;
        go(g, 0, 0, &mut seen, &mut best);
        best
    }

    #[test]
    fn small_cases() {
        let s3 = graph(GroupTable::symmetric(3).unwrap(), &["(1 2)", "(2 3)"]);
        let r = longest_cycle(&s3, None, &LongestOptions::default());
        assert_eq!((r.length(), r.optimal), (6, true));
        assert!(r.best.unwrap().is_valid(&s3));
        let c3 = graph(
            closure(&[parse_cycles("(1 2 3)", 3).unwrap()], 5).unwrap(),
            &["(1 2 3)"],
        );
        assert_eq!(longest_cycle(&c3, None, &LongestOptions::default()).length(), 3);
    }

    #[test]
    fn matches_enumeration_on_s4() {
        let s4 = GroupTable::symmetric(4).unwrap();
        for gens in [["(3 4)", "(1 2 3)"], ["(1 2)", "(1 2 3 4)"], ["(1 2 3)", "(2 3 4)"]] {
            let g = graph(closure(&gens.map(|s| parse_cycles(s, 4).unwrap()), 100).unwrap(), &gens);
            let r = longest_cycle(&g, None, &LongestOptions::default());
            assert!(r.optimal);
            assert_eq!(r.length(), brute(&g), "{gens:?}");
            assert!(r.best.unwrap().is_valid(&g));
        }
        let _ = s4;
    }

    #[test]
    fn footprints_restrict_cycles() {
        // edges into vertices 2.. share one token, so at most one such
        // edge fits; the hexagon then only admits its 2-cycles
        let s3 = graph(GroupTable::symmetric(3).unwrap(), &["(1 2)", "(2 3)"]);
        let fp = Footprints::from_fn(&s3, |v, t| {
            let w = s3.succ(v, t);
            vec![w.min(2)]
        });
        let r = longest_cycle(&s3, Some(&fp), &LongestOptions::default());
        assert!(r.optimal);
        assert_eq!(r.length(), 2);
    }

    #[test]
    fn target_and_budget() {
        let s4 = graph(GroupTable::symmetric(4).unwrap(), &["(3 4)", "(1 2 3)"]);
        let r = longest_cycle(
            &s4,
            None,
            &LongestOptions {
                budget: DEFAULT_BUDGET,
                target: Some(5),
            },
        );
        assert!(r.length() >= 5);
        let r = longest_cycle(
            &s4,
            None,
            &LongestOptions {
                budget: 1,
                target: None,
            },
        );
        assert!(!r.optimal || r.length() == r.upper_bound);
    }

    #[test]
    fn raw_a5_without_footprints() {
        // Plain Bob Minor lead heads with rows ignored: longer than the
        // order-minus-generator-order bound of 57 for the second pair.
        let p = parse_cycles("(2 4 6 5 3)", 6).unwrap();
        for (b, want) in [("(4 6 5)", 57), ("(2 3 4)", 58)] {
            let b = parse_cycles(b, 6).unwrap();
            let g = CayleyGraph::new(closure(&[p.clone(), b.clone()], 100).unwrap(), vec![p.clone(), b]).unwrap();
            let r = longest_cycle(&g, None, &LongestOptions::default());
            assert!(r.optimal);
            assert_eq!(r.length(), want);
            assert!(r.best.unwrap().is_valid(&g));
        }
    }
}
