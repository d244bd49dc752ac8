//! Q-sets and the chain rearrangement argument.
//!
//! For generators `P`, `B` put `gamma = B P^-1` and `C = <gamma>`. A chain
//! cover assigns each element one successor, `x P` or `x B`. Within a left
//! coset `xC` the elements `e_i = x gamma^i` satisfy `e_i P = e_(i-1) B`, so
//! in any cover a coset is acted on entirely by `P` or entirely by `B`,
//! and swapping which of the two acts on a coset permutes the segments
//! leaving it. The chain count then moves by an amount of parity
//! `|C| - 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Perm;

use super::cayley::{CayleyGraph, Chain};
use super::group::{closure_of, GroupTable};

pub const P: usize = 0;
pub const B: usize = 1;

/// Left cosets of `C = <gamma>`, each listed as `x gamma^1, ..., x gamma^c`
/// (the last member being the representative `x`).
#[derive(Clone, Debug)]
pub struct Qsets {
    gamma: Perm,
    c: usize,
    coset_of: Vec<u32>,
    exponent: Vec<u32>,
    members: Vec<Vec<usize>>,
}

impl Qsets {
    pub fn gamma(&self) -> &Perm {
        &self.gamma
    }

    /// `|C|`.
    pub fn size(&self) -> usize {
        self.c
    }

    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn coset_of(&self, v: usize) -> usize {
        self.coset_of[v] as usize
    }

    /// The `i` in `1..=|C|` with `v = x gamma^i`.
    pub fn exponent(&self, v: usize) -> usize {
        self.exponent[v] as usize
    }

    /// Members in exponent order.
    pub fn members(&self, coset: usize) -> &[usize] {
        &self.members[coset]
    }
}

/// Partitions `group` into the left cosets of `<B P^-1>`.
pub fn qset_cosets(group: &GroupTable, p: &Perm, b: &Perm) -> Result<Qsets> {
    for g in [p, b] {
        if !group.contains(g) {
            return Err(Error::Membership(g.to_string()));
        }
    }
    let gamma = b.compose(&p.inverse())?;
    let c = gamma.order() as usize;
    let n = group.order();
    let mut coset_of = vec![u32::MAX; n];
    let mut exponent = vec![0u32; n];
    let mut members = Vec::with_capacity(n / c);
    for rep in 0..n {
        if coset_of[rep] != u32::MAX {
            continue;
        }
        let id = members.len() as u32;
        let mut list = Vec::with_capacity(c);
        let mut e = group.element(rep).clone();
        for i in 1..=c {
            e = e.then_unchecked(&gamma);
            let v = group.index_of(&e).expect("gamma lies in the group");
            coset_of[v] = id;
            exponent[v] = i as u32;
            list.push(v);
        }
        members.push(list);
    }
    Ok(Qsets {
        gamma,
        c,
        coset_of,
        exponent,
        members,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CosetLabel {
    AllP,
    AllB,
    Mixed,
}

impl CosetLabel {
    fn flipped(self) -> CosetLabel {
        match self {
            CosetLabel::AllP => CosetLabel::AllB,
            CosetLabel::AllB => CosetLabel::AllP,
            CosetLabel::Mixed => CosetLabel::Mixed,
        }
    }
}

/// Label of a coset under an arbitrary assignment of generators to
/// elements (`labels[v]` is `P` or `B`).
pub fn label_of(labels: &[usize], qsets: &Qsets, coset: usize) -> CosetLabel {
    let m = qsets.members(coset);
    if m.iter().all(|&v| labels[v] == P) {
        CosetLabel::AllP
    } else if m.iter().all(|&v| labels[v] == B) {
        CosetLabel::AllB
    } else {
        CosetLabel::Mixed
    }
}

/// A partition of the group into chains over `{P, B}`, stored as a
/// successor per element. The Cayley graph's generators must be `[P, B]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCover {
    succ: Vec<u32>,
}

impl ChainCover {
    /// Every element acted on by `P`: the chains are the cosets of `<P>`.
    pub fn all_p(graph: &CayleyGraph) -> ChainCover {
        ChainCover {
            succ: (0..graph.vertex_count()).map(|v| graph.succ(v, P) as u32).collect(),
        }
    }

    pub fn from_labels(graph: &CayleyGraph, labels: &[usize]) -> Result<ChainCover> {
        if labels.len() != graph.vertex_count() {
            return Err(Error::Chain(format!(
                "{} labels for {} elements",
                labels.len(),
                graph.vertex_count()
            )));
        }
        if let Some(&bad) = labels.iter().find(|&&t| t >= graph.degree()) {
            return Err(Error::Label(format!("label {bad} is not a generator")));
        }
        let cover = ChainCover {
            succ: labels
                .iter()
                .enumerate()
                .map(|(v, &t)| graph.succ(v, t) as u32)
                .collect(),
        };
        cover.validate(graph)?;
        Ok(cover)
    }

    /// Builds a cover from chains that must partition the group.
    pub fn from_chains(graph: &CayleyGraph, chains: &[Chain]) -> Result<ChainCover> {
        let mut succ = vec![u32::MAX; graph.vertex_count()];
        for ch in chains {
            if !ch.is_valid(graph) {
                return Err(Error::Chain("invalid chain".into()));
            }
            for (i, &v) in ch.elements.iter().enumerate() {
                if succ[v] != u32::MAX {
                    return Err(Error::Chain(format!(
                        "element {} lies on two chains",
                        graph.group().element(v)
                    )));
                }
                succ[v] = ch.elements[(i + 1) % ch.len()] as u32;
            }
        }
        if succ.contains(&u32::MAX) {
            return Err(Error::Chain("chains do not cover the group".into()));
        }
        Ok(ChainCover { succ })
    }

    pub fn succ(&self, v: usize) -> usize {
        self.succ[v] as usize
    }

    /// The generator acting on `v`.
    pub fn label(&self, graph: &CayleyGraph, v: usize) -> Option<usize> {
        (0..graph.degree()).find(|&t| graph.succ(v, t) == self.succ(v))
    }

    pub fn labels(&self, graph: &CayleyGraph) -> Result<Vec<usize>> {
        (0..self.succ.len())
            .map(|v| {
                self.label(graph, v).ok_or_else(|| {
                    Error::Chain(format!(
                        "{} has no generator edge to its successor",
                        graph.group().element(v)
                    ))
                })
            })
            .collect()
    }

    /// Successors form a bijection along generator edges.
    pub fn validate(&self, graph: &CayleyGraph) -> Result<()> {
        self.labels(graph)?;
        let mut hit = vec![false; self.succ.len()];
        for &w in &self.succ {
            if std::mem::replace(&mut hit[w as usize], true) {
                return Err(Error::Chain(format!(
                    "{} has two predecessors",
                    graph.group().element(w as usize)
                )));
            }
        }
        Ok(())
    }

    pub fn chain_count(&self) -> usize {
        let mut seen = vec![false; self.succ.len()];
        let mut count = 0;
        for start in 0..self.succ.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.succ(v);
            }
        }
        count
    }

    pub fn chains(&self, graph: &CayleyGraph) -> Result<Vec<Chain>> {
        let labels = self.labels(graph)?;
        let mut seen = vec![false; self.succ.len()];
        let mut out = Vec::new();
        for start in 0..self.succ.len() {
            if seen[start] {
                continue;
            }
            let mut elements = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                elements.push(v);
                v = self.succ(v);
            }
            let chain_labels = elements.iter().map(|&v| labels[v]).collect();
            out.push(Chain {
                elements,
                labels: chain_labels,
            });
        }
        Ok(out)
    }

    pub fn coset_label(&self, graph: &CayleyGraph, qsets: &Qsets, coset: usize) -> Result<CosetLabel> {
        Ok(label_of(&self.labels(graph)?, qsets, coset))
    }
}

fn check_coset(qsets: &Qsets, coset: usize) -> Result<()> {
    if coset >= qsets.count() {
        return Err(Error::Label(format!("coset {coset} outside 0..{}", qsets.count())));
    }
    Ok(())
}

/// `k_i` for `i = 1..=|C|`: the exponent of the first element of the coset
/// met after `x gamma^i` along its chain.
fn next_exponents(cover: &ChainCover, qsets: &Qsets, coset: usize) -> Vec<usize> {
    qsets
        .members(coset)
        .iter()
        .map(|&e| {
            let mut v = cover.succ(e);
            while qsets.coset_of(v) != coset {
                v = cover.succ(v);
            }
            qsets.exponent(v)
        })
        .collect()
}

fn require_b(graph: &CayleyGraph, cover: &ChainCover, qsets: &Qsets, coset: usize) -> Result<()> {
    check_coset(qsets, coset)?;
    match cover.coset_label(graph, qsets, coset)? {
        CosetLabel::AllB => Ok(()),
        other => Err(Error::Label(format!("coset {coset} is {other:?}, expected all-B"))),
    }
}

/// `sigma(i) = k_i`.
pub fn sigma_perm(graph: &CayleyGraph, cover: &ChainCover, qsets: &Qsets, coset: usize) -> Result<Perm> {
    require_b(graph, cover, qsets, coset)?;
    Perm::from_images(&next_exponents(cover, qsets, coset))
}

/// `tau(i) = k_(i-1)`, so that `(1 2 ... c) tau = sigma`.
pub fn tau_perm(graph: &CayleyGraph, cover: &ChainCover, qsets: &Qsets, coset: usize) -> Result<Perm> {
    require_b(graph, cover, qsets, coset)?;
    let mut k = next_exponents(cover, qsets, coset);
    k.rotate_right(1);
    Perm::from_images(&k)
}

/// The cycle `(1 2 ... c)`.
pub fn rotation(c: usize) -> Result<Perm> {
    Perm::from_images(&(1..=c).map(|i| i % c + 1).collect::<Vec<_>>())
}

/// Permutes the segments leaving the coset: for an all-B coset the segment
/// after `x gamma^i` now starts with `x gamma^(i-1) B`; an all-P coset is
/// the inverse move.
pub fn rearrange(graph: &CayleyGraph, cover: &ChainCover, qsets: &Qsets, coset: usize) -> Result<ChainCover> {
    check_coset(qsets, coset)?;
    let shift: isize = match cover.coset_label(graph, qsets, coset)? {
        CosetLabel::AllB => -1,
        CosetLabel::AllP => 1,
        CosetLabel::Mixed => return Err(Error::Label(format!("coset {coset} is mixed"))),
    };
    let m = qsets.members(coset);
    let c = m.len() as isize;
    let mut next = cover.clone();
    for (i, &e) in m.iter().enumerate() {
        let j = (i as isize + shift).rem_euclid(c) as usize;
        next.succ[e] = cover.succ[m[j]];
    }
    Ok(next)
}

pub fn random_trace(coset_count: usize, steps: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..steps).map(|_| rng.gen_range(0..coset_count)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditStep {
    pub coset: usize,
    pub label_before: CosetLabel,
    pub chains_before: usize,
    pub chains_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub group_order: usize,
    pub gamma: String,
    pub gamma_order: usize,
    pub coset_count: usize,
    pub index_p: usize,
    pub start_chains: usize,
    pub steps: Vec<AuditStep>,
    /// Every step moved the chain count by an amount of parity `|C| - 1`.
    pub parity_law_held: bool,
    /// Every rearranged coset changed label.
    pub label_flip_held: bool,
    /// `(1 2 ... c) tau = sigma` on every all-B coset touched.
    pub rotation_identity_held: bool,
    /// Chains after rearranging an all-B coset matched the cycle counts of
    /// `sigma` and `tau`.
    pub chain_count_prediction_held: bool,
    /// Odd `|C|` and even `index(<P>)`: every cover has an even number of
    /// chains, so none is a single chain.
    pub single_chain_excluded: bool,
}

impl AuditReport {
    pub fn all_held(&self) -> bool {
        self.parity_law_held && self.label_flip_held && self.rotation_identity_held && self.chain_count_prediction_held
    }
}

/// Replays `trace` from the all-P cover, checking the parity law and the
/// per-coset identities after every step.
pub fn parity_audit(group: &GroupTable, p: &Perm, b: &Perm, trace: &[usize]) -> Result<AuditReport> {
    let graph = CayleyGraph::new(group.clone(), vec![p.clone(), b.clone()])?;
    let qsets = qset_cosets(group, p, b)?;
    let c = qsets.size();
    let index_p = group.order() / closure_of(group.degree(), std::slice::from_ref(p), group.order())?.order();
    let rot = rotation(c)?;
    let mut cover = ChainCover::all_p(&graph);
    let start_chains = cover.chain_count();
    let mut report = AuditReport {
        group_order: group.order(),
        gamma: qsets.gamma().to_string(),
        gamma_order: c,
        coset_count: qsets.count(),
        index_p,
        start_chains,
        steps: Vec::with_capacity(trace.len()),
        parity_law_held: true,
        label_flip_held: true,
        rotation_identity_held: true,
        chain_count_prediction_held: true,
        single_chain_excluded: c % 2 == 1 && index_p.is_multiple_of(2),
    };
    let mut count = start_chains;
    for &coset in trace {
        check_coset(&qsets, coset)?;
        let before = cover.coset_label(&graph, &qsets, coset)?;
        let predicted = if before == CosetLabel::AllB {
            let s = sigma_perm(&graph, &cover, &qsets, coset)?;
            let t = tau_perm(&graph, &cover, &qsets, coset)?;
            report.rotation_identity_held &= rot.compose(&t)? == s;
            Some(count - s.cycle_count() + t.cycle_count())
        } else {
            None
        };
        let next = rearrange(&graph, &cover, &qsets, coset)?;
        next.validate(&graph)?;
        let after_count = next.chain_count();
        let after = next.coset_label(&graph, &qsets, coset)?;
        report.label_flip_held &= after == before.flipped() && after != CosetLabel::Mixed;
        if after == CosetLabel::AllB {
            let s = sigma_perm(&graph, &next, &qsets, coset)?;
            let t = tau_perm(&graph, &next, &qsets, coset)?;
            report.rotation_identity_held &= rot.compose(&t)? == s;
        }
        if let Some(want) = predicted {
            report.chain_count_prediction_held &= want == after_count;
        }
        report.parity_law_held &= (after_count + count) % 2 == (c - 1) % 2;
        report.steps.push(AuditStep {
            coset,
            label_before: before,
            chains_before: count,
            chains_after: after_count,
        });
        cover = next;
        count = after_count;
    }
    Ok(report)
}
