use crate::error::{Error, Result};
use crate::perm::Perm;

use super::group::GroupTable;

/// The Cayley colour graph of a group and generator list: vertices are
/// group elements, with an edge `x -> x t` labelled `t` for each generator.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    group: GroupTable,
    gens: Vec<Perm>,
    // succ[v * k + t] = index of element(v) * gens[t]
    succ: Vec<u32>,
    pred: Vec<u32>,
}

impl CayleyGraph {
    pub fn new(group: GroupTable, gens: Vec<Perm>) -> Result<CayleyGraph> {
        if gens.is_empty() {
            return Err(Error::Membership("a Cayley graph needs at least one generator".into()));
        }
        for g in &gens {
            if !group.contains(g) {
                return Err(Error::Membership(g.to_string()));
            }
        }
        let k = gens.len();
        let n = group.order();
        let mut succ = vec![0u32; n * k];
        let mut pred = vec![0u32; n * k];
        for v in 0..n {
            for (t, g) in gens.iter().enumerate() {
                let w = group
                    .index_of(&group.element(v).then_unchecked(g))
                    .expect("group is closed");
                succ[v * k + t] = w as u32;
                pred[w * k + t] = v as u32;
            }
        }
        Ok(CayleyGraph {
            group,
            gens,
            succ,
            pred,
        })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn vertex_count(&self) -> usize {
        self.group.order()
    }

    pub fn degree(&self) -> usize {
        self.gens.len()
    }

    pub fn succ(&self, v: usize, t: usize) -> usize {
        self.succ[v * self.gens.len() + t] as usize
    }

    /// The vertex `u` with `succ(u, t) == w`.
    pub fn pred(&self, w: usize, t: usize) -> usize {
        self.pred[w * self.gens.len() + t] as usize
    }
}

/// A cyclic sequence of distinct vertices with `elements[i + 1] =
/// elements[i] * gens[labels[i]]`, indices taken cyclically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub elements: Vec<usize>,
    pub labels: Vec<usize>,
}

impl Chain {
    /// Walks `labels` from `start`; errors on a repeat or when the walk
    /// does not return to `start`.
    pub fn from_labels(graph: &CayleyGraph, start: usize, labels: &[usize]) -> Result<Chain> {
        let mut elements = Vec::with_capacity(labels.len());
        let mut seen = vec![false; graph.vertex_count()];
        let mut v = start;
        for &t in labels {
            if t >= graph.degree() {
                return Err(Error::Word(format!("label {t} is not a generator index")));
            }
            if seen[v] {
                return Err(Error::Chain(format!("element {} repeats", graph.group().element(v))));
            }
            seen[v] = true;
            elements.push(v);
            v = graph.succ(v, t);
        }
        if v != start {
            return Err(Error::Chain("walk does not return to its start".into()));
        }
        Ok(Chain {
            elements,
            labels: labels.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Checks distinctness and the label equation, wrap included.
    pub fn is_valid(&self, graph: &CayleyGraph) -> bool {
        let m = self.elements.len();
        if m == 0 || self.labels.len() != m {
            return false;
        }
        let mut seen = vec![false; graph.vertex_count()];
        for i in 0..m {
            let v = self.elements[i];
            if v >= seen.len() || seen[v] || self.labels[i] >= graph.degree() {
                return false;
            }
            seen[v] = true;
            if graph.succ(v, self.labels[i]) != self.elements[(i + 1) % m] {
                return false;
            }
        }
        true
    }
}

/// True iff the partial products of `word` from the identity are pairwise
/// distinct, cover the group, and the full product is the identity.
pub fn verify_word(group: &GroupTable, gens: &[Perm], word: &[usize]) -> Result<bool> {
    if let Some(&bad) = word.iter().find(|&&t| t >= gens.len()) {
        return Err(Error::Word(format!("label {bad} outside 0..{}", gens.len())));
    }
    if word.len() != group.order() {
        return Ok(false);
    }
    let mut seen = vec![false; group.order()];
    let mut x = group.element(0).clone();
    for &t in word {
        let Some(i) = group.index_of(&x) else {
            return Ok(false);
        };
        if seen[i] {
            return Ok(false);
        }
        seen[i] = true;
        x = x.compose(&gens[t])?;
    }
    Ok(x.is_identity())
}
