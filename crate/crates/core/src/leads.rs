//! Lead-level view of Plain Bob, Grandsire and Christ Church Dublin
//! Differential Doubles: plain and bob leads, their lead-head
//! permutations, lead-head graphs and extent feasibility.
//!
//! A lead head is the product of the transitions rung so far, so the lead
//! head after a sequence of leads is the product of their lead
//! permutations and a composition is a closed walk in the Cayley graph of
//! `<P, B>`. Rows of a lead starting at head `g` are `g w_1, ..., g w_L`
//! for the prefix products `w_j` of its word; distinct leads with
//! disjoint rows give a true composition.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::methods::{lead_words, LeadWords};
use crate::notation::{CompositionFile, Lead};
use crate::perm::{Parity, Perm, Row};
use crate::unicursal::{
    closure, longest_cycle, rankin_oracle, CayleyGraph, Chain, Footprints, LongestOptions, RankinVerdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    PlainBob,
    Grandsire,
    Ccdd,
}

impl Family {
    pub fn slug(self) -> &'static str {
        match self {
            Family::PlainBob => "plain-bob",
            Family::Grandsire => "grandsire",
            Family::Ccdd => "ccdd",
        }
    }
}

/// A scheme name such as `plain-bob-6`, `grandsire-7` or `ccdd-5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SchemeId {
    pub family: Family,
    pub stage: usize,
}

impl SchemeId {
    pub fn new(family: Family, stage: usize) -> SchemeId {
        SchemeId { family, stage }
    }
}

impl FromStr for SchemeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SchemeId> {
        let bad = || Error::Scheme(s.to_string());
        let (family, stage) = s.rsplit_once('-').ok_or_else(bad)?;
        let family = match family {
            "plain-bob" => Family::PlainBob,
            "grandsire" => Family::Grandsire,
            "ccdd" => Family::Ccdd,
            _ => return Err(bad()),
        };
        let stage = stage.parse().map_err(|_| bad())?;
        Ok(SchemeId { family, stage })
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.family.slug(), self.stage)
    }
}

/// Plain and bob lead words with their lead permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadScheme {
    id: SchemeId,
    words: LeadWords,
    plain: Perm,
    bob: Perm,
}

impl LeadScheme {
    pub fn id(&self) -> &SchemeId {
        &self.id
    }

    pub fn stage(&self) -> usize {
        self.id.stage
    }

    pub fn words(&self) -> &LeadWords {
        &self.words
    }

    /// Transitions per lead.
    pub fn lead_length(&self) -> usize {
        self.words.plain.len()
    }

    /// `P`: the product of the plain lead.
    pub fn p(&self) -> &Perm {
        &self.plain
    }

    /// `B`: the product of the bob lead.
    pub fn b(&self) -> &Perm {
        &self.bob
    }

    /// `P^-1 B`: the correction a bob makes to a plain lead, which for
    /// Plain Bob is `Z^-1 W`.
    pub fn bob_coset_step(&self) -> Perm {
        self.plain.inverse().then_unchecked(&self.bob)
    }

    pub fn lead_perm(&self, lead: Lead) -> &Perm {
        match lead {
            Lead::Plain => &self.plain,
            Lead::Bob => &self.bob,
        }
    }

    pub fn generators(&self) -> Vec<Perm> {
        vec![self.plain.clone(), self.bob.clone()]
    }

    pub fn word(&self, lead: Lead) -> &[u16] {
        match lead {
            Lead::Plain => &self.words.plain,
            Lead::Bob => &self.words.bob,
        }
    }

    /// Prefix products `w_1, ..., w_L` of a lead word.
    pub fn prefixes(&self, lead: Lead) -> Vec<Perm> {
        let mut acc = Perm::identity(self.stage()).expect("valid stage");
        self.word(lead)
            .iter()
            .map(|&w| {
                acc = acc.then_unchecked(&self.words.alphabet[w as usize].perm);
                acc.clone()
            })
            .collect()
    }

    /// Leads in a plain course, `order(P)`.
    pub fn plain_course_leads(&self) -> usize {
        self.plain.order() as usize
    }
}

pub fn lead_scheme(id: &SchemeId) -> Result<LeadScheme> {
    let words = lead_words(id).map_err(|e| match e {
        Error::Stage { reason, .. } => Error::Scheme(format!("{id}: {reason}")),
        other => other,
    })?;
    Ok(LeadScheme {
        id: *id,
        plain: words.plain_product(),
        bob: words.bob_product(),
        words,
    })
}

/// The row reached from rounds by `head`.
pub fn leadhead_row(head: &Perm) -> Row {
    Row::from_perm(head)
}

/// A lead head written without its leading bell 1, e.g. `3 5 2 6 4`.
pub fn short_leadhead(head: &Perm) -> String {
    let row = leadhead_row(head);
    let bells: Vec<String> = row.bells().map(|b| b.to_string()).collect();
    if row.bell_at(1) == 1 {
        bells[1..].join(" ")
    } else {
        bells.join(" ")
    }
}

/// Cayley graph of `<P, B>` with the rows of each lead as edge footprints.
#[derive(Clone, Debug)]
pub struct LeadheadGraph {
    pub scheme: LeadScheme,
    pub graph: CayleyGraph,
    pub footprints: Footprints,
    /// `P` and `B` are even, fix bell 1 and generate all even
    /// permutations of the other bells.
    pub spans_alternating: bool,
}

impl LeadheadGraph {
    /// Lead heads distinct and rows of the leads disjoint.
    pub fn is_true(&self, chain: &Chain) -> bool {
        if !chain.is_valid(&self.graph) {
            return false;
        }
        let mut used = vec![false; self.footprints.token_count()];
        for (&v, &t) in chain.elements.iter().zip(&chain.labels) {
            for &x in self.footprints.edge(v, t) {
                if std::mem::replace(&mut used[x as usize], true) {
                    return false;
                }
            }
        }
        true
    }
}

fn half_factorial(m: usize) -> usize {
    ((1..=m).product::<usize>() / 2).max(1)
}

pub fn leadhead_graph(s: &LeadScheme) -> Result<LeadheadGraph> {
    let gens = s.generators();
    let group = closure(&gens, 1_000_000)?;
    let n = s.stage();
    let spans_alternating =
        gens.iter().all(|g| g.fixes(1) && g.parity() == Parity::Even) && group.order() == half_factorial(n - 1);
    let graph = CayleyGraph::new(group, gens)?;
    let prefixes = [s.prefixes(Lead::Plain), s.prefixes(Lead::Bob)];
    let footprints = Footprints::from_fn(&graph, |v, t| {
        let head = graph.group().element(v);
        prefixes[t]
            .iter()
            .map(|w| head.then_unchecked(w))
            .collect::<Vec<Perm>>()
    });
    Ok(LeadheadGraph {
        scheme: s.clone(),
        graph,
        footprints,
        spans_alternating,
    })
}

pub fn chain_to_composition(s: &LeadScheme, chain: &Chain) -> Result<CompositionFile> {
    let leads = chain
        .labels
        .iter()
        .map(|&t| Lead::from_index(t).ok_or_else(|| Error::Composition(format!("label {t} is neither P nor B"))))
        .collect::<Result<Vec<_>>>()?;
    if leads.is_empty() {
        return Err(Error::Composition("empty chain".into()));
    }
    Ok(CompositionFile::new(s.id(), leads))
}

/// The chain of lead heads visited from rounds.
pub fn composition_to_chain(lg: &LeadheadGraph, comp: &CompositionFile) -> Result<Chain> {
    comp.validate()?;
    let id: SchemeId = comp.scheme.parse()?;
    if id != *lg.scheme.id() {
        return Err(Error::Composition(format!(
            "composition is for `{id}`, graph is for `{}`",
            lg.scheme.id()
        )));
    }
    let mut head = Perm::identity(lg.scheme.stage())?;
    for &lead in &comp.leads {
        head = head.then_unchecked(lg.scheme.lead_perm(lead));
    }
    if !head.is_identity() {
        return Err(Error::Closure { residual: head });
    }
    let labels: Vec<usize> = comp.leads.iter().map(|l| l.index()).collect();
    Chain::from_labels(&lg.graph, 0, &labels)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Possible,
    Impossible,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FeasibilityTest {
    EvenTransitions,
    LeadParity,
    Rankin,
    Exhaustive,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub verdict: Verdict,
    pub test: FeasibilityTest,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_rows: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_leads: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Lead>>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityOptions {
    /// Largest lead-head graph searched exhaustively.
    pub vertex_cap: usize,
    pub budget: u64,
}

impl Default for FeasibilityOptions {
    fn default() -> Self {
        FeasibilityOptions {
            vertex_cap: 120,
            budget: 50_000_000,
        }
    }
}

/// Decides whether plain and bob leads can give an extent, trying in turn
/// an all-even alphabet, the parity of rows with bell 1 leading, the
/// Rankin oracle and exhaustive search.
pub fn extent_feasibility(s: &LeadScheme, opts: &FeasibilityOptions) -> Result<Feasibility> {
    let n = s.stage();
    let rows_total: u64 = (1..=n as u64).product();
    let lead_len = s.lead_length() as u64;
    let extent_leads = rows_total / lead_len;
    let used: Vec<&Perm> = s
        .words()
        .plain
        .iter()
        .chain(&s.words().bob)
        .map(|&w| &s.words().alphabet[w as usize].perm)
        .collect();

    if used.iter().all(|t| t.parity() == Parity::Even) {
        let bound = rows_total / 2;
        return Ok(Feasibility {
            verdict: Verdict::Impossible,
            test: FeasibilityTest::EvenTransitions,
            bound_rows: Some(bound),
            bound_leads: Some(bound / lead_len),
            witness: None,
            reason: format!("every transition is even, so only the {bound} even rows can appear"),
        });
    }

    let prefixes = [s.prefixes(Lead::Plain), s.prefixes(Lead::Bob)];
    let heads_fix_1 = s.p().fixes(1) && s.b().fixes(1);
    let treble_rows_even = prefixes
        .iter()
        .flatten()
        .filter(|w| w.fixes(1))
        .all(|w| w.parity() == Parity::Even);
    let per_lead = prefixes[0].iter().filter(|w| w.fixes(1)).count();
    let per_lead_bob = prefixes[1].iter().filter(|w| w.fixes(1)).count();
    if heads_fix_1 && treble_rows_even && per_lead == per_lead_bob && per_lead > 0 {
        let treble_rows = half_factorial(n - 1) as u64;
        let max_leads = treble_rows / per_lead as u64;
        if max_leads < extent_leads {
            return Ok(Feasibility {
                verdict: Verdict::Impossible,
                test: FeasibilityTest::LeadParity,
                bound_rows: Some(max_leads * lead_len),
                bound_leads: Some(max_leads),
                witness: None,
                reason: format!(
                    "rows with bell 1 leading are all even, at most {treble_rows}, and each lead has {per_lead}"
                ),
            });
        }
    }

    let lg = leadhead_graph(s)?;
    let order = lg.graph.vertex_count() as u64;
    if order < extent_leads {
        return Ok(Feasibility {
            verdict: Verdict::Impossible,
            test: FeasibilityTest::Exhaustive,
            bound_rows: Some(order * lead_len),
            bound_leads: Some(order),
            witness: None,
            reason: format!("only {order} lead heads for {extent_leads} leads"),
        });
    }
    if order == extent_leads {
        let r = rankin_oracle(lg.graph.group(), s.p(), s.b())?;
        if r.verdict == RankinVerdict::Impossible {
            let shortest = s.p().order().min(s.b().order());
            let leads = order - shortest;
            return Ok(Feasibility {
                verdict: Verdict::Impossible,
                test: FeasibilityTest::Rankin,
                bound_rows: Some(leads * lead_len),
                bound_leads: Some(leads),
                witness: None,
                reason: format!(
                    "order of P^-1 B is {}, index of <P> is {}, index of <B> is {}",
                    r.order_gamma, r.index_x, r.index_y
                ),
            });
        }
    }

    if lg.graph.vertex_count() <= opts.vertex_cap {
        let report = longest_cycle(
            &lg.graph,
            Some(&lg.footprints),
            &LongestOptions {
                budget: opts.budget,
                target: Some(extent_leads as usize),
            },
        );
        let best = report.length() as u64;
        if best == extent_leads {
            let chain = report.best.expect("a cycle was found");
            return Ok(Feasibility {
                verdict: Verdict::Possible,
                test: FeasibilityTest::Exhaustive,
                bound_rows: Some(rows_total),
                bound_leads: Some(extent_leads),
                witness: Some(chain_to_composition(s, &chain)?.leads),
                reason: format!("found a true composition of {extent_leads} leads"),
            });
        }
        if report.optimal {
            return Ok(Feasibility {
                verdict: Verdict::Impossible,
                test: FeasibilityTest::Exhaustive,
                bound_rows: Some(best * lead_len),
                bound_leads: Some(best),
                witness: None,
                reason: format!("exhaustive search: longest true composition has {best} leads"),
            });
        }
    }
    Ok(Feasibility {
        verdict: Verdict::Unknown,
        test: FeasibilityTest::None,
        bound_rows: None,
        bound_leads: None,
        witness: None,
        reason: "no test was conclusive".into(),
    })
}
