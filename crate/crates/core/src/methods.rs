//! Method generators: plain changes, Plain Hunt, Plain Bob, Grandsire and
//! Christ Church Dublin Differential Doubles, plus lead-by-lead expansion
//! of compositions.

use crate::error::{Error, Result};
use crate::leads::{Family, LeadScheme, SchemeId};
use crate::notation::{format_cycles, CompositionFile};
use crate::perm::{Perm, Row};

/// Default largest stage for [`sjt_extent`]; 10! + 1 rows.
pub const DEFAULT_SJT_CAP: usize = 10;

/// Above this many rows [`Method::row_list`] refuses to materialize and
/// callers should stream with [`Method::rows`].
pub const ROW_LIST_CAP: usize = 1_000_000;

/// A named transition used by a method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Change {
    pub label: String,
    pub perm: Perm,
}

impl Change {
    pub fn new(label: impl Into<String>, perm: Perm) -> Change {
        Change {
            label: label.into(),
            perm,
        }
    }
}

/// A start row and a sequence of transitions over a small alphabet of
/// changes. Rows are derived: `rows[0]` is the start and `rows[i + 1]` is
/// `transitions[i]` applied to `rows[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Method {
    name: String,
    start: Row,
    alphabet: Vec<Change>,
    word: Vec<u16>,
}

impl Method {
    pub fn new(name: impl Into<String>, start: Row, alphabet: Vec<Change>, word: Vec<u16>) -> Result<Method> {
        let n = start.stage();
        if alphabet.len() > u16::MAX as usize {
            return Err(Error::Resource("too many distinct transitions".into()));
        }
        for c in &alphabet {
            if c.perm.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: c.perm.degree(),
                });
            }
        }
        if let Some(&bad) = word.iter().find(|&&w| w as usize >= alphabet.len()) {
            return Err(Error::Word(format!("transition index {bad} outside the alphabet")));
        }
        Ok(Method {
            name: name.into(),
            start,
            alphabet,
            word,
        })
    }

    /// Builds a method from explicit transitions; each distinct transition
    /// is labelled by its cycle notation.
    pub fn from_transitions(name: &str, start: Row, transitions: Vec<Perm>) -> Result<Method> {
        let mut alphabet: Vec<Change> = Vec::new();
        let mut word = Vec::with_capacity(transitions.len());
        for t in transitions {
            let idx = match alphabet.iter().position(|c| c.perm == t) {
                Some(i) => i,
                None => {
                    alphabet.push(Change::new(format_cycles(&t), t));
                    alphabet.len() - 1
                }
            };
            word.push(idx as u16);
        }
        Method::new(name, start, alphabet, word)
    }

    /// Reconstructs a method from its row list.
    pub fn from_rows(name: &str, rows: &[Row]) -> Result<Method> {
        let start = rows
            .first()
            .cloned()
            .ok_or_else(|| Error::Row("a method needs at least one row".into()))?;
        let transitions = rows
            .windows(2)
            .map(|w| w[0].transition_to(&w[1]))
            .collect::<Result<Vec<_>>>()?;
        Method::from_transitions(name, start, transitions)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn stage(&self) -> usize {
        self.start.stage()
    }

    pub fn start(&self) -> &Row {
        &self.start
    }

    pub fn alphabet(&self) -> &[Change] {
        &self.alphabet
    }

    /// Transition indices into [`Method::alphabet`].
    pub fn word(&self) -> &[u16] {
        &self.word
    }

    pub fn word_labels(&self) -> Vec<&str> {
        self.word
            .iter()
            .map(|&w| self.alphabet[w as usize].label.as_str())
            .collect()
    }

    pub fn transitions(&self) -> impl Iterator<Item = &Perm> + '_ {
        self.word.iter().map(|&w| &self.alphabet[w as usize].perm)
    }

    pub fn transition_count(&self) -> usize {
        self.word.len()
    }

    pub fn row_count(&self) -> usize {
        self.word.len() + 1
    }

    /// Streams the rows, start row first.
    pub fn rows(&self) -> Rows<'_> {
        Rows {
            method: self,
            next: 0,
            current: self.start.clone(),
        }
    }

    pub fn row_list(&self) -> Result<Vec<Row>> {
        if self.row_count() > ROW_LIST_CAP {
            return Err(Error::Resource(format!(
                "{} rows exceeds the in-memory cap of {ROW_LIST_CAP}; stream with rows()",
                self.row_count()
            )));
        }
        Ok(self.rows().collect())
    }

    pub fn last_row(&self) -> Row {
        self.rows().last().expect("a method has a start row")
    }

    /// Product of all transitions.
    pub fn product(&self) -> Perm {
        let mut acc = Perm::identity(self.stage()).expect("stage is valid");
        for t in self.transitions() {
            acc = acc.then_unchecked(t);
        }
        acc
    }
}

pub struct Rows<'a> {
    method: &'a Method,
    next: usize,
    current: Row,
}

impl Iterator for Rows<'_> {
    type Item = Row;

    fn next(&mut self) -> Option<Row> {
        let m = self.method;
        if self.next > m.word.len() {
            return None;
        }
        let out = self.current.clone();
        if self.next < m.word.len() {
            let t = &m.alphabet[m.word[self.next] as usize].perm;
            self.current = t.apply_to_row(&self.current).expect("degrees checked at construction");
        }
        self.next += 1;
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.method.word.len() + 1 - self.next.min(self.method.word.len() + 1);
        (left, Some(left))
    }
}

impl ExactSizeIterator for Rows<'_> {}

/// Steinhaus–Johnson–Trotter stepping: yields, for each step, the left
/// position `k` of the swapped adjacent pair `(k k+1)`. Bell 1 is the most
/// active bell and starts by moving right. After the `n! - 1` generating
/// steps a final swap returns to rounds (absent for `n = 1`).
pub struct SjtSwaps {
    row: Vec<usize>,
    // direction of each bell, indexed by bell number: true = rightwards
    right: Vec<bool>,
    finished: bool,
}

impl SjtSwaps {
    pub fn new(n: usize) -> SjtSwaps {
        SjtSwaps {
            row: (1..=n).collect(),
            right: vec![true; n + 1],
            finished: n <= 1,
        }
    }
}

impl Iterator for SjtSwaps {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.finished {
            return None;
        }
        let n = self.row.len();
        let mut mobile: Option<(usize, usize)> = None;
        for (pos, &bell) in self.row.iter().enumerate() {
            let neighbour = if self.right[bell] {
                pos.checked_add(1).filter(|&p| p < n)
            } else {
                pos.checked_sub(1)
            };
            if let Some(q) = neighbour {
                if self.row[q] > bell && mobile.is_none_or(|(b, _)| bell < b) {
                    mobile = Some((bell, pos));
                }
            }
        }
        match mobile {
            Some((bell, pos)) => {
                let q = if self.right[bell] { pos + 1 } else { pos - 1 };
                self.row.swap(pos, q);
                for b in 1..bell {
                    self.right[b] = !self.right[b];
                }
                Some(pos.min(q) + 1)
            }
            None => {
                self.finished = true;
                let out_of_place: Vec<usize> = (0..n).filter(|&i| self.row[i] != i + 1).collect();
                match out_of_place.as_slice() {
                    [a, b] if b - a == 1 => Some(a + 1),
                    _ => unreachable!("plain changes end one swap from rounds"),
                }
            }
        }
    }
}

fn sjt_labels(n: usize) -> Vec<Change> {
    (1..n)
        .map(|k| {
            let label = if k <= 26 {
                char::from(b'A' + (k - 1) as u8).to_string()
            } else {
                format!("S{k}")
            };
            Change::new(label, Perm::transposition(n, k, k + 1).expect("valid swap"))
        })
        .collect()
}

/// Plain changes on `n` bells: every row once, each from its predecessor
/// by one adjacent swap, rounds first and last. `(k k+1)` is labelled with
/// the `k`-th capital letter.
pub fn sjt_extent(n: usize) -> Result<Method> {
    sjt_extent_capped(n, DEFAULT_SJT_CAP)
}

pub fn sjt_extent_capped(n: usize, cap: usize) -> Result<Method> {
    if n == 0 {
        return Err(Error::InvalidDegree(0));
    }
    if n > cap {
        return Err(Error::Resource(format!(
            "plain changes on {n} bells exceeds the cap of {cap}"
        )));
    }
    let word: Vec<u16> = SjtSwaps::new(n).map(|k| (k - 1) as u16).collect();
    Method::new(format!("Plain Changes on {n}"), Row::rounds(n)?, sjt_labels(n), word)
}

/// The hunting pair `X = (1 2)(3 4)...` and `Y = (2 3)(4 5)...`.
pub fn hunting_pair(n: usize) -> Result<(Perm, Perm)> {
    if n < 3 {
        return Err(Error::Stage {
            stage: n,
            reason: "the hunting changes need at least 3 bells".into(),
        });
    }
    Ok((swaps(n, (1..n).step_by(2))?, swaps(n, (2..n).step_by(2))?))
}

/// Product of the adjacent swaps `(k k+1)` for each listed `k`.
fn swaps(n: usize, lefts: impl IntoIterator<Item = usize>) -> Result<Perm> {
    let mut images: Vec<usize> = (1..=n).collect();
    for k in lefts {
        if k + 1 > n {
            break;
        }
        images.swap(k - 1, k);
    }
    Perm::from_images(&images)
}

pub fn plain_hunt(n: usize) -> Result<Method> {
    let (x, y) = hunting_pair(n)?;
    let alphabet = vec![Change::new("X", x), Change::new("Y", y)];
    let word = (0..2 * n).map(|i| (i % 2) as u16).collect();
    Method::new(format!("Plain Hunt on {n}"), Row::rounds(n)?, alphabet, word)
}

/// The transitions of a lead-based method with its plain-lead and bob-lead
/// words over them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadWords {
    pub alphabet: Vec<Change>,
    pub plain: Vec<u16>,
    pub bob: Vec<u16>,
}

impl LeadWords {
    fn product(&self, word: &[u16]) -> Perm {
        let n = self.alphabet[0].perm.degree();
        word.iter().fold(Perm::identity(n).expect("valid stage"), |acc, &w| {
            acc.then_unchecked(&self.alphabet[w as usize].perm)
        })
    }

    pub fn plain_product(&self) -> Perm {
        self.product(&self.plain)
    }

    pub fn bob_product(&self) -> Perm {
        self.product(&self.bob)
    }
}

const X: u16 = 0;
const Y: u16 = 1;
const Z: u16 = 2;
const W: u16 = 3;

/// Lead words for a scheme.
///
/// Plain Bob: hunt `X,Y,...,X` (2n-1 changes) then `Z = (3 4)(5 6)...`,
/// or `W = (2 3)(5 6)(7 8)...` at a bob. Grandsire: `Z,Y` then `(X,Y)`
/// repeated, with `Z = (1 2)(4 5)(6 7)...`; a bob puts `Z` in place of the
/// last `X`. Christ Church Dublin Differential Doubles: the Plain Bob
/// Doubles shape with `Z = (1 2)` and bob `W = (3 4)`.
pub fn lead_words(id: &SchemeId) -> Result<LeadWords> {
    let n = id.stage;
    let stage_err = |reason: &str| Error::Stage {
        stage: n,
        reason: reason.to_string(),
    };
    match id.family {
        Family::PlainBob => {
            if n < 4 {
                return Err(stage_err("Plain Bob needs at least 4 bells"));
            }
            let (x, y) = hunting_pair(n)?;
            let z = swaps(n, (3..n).step_by(2))?;
            let w = swaps(n, std::iter::once(2).chain((5..n).step_by(2)))?;
            let mut plain: Vec<u16> = (0..2 * n - 1).map(|i| (i % 2) as u16).collect();
            let mut bob = plain.clone();
            plain.push(Z);
            bob.push(W);
            Ok(LeadWords {
                alphabet: vec![
                    Change::new("X", x),
                    Change::new("Y", y),
                    Change::new("Z", z),
                    Change::new("W", w),
                ],
                plain,
                bob,
            })
        }
        Family::Grandsire => {
            if n < 5 || n.is_multiple_of(2) {
                return Err(stage_err("Grandsire needs an odd number of bells, at least 5"));
            }
            let (x, y) = hunting_pair(n)?;
            let z = swaps(n, std::iter::once(1).chain((4..n).step_by(2)))?;
            let mut plain = vec![Z, Y];
            for _ in 0..n - 1 {
                plain.push(X);
                plain.push(Y);
            }
            let mut bob = plain.clone();
            bob[2 * n - 2] = Z;
            Ok(LeadWords {
                alphabet: vec![Change::new("X", x), Change::new("Y", y), Change::new("Z", z)],
                plain,
                bob,
            })
        }
        Family::Ccdd => {
            if n != 5 {
                return Err(stage_err("Christ Church Dublin Differential is rung on 5 bells"));
            }
            let (x, y) = hunting_pair(5)?;
            let mut plain: Vec<u16> = (0..9).map(|i| (i % 2) as u16).collect();
            let mut bob = plain.clone();
            plain.push(Z);
            bob.push(W);
            Ok(LeadWords {
                alphabet: vec![
                    Change::new("X", x),
                    Change::new("Y", y),
                    Change::new("Z", Perm::transposition(5, 1, 2)?),
                    Change::new("W", Perm::transposition(5, 3, 4)?),
                ],
                plain,
                bob,
            })
        }
    }
}

fn plain_course(id: &SchemeId, name: String) -> Result<Method> {
    let words = lead_words(id)?;
    let leads = words.plain_product().order() as usize;
    let word = words.plain.repeat(leads);
    Method::new(name, Row::rounds(id.stage)?, words.alphabet, word)
}

/// A plain course of Plain Bob: `order(P)` plain leads, which is `n - 1`.
pub fn plain_bob_course(n: usize) -> Result<Method> {
    plain_course(&SchemeId::new(Family::PlainBob, n), format!("Plain Bob on {n}"))
}

pub fn grandsire_course(n: usize) -> Result<Method> {
    plain_course(&SchemeId::new(Family::Grandsire, n), format!("Grandsire on {n}"))
}

pub fn ccdd_course() -> Result<Method> {
    plain_course(
        &SchemeId::new(Family::Ccdd, 5),
        "Christ Church Dublin Differential Doubles".to_string(),
    )
}

/// Concatenates the lead words of a composition, starting from rounds.
pub fn expand_leads(scheme: &LeadScheme, comp: &CompositionFile) -> Result<Method> {
    let id = scheme.id();
    let comp_id: SchemeId = comp
        .scheme
        .parse()
        .map_err(|_| Error::Composition(format!("unknown scheme `{}`", comp.scheme)))?;
    if comp_id != *id {
        return Err(Error::Composition(format!(
            "composition is for `{}`, scheme is `{id}`",
            comp.scheme
        )));
    }
    if comp.leads.is_empty() {
        return Err(Error::Composition("a composition needs at least one lead".into()));
    }
    let words = scheme.words();
    let mut word = Vec::new();
    for lead in &comp.leads {
        word.extend_from_slice(match lead {
            crate::notation::Lead::Plain => &words.plain,
            crate::notation::Lead::Bob => &words.bob,
        });
    }
    Method::new(
        format!("{id} {}", comp.letters()),
        Row::rounds(id.stage)?,
        words.alphabet.clone(),
        word,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leads::lead_scheme;
    use crate::notation::{parse_cycles, parse_row};

    /// Builds every arrangement of `n` bells by weaving the smallest bell
    /// through the arrangements of the larger ones, alternately rightwards
    /// and leftwards.
    fn weave(lowest: usize, n: usize) -> Vec<Vec<usize>> {
        if lowest == n {
            return vec![vec![n]];
        }
        let mut out = Vec::new();
        for (j, inner) in weave(lowest + 1, n).into_iter().enumerate() {
            let slots: Vec<usize> = if j % 2 == 0 {
                (0..=inner.len()).collect()
            } else {
                (0..=inner.len()).rev().collect()
            };
            for s in slots {
                let mut row = inner.clone();
                row.insert(s, lowest);
                out.push(row);
            }
        }
        out
    }

    fn rows_as_vecs(m: &Method) -> Vec<Vec<usize>> {
        m.rows().map(|r| r.bells().collect()).collect()
    }

    #[test]
    fn sjt_matches_the_recursive_weave() {
        for n in 1..=6 {
            let m = sjt_extent(n).unwrap();
            let mut expected = weave(1, n);
            if n > 1 {
                expected.push((1..=n).collect());
            }
            assert_eq!(rows_as_vecs(&m), expected, "n = {n}");
        }
    }

    #[test]
    fn sjt_three_bells() {
        let rows: Vec<String> = sjt_extent(3).unwrap().rows().map(|r| r.to_string()).collect();
        assert_eq!(rows, ["1 2 3", "2 1 3", "2 3 1", "3 2 1", "3 1 2", "1 3 2", "1 2 3"]);
    }

    #[test]
    fn sjt_four_bell_word() {
        let m = sjt_extent(4).unwrap();
        assert_eq!(
            m.word_labels().join(","),
            "A,B,C,A,C,B,A,C,A,B,C,A,C,B,A,C,A,B,C,A,C,B,A,C"
        );
        assert_eq!(m.alphabet()[0].perm, parse_cycles("(1 2)", 4).unwrap());
    }

    #[test]
    fn sjt_degenerate_and_capped() {
        let one = sjt_extent(1).unwrap();
        assert_eq!(one.row_count(), 1);
        assert_eq!(one.transition_count(), 0);
        let two: Vec<String> = sjt_extent(2).unwrap().rows().map(|r| r.to_string()).collect();
        assert_eq!(two, ["1 2", "2 1", "1 2"]);
        assert!(matches!(sjt_extent(11), Err(Error::Resource(_))));
        assert!(matches!(sjt_extent(0), Err(Error::InvalidDegree(0))));
    }

    #[test]
    fn sjt_recursion_is_visible_in_the_rows() {
        // bell 1 leads once per arrangement of the others, and those
        // arrangements come in plain-changes order
        for n in 2..=6 {
            let big = sjt_extent(n).unwrap();
            let small = sjt_extent(n - 1).unwrap();
            let leading: Vec<Vec<usize>> = big
                .rows()
                .take(big.row_count() - 1)
                .filter(|r| r.bell_at(1) == 1)
                .map(|r| r.bells().skip(1).map(|b| b - 1).collect())
                .collect();
            let mut expected = rows_as_vecs(&small);
            if n > 2 {
                expected.pop();
            }
            assert_eq!(leading, expected, "n = {n}");
        }
    }

    #[test]
    fn plain_hunt_on_five() {
        let m = plain_hunt(5).unwrap();
        assert_eq!(m.row_count(), 11);
        let rows = m.row_list().unwrap();
        assert_eq!(rows[1], parse_row("2 1 4 3 5").unwrap());
        assert!(rows[10].is_rounds());
        assert_eq!(m.alphabet()[0].perm, parse_cycles("(1 2)(3 4)", 5).unwrap());
        assert_eq!(m.alphabet()[1].perm, parse_cycles("(2 3)(4 5)", 5).unwrap());
    }

    #[test]
    fn plain_hunt_stages() {
        let (x, y) = hunting_pair(8).unwrap();
        assert_eq!(x, parse_cycles("(1 2)(3 4)(5 6)(7 8)", 8).unwrap());
        assert_eq!(y, parse_cycles("(2 3)(4 5)(6 7)", 8).unwrap());
        let (x, y) = hunting_pair(6).unwrap();
        assert_eq!(x, parse_cycles("(1 2)(3 4)(5 6)", 6).unwrap());
        assert_eq!(y, parse_cycles("(2 3)(4 5)", 6).unwrap());
        assert_eq!(plain_hunt(3).unwrap().row_count(), 7);
        assert!(matches!(plain_hunt(2), Err(Error::Stage { .. })));
    }

    #[test]
    fn plain_bob_minimus() {
        let m = plain_bob_course(4).unwrap();
        assert_eq!(m.transition_count(), 24);
        assert_eq!(
            m.word_labels().join(","),
            "X,Y,X,Y,X,Y,X,Z,X,Y,X,Y,X,Y,X,Z,X,Y,X,Y,X,Y,X,Z"
        );
        assert!(m.last_row().is_rounds());
    }

    #[test]
    fn plain_bob_courses() {
        let six = plain_bob_course(6).unwrap();
        assert_eq!(six.transition_count(), 60);
        assert_eq!(six.alphabet()[2].perm, parse_cycles("(3 4)(5 6)", 6).unwrap());
        assert_eq!(six.alphabet()[3].perm, parse_cycles("(2 3)(5 6)", 6).unwrap());
        let five = plain_bob_course(5).unwrap();
        assert_eq!(five.transition_count(), 40);
        for n in 4..=8 {
            assert_eq!(
                plain_bob_course(n).unwrap().transition_count(),
                2 * n * (n - 1),
                "n = {n}"
            );
        }
        assert!(matches!(plain_bob_course(3), Err(Error::Stage { .. })));
    }

    #[test]
    fn grandsire_courses() {
        let five = grandsire_course(5).unwrap();
        assert_eq!(five.transition_count(), 30);
        assert_eq!(five.word_labels()[..10].join(","), "Z,Y,X,Y,X,Y,X,Y,X,Y");
        assert_eq!(five.row_list().unwrap()[10], parse_row("1 2 5 3 4").unwrap());
        let seven = grandsire_course(7).unwrap();
        assert_eq!(seven.transition_count(), 70);
        let words = lead_words(&SchemeId::new(Family::Grandsire, 7)).unwrap();
        assert_eq!(words.plain_product(), parse_cycles("(3 4 6 7 5)", 7).unwrap());
        assert_eq!(words.bob_product(), parse_cycles("(2 4 7)(3 6 5)", 7).unwrap());
        let bob: Vec<&str> = words
            .bob
            .iter()
            .map(|&w| words.alphabet[w as usize].label.as_str())
            .collect();
        assert_eq!(bob.join(","), "Z,Y,X,Y,X,Y,X,Y,X,Y,X,Y,Z,Y");
        assert!(matches!(grandsire_course(6), Err(Error::Stage { .. })));
        assert!(matches!(grandsire_course(3), Err(Error::Stage { .. })));
    }

    #[test]
    fn ccdd() {
        let m = ccdd_course().unwrap();
        assert_eq!(m.row_count(), 61);
        let words = lead_words(&SchemeId::new(Family::Ccdd, 5)).unwrap();
        let (_, y) = hunting_pair(5).unwrap();
        let lead_gen = y.inverse().compose(&words.alphabet[2].perm).unwrap();
        assert_eq!(lead_gen, parse_cycles("(1 2 3)(4 5)", 5).unwrap());
        assert_eq!(lead_gen.order(), 6);
    }

    #[test]
    fn expanding_compositions() {
        let pb6 = lead_scheme(&"plain-bob-6".parse().unwrap()).unwrap();
        let comp = CompositionFile::from_letters("plain-bob-6", "PPPPB PPPPB PPPPB").unwrap();
        let m = expand_leads(&pb6, &comp).unwrap();
        assert_eq!(m.transition_count(), 180);
        assert!(m.last_row().is_rounds());

        let ccdd = lead_scheme(&"ccdd-5".parse().unwrap()).unwrap();
        let comp = CompositionFile::from_letters("ccdd-5", "PPPB PPPB PPPB").unwrap();
        assert_eq!(expand_leads(&ccdd, &comp).unwrap().transition_count(), 120);

        let gr5 = lead_scheme(&"grandsire-5".parse().unwrap()).unwrap();
        let comp = CompositionFile::from_letters("grandsire-5", "BPBPBP").unwrap();
        let m = expand_leads(&gr5, &comp).unwrap();
        assert_eq!(m.transition_count(), 60);
        assert!(m.last_row().is_rounds());
        // two bobs three leads apart leave B P P B P P short of rounds
        let comp = CompositionFile::from_letters("grandsire-5", "BPPBPP").unwrap();
        let m = expand_leads(&gr5, &comp).unwrap();
        assert_eq!(m.transition_count(), 60);
        assert!(!m.last_row().is_rounds());

        let wrong = CompositionFile::from_letters("grandsire-7", "P").unwrap();
        assert!(matches!(expand_leads(&gr5, &wrong), Err(Error::Composition(_))));
    }

    #[test]
    fn rows_round_trip_through_from_rows() {
        let m = grandsire_course(5).unwrap();
        let rows = m.row_list().unwrap();
        let back = Method::from_rows("copy", &rows).unwrap();
        assert_eq!(back.row_list().unwrap(), rows);
    }
}
