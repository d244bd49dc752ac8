//! Validation of methods against the ringing rules.
//!
//! - 1: the first and last rows are rounds.
//! - 2: no row repeats, apart from the closing rounds.
//! - 3: each transition swaps disjoint adjacent pairs.
//! - 4M: each transition swaps exactly one pair.
//! - 4R: no bell stays in one position for three successive rows.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::methods::Method;
use crate::perm::Row;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ruleset {
    Motel,
    Ringers,
}

impl FromStr for Ruleset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "motel" => Ok(Ruleset::Motel),
            "ringers" => Ok(Ruleset::Ringers),
            other => Err(Error::Format {
                path: "ruleset".into(),
                message: format!("unknown ruleset `{other}`"),
            }),
        }
    }
}

impl fmt::Display for Ruleset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ruleset::Motel => "motel",
            Ruleset::Ringers => "ringers",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Rounds,
    Distinct,
    Transition,
    SingleSwap,
    NoTripleStay,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::Rounds => "1",
            Rule::Distinct => "2",
            Rule::Transition => "3",
            Rule::SingleSwap => "4M",
            Rule::NoTripleStay => "4R",
        }
    }

    pub fn of(ruleset: Ruleset) -> [Rule; 4] {
        match ruleset {
            Ruleset::Motel => [Rule::Rounds, Rule::Distinct, Rule::Transition, Rule::SingleSwap],
            Ruleset::Ringers => [Rule::Rounds, Rule::Distinct, Rule::Transition, Rule::NoTripleStay],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    /// 0-based row index.
    pub row: usize,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ruleset: Ruleset,
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub is_extent: bool,
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

/// Row count of an extent: `n! + 1`, or the single row at stage 1.
pub fn extent_length(n: usize) -> Option<usize> {
    if n == 1 {
        Some(1)
    } else {
        factorial(n).and_then(|f| f.checked_add(1))
    }
}

/// Checks the listed rules and returns every violation found.
pub fn check_rules(m: &Method, rules: &[Rule]) -> Vec<Violation> {
    let rows = m.row_count();
    let mut out = Vec::new();
    if rules.contains(&Rule::Rounds) {
        if !m.start().is_rounds() {
            out.push(Violation {
                rule: "1",
                row: 0,
                description: format!("first row {} is not rounds", m.start()),
            });
        }
        let last = m.last_row();
        if !last.is_rounds() {
            out.push(Violation {
                rule: "1",
                row: rows - 1,
                description: format!("last row {last} is not rounds"),
            });
        }
    }
    if rules.contains(&Rule::Distinct) {
        let interior = rows.saturating_sub(1).max(1);
        let mut first_seen: HashMap<Row, usize> = HashMap::with_capacity(interior);
        for (i, r) in m.rows().take(interior).enumerate() {
            if let Some(&j) = first_seen.get(&r) {
                out.push(Violation {
                    rule: "2",
                    row: i,
                    description: format!("row {r} repeats row {j}"),
                });
            } else {
                first_seen.insert(r, i);
            }
        }
    }
    for (i, t) in m.transitions().enumerate() {
        if rules.contains(&Rule::Transition) && !t.is_transition() {
            out.push(Violation {
                rule: "3",
                row: i + 1,
                description: format!("{t} is not a change of adjacent pairs"),
            });
        }
        if rules.contains(&Rule::SingleSwap) && !t.is_single_swap() {
            out.push(Violation {
                rule: "4M",
                row: i + 1,
                description: format!("{t} does not swap exactly one pair"),
            });
        }
    }
    if rules.contains(&Rule::NoTripleStay) {
        out.extend(triple_stays(m));
    }
    out
}

/// Windows of three successive rows with a bell in the same place. When
/// the method returns to its start the windows wrap around.
fn triple_stays(m: &Method) -> Vec<Violation> {
    let rows: Vec<Row> = m.rows().collect();
    let n = m.stage();
    let mut out = Vec::new();
    let mut check = |a: &Row, b: &Row, c: &Row, at: usize| {
        for pos in 1..=n {
            let bell = a.bell_at(pos);
            if b.bell_at(pos) == bell && c.bell_at(pos) == bell {
                out.push(Violation {
                    rule: "4R",
                    row: at,
                    description: format!("bell {bell} stays in position {pos} for three rows"),
                });
            }
        }
    };
    for i in 0..rows.len().saturating_sub(2) {
        check(&rows[i], &rows[i + 1], &rows[i + 2], i + 2);
    }
    let len = rows.len() - 1;
    if len >= 2 && rows[0] == rows[len] {
        check(&rows[len - 1], &rows[0], &rows[1], 1);
    }
    out
}

pub fn validate(m: &Method, ruleset: Ruleset) -> ValidationReport {
    let violations = check_rules(m, &Rule::of(ruleset));
    let passed = violations.is_empty();
    ValidationReport {
        ruleset,
        passed,
        is_extent: passed && Some(m.row_count()) == extent_length(m.stage()),
        violations,
    }
}

/// Passes the ringers rules with `n! + 1` rows.
pub fn is_extent(m: &Method) -> bool {
    validate(m, Ruleset::Ringers).is_extent
}

/// Rules 1 to 3 hold and the rows before the closing rounds are every
/// arrangement of the bells exactly once.
pub fn covers_every_row(m: &Method) -> bool {
    Some(m.row_count()) == extent_length(m.stage())
        && check_rules(m, &[Rule::Rounds, Rule::Distinct, Rule::Transition]).is_empty()
}
