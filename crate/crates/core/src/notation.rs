//! Textual formats: cycle notation, rows, and the JSON method and
//! composition files.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leads::SchemeId;
use crate::methods::Method;
use crate::perm::{Perm, Row};

/// Parses cycle notation such as `(1 2)(3 4)` into a permutation of degree
/// `n`. Cycles need not be disjoint; they are composed left to right.
/// `()` denotes the identity.
pub fn parse_cycles(text: &str, n: usize) -> Result<Perm> {
    let mut acc = Perm::identity(n)?;
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles = 0usize;
    let syntax = |offset: usize, message: &str| Error::Syntax {
        offset,
        message: message.to_string(),
    };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c != b'(' {
            return Err(syntax(i, "expected `(`"));
        }
        i += 1;
        let mut points = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(syntax(i, "unclosed `(`"));
            }
            match bytes[i] {
                b')' => {
                    i += 1;
                    break;
                }
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let point: usize = text[start..i].parse().map_err(|_| syntax(start, "number too large"))?;
                    if point == 0 || point > n {
                        return Err(Error::Point { point, degree: n });
                    }
                    if points.contains(&point) {
                        return Err(Error::Cycle(point));
                    }
                    points.push(point);
                }
                _ => return Err(syntax(i, "unexpected character in cycle")),
            }
        }
        cycles += 1;
        if points.len() > 1 {
            acc = acc.then_unchecked(&Perm::cycle(n, &points)?);
        }
    }
    if cycles == 0 {
        return Err(syntax(0, "empty input; write `()` for the identity"));
    }
    Ok(acc)
}

/// Canonical disjoint-cycle form: cycles ordered by smallest point, each
/// starting at its smallest point, fixed points omitted, identity `()`.
pub fn format_cycles(p: &Perm) -> String {
    let cycles = p.cycles(false);
    if cycles.is_empty() {
        return "()".to_string();
    }
    let mut out = String::new();
    for c in cycles {
        out.push('(');
        let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push(')');
    }
    out
}

/// Parses a row. Bells are separated by whitespace; a row of at most nine
/// bells may also be written without separators (`12345`).
pub fn parse_row(text: &str) -> Result<Row> {
    let text = text.trim();
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let bells: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 {
        let t = tokens[0];
        if t.len() > 9 || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Row(format!(
                "cannot split `{t}` into bells; separate bells with spaces"
            )));
        }
        t.bytes().map(|b| (b - b'0') as usize).collect()
    } else {
        tokens
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Row(format!("`{t}` is not a bell number")))
            })
            .collect::<Result<_>>()?
    };
    Row::new(&bells)
}

pub fn format_row(row: &Row) -> String {
    let parts: Vec<String> = row.bells().map(|b| b.to_string()).collect();
    parts.join(" ")
}

/// Parses one row per non-blank line.
pub fn parse_rows(text: &str) -> Result<Vec<Row>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_row(l).map_err(|e| match e {
                Error::Row(m) => Error::Row(format!("line {}: {m}", i + 1)),
                other => other,
            })
        })
        .collect()
}

/// One row per line, each newline-terminated.
pub fn format_rows<'a>(rows: impl IntoIterator<Item = &'a Row>) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format_row(r));
        out.push('\n');
    }
    out
}

/// JSON form of a method: a stage, a name, an optional start row (rounds
/// when absent) and one cycle-notation string per transition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MethodFile {
    pub stage: usize,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start_row: Option<String>,
    pub transitions: Vec<String>,
}

impl MethodFile {
    pub fn from_method(m: &Method) -> MethodFile {
        MethodFile {
            stage: m.stage(),
            name: m.name().to_string(),
            start_row: Some(format_row(m.start())),
            transitions: m.transitions().map(format_cycles).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fmt_err = |path: String, message: String| Error::Format { path, message };
        if self.stage == 0 {
            return Err(fmt_err("stage".into(), "stage must be at least 1".into()));
        }
        if self.name.trim().is_empty() {
            return Err(fmt_err("name".into(), "name must be non-empty".into()));
        }
        if let Some(start) = &self.start_row {
            let row = parse_row(start).map_err(|e| fmt_err("start_row".into(), e.to_string()))?;
            if row.stage() != self.stage {
                return Err(fmt_err(
                    "start_row".into(),
                    format!("row has {} bells, stage is {}", row.stage(), self.stage),
                ));
            }
        }
        for (i, t) in self.transitions.iter().enumerate() {
            parse_cycles(t, self.stage).map_err(|e| fmt_err(format!("transitions[{i}]"), e.to_string()))?;
        }
        Ok(())
    }

    pub fn to_method(&self) -> Result<Method> {
        self.validate()?;
        let start = match &self.start_row {
            Some(s) => parse_row(s)?,
            None => Row::rounds(self.stage)?,
        };
        let transitions = self
            .transitions
            .iter()
            .map(|t| parse_cycles(t, self.stage))
            .collect::<Result<Vec<_>>>()?;
        Method::from_transitions(&self.name, start, transitions)
    }
}

/// Lead label of a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lead {
    #[serde(rename = "P")]
    Plain,
    #[serde(rename = "B")]
    Bob,
}

impl Lead {
    pub fn symbol(self) -> char {
        match self {
            Lead::Plain => 'P',
            Lead::Bob => 'B',
        }
    }

    /// Index into a scheme's generator pair `[P, B]`.
    pub fn index(self) -> usize {
        match self {
            Lead::Plain => 0,
            Lead::Bob => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Lead> {
        match i {
            0 => Some(Lead::Plain),
            1 => Some(Lead::Bob),
            _ => None,
        }
    }
}

/// JSON form of a composition: a lead scheme and a sequence of leads.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionFile {
    pub scheme: String,
    pub leads: Vec<Lead>,
}

impl CompositionFile {
    pub fn new(scheme: &SchemeId, leads: Vec<Lead>) -> CompositionFile {
        CompositionFile {
            scheme: scheme.to_string(),
            leads,
        }
    }

    /// Parses a compact lead string such as `"PPPB PPPB"` or `"P,P,B"`.
    pub fn from_letters(scheme: &str, letters: &str) -> Result<CompositionFile> {
        let leads = letters
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                'P' => Ok(Lead::Plain),
                'B' => Ok(Lead::Bob),
                other => Err(Error::Composition(format!("unknown lead label `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let comp = CompositionFile {
            scheme: scheme.to_string(),
            leads,
        };
        comp.validate()?;
        Ok(comp)
    }

    pub fn letters(&self) -> String {
        self.leads.iter().map(|l| l.symbol()).collect()
    }

    pub fn validate(&self) -> Result<()> {
        self.scheme.parse::<SchemeId>().map_err(|e| Error::Format {
            path: "scheme".into(),
            message: e.to_string(),
        })?;
        if self.leads.is_empty() {
            return Err(Error::Format {
                path: "leads".into(),
                message: "a composition needs at least one lead".into(),
            });
        }
        Ok(())
    }
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::Format {
            path,
            message: e.into_inner().to_string(),
        }
    })
}

pub fn method_file_from_json(text: &str) -> Result<MethodFile> {
    let file: MethodFile = from_json(text)?;
    file.validate()?;
    Ok(file)
}

pub fn method_file_to_json(file: &MethodFile) -> String {
    serde_json::to_string_pretty(file).expect("method file serializes")
}

pub fn composition_file_from_json(text: &str) -> Result<CompositionFile> {
    let file: CompositionFile = from_json(text)?;
    file.validate()?;
    Ok(file)
}

pub fn composition_file_to_json(file: &CompositionFile) -> String {
    serde_json::to_string_pretty(file).expect("composition file serializes")
}

pub fn read_method_file(path: impl AsRef<Path>) -> Result<MethodFile> {
    let mut text = String::new();
    fs::File::open(path)?.read_to_string(&mut text)?;
    method_file_from_json(&text)
}

pub fn write_method_file(path: impl AsRef<Path>, file: &MethodFile) -> Result<()> {
    let mut out = fs::File::create(path)?;
    out.write_all(method_file_to_json(file).as_bytes())?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn read_composition_file(path: impl AsRef<Path>) -> Result<CompositionFile> {
    composition_file_from_json(&fs::read_to_string(path)?)
}

pub fn write_composition_file(path: impl AsRef<Path>, file: &CompositionFile) -> Result<()> {
    fs::write(path, composition_file_to_json(file) + "\n")?;
    Ok(())
}
