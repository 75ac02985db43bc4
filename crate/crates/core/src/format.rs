//! The `.pav` matroid file format.
//!
//! Line oriented; `#` starts a comment and blank lines are ignored. Header
//! lines come in this order, `name` being optional:
//!
//! ```text
//! name ag32_prime
//! elements 8
//! rank 4
//! rep paving
//! set { 1 2 3 4 }
//! set { 1 2 5 6 }
//! ```
//!
//! `rep paving` lists the nontrivial hyperplanes, `rep circuits` the circuits.
//! The canonical form sorts every set and the list of sets.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::Error;
use crate::matroid::{Matroid, Representation};
use crate::set::{ElementSet, MAX_ELEMENTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    Paving,
    Circuits,
}

impl RepKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RepKind::Paving => "paving",
            RepKind::Circuits => "circuits",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Semantic(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidFile {
    pub name: Option<String>,
    pub elements: usize,
    pub rank: usize,
    pub rep: RepKind,
    pub sets: Vec<ElementSet>,
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Names are single tokens and `#` starts a comment, so both are mapped to `_`.
fn name_token(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_whitespace() || c == '#' {
                '_'
            } else {
                c
            }
        })
        .collect()
}

impl MatroidFile {
    pub fn from_matroid(m: &Matroid) -> MatroidFile {
        let (rep, masks): (RepKind, Vec<u64>) = match m.representation() {
            Representation::Paving(p) => (RepKind::Paving, p.block_masks().to_vec()),
            Representation::Circuits(c) => (RepKind::Circuits, c.circuit_masks().to_vec()),
        };
        let mut sets: Vec<ElementSet> = masks.into_iter().map(|b| m.set(b)).collect();
        sets.sort();
        MatroidFile {
            name: m.name().map(name_token),
            elements: m.n(),
            rank: m.r(),
            rep,
            sets,
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid, FormatError> {
        let m = match self.rep {
            RepKind::Paving => Matroid::from_paving(self.elements, self.rank, &self.sets)?,
            RepKind::Circuits => {
                let m = Matroid::from_circuits(self.elements, &self.sets)?;
                if m.r() != self.rank {
                    return Err(Error::RankMismatch {
                        declared: self.rank,
                        computed: m.r(),
                    }
                    .into());
                }
                m
            }
        };
        Ok(match &self.name {
            Some(name) => m.with_name(name.clone()),
            None => m,
        })
    }

    /// Canonical text: sets sorted internally and as a list.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "name {name}");
        }
        let _ = writeln!(out, "elements {}", self.elements);
        let _ = writeln!(out, "rank {}", self.rank);
        let _ = writeln!(out, "rep {}", self.rep.as_str());
        let mut sets = self.sets.clone();
        sets.sort();
        for s in sets {
            out.push_str("set {");
            for e in s.iter() {
                let _ = write!(out, " {e}");
            }
            out.push_str(" }\n");
        }
        out
    }
}

fn parse_count(line: usize, field: &str, value: &str) -> Result<usize, FormatError> {
    value.parse().map_err(|_| {
        syntax(
            line,
            format!("'{field}' expects a nonnegative integer, got '{value}'"),
        )
    })
}

fn parse_set(line: usize, rest: &str, elements: usize) -> Result<ElementSet, FormatError> {
    let inner = rest
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| syntax(line, "set must be written as 'set { a b c }'"))?;
    let mut members = Vec::new();
    for tok in inner.split_whitespace() {
        let e: u32 = tok
            .parse()
            .map_err(|_| syntax(line, format!("'{tok}' is not an element id")))?;
        members.push(e);
    }
    Ok(ElementSet::new(elements, members)?)
}

/// Parses the text form. Structural checks only; see [`parse_matroid`].
pub fn parse(text: &str) -> Result<MatroidFile, FormatError> {
    let mut name = None;
    let mut elements = None;
    let mut rank = None;
    let mut rep = None;
    let mut sets = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = match content.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (content, ""),
        };
        let expect_missing =
            |field: &str| syntax(line, format!("missing field '{field}' before '{key}'"));
        match key {
            "name" => {
                if elements.is_some() || name.is_some() {
                    return Err(syntax(line, "'name' must be the first header line"));
                }
                if rest.is_empty() || rest.split_whitespace().count() != 1 {
                    return Err(syntax(line, "'name' takes a single token"));
                }
                name = Some(rest.to_string());
            }
            "elements" => {
                if elements.is_some() {
                    return Err(syntax(line, "duplicate 'elements'"));
                }
                let n = parse_count(line, "elements", rest)?;
                if n > MAX_ELEMENTS {
                    return Err(Error::GroundSetTooLarge(n).into());
                }
                elements = Some(n);
            }
            "rank" => {
                if elements.is_none() {
                    return Err(expect_missing("elements"));
                }
                if rank.is_some() {
                    return Err(syntax(line, "duplicate 'rank'"));
                }
                rank = Some(parse_count(line, "rank", rest)?);
            }
            "rep" => {
                if elements.is_none() {
                    return Err(expect_missing("elements"));
                }
                if rank.is_none() {
                    return Err(expect_missing("rank"));
                }
                if rep.is_some() {
                    return Err(syntax(line, "duplicate 'rep'"));
                }
                rep = Some(match rest {
                    "paving" => RepKind::Paving,
                    "circuits" => RepKind::Circuits,
                    other => {
                        return Err(syntax(
                            line,
                            format!("'rep' must be 'paving' or 'circuits', got '{other}'"),
                        ))
                    }
                });
            }
            "set" => {
                let Some(n) = elements else {
                    return Err(expect_missing("elements"));
                };
                if rank.is_none() {
                    return Err(expect_missing("rank"));
                }
                if rep.is_none() {
                    return Err(expect_missing("rep"));
                }
                sets.push(parse_set(line, rest, n)?);
            }
            other => return Err(syntax(line, format!("unknown keyword '{other}'"))),
        }
    }

    let end = last_line.max(1);
    let elements = elements.ok_or_else(|| syntax(end, "missing field 'elements'"))?;
    let rank = rank.ok_or_else(|| syntax(end, "missing field 'rank'"))?;
    let rep = rep.ok_or_else(|| syntax(end, "missing field 'rep'"))?;
    Ok(MatroidFile {
        name,
        elements,
        rank,
        rep,
        sets,
    })
}

pub fn parse_matroid(text: &str) -> Result<Matroid, FormatError> {
    parse(text)?.to_matroid()
}

pub fn serialize_matroid(m: &Matroid) -> String {
    MatroidFile::from_matroid(m).serialize()
}
