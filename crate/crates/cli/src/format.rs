//! The line-based poset file format.
//!
//! ```text
//! # the three-element chain
//! elements: a b c
//! le: a b
//! le: b c
//! ```
//!
//! `#` starts a comment line, blank lines are ignored, there is exactly one
//! `elements:` line and any number of `le: A B` lines. Relations may be
//! given by any generators; the order is their reflexive-transitive closure.

use posetrep_core::Poset;

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: expected `key: value`")]
    MissingColon { line: usize },
    #[error("line {line}: a second `elements:` line")]
    RepeatedElements { line: usize },
    #[error("line {line}: `le:` takes exactly two names")]
    BadRelation { line: usize },
    #[error("line {line}: unknown element {name:?}")]
    UnknownElement { line: usize, name: String },
    #[error("no `elements:` line")]
    MissingElements,
    #[error(transparent)]
    Poset(#[from] posetrep_core::Error),
}

pub fn parse_poset(text: &str) -> Result<Poset, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut relations: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed.split_once(':').ok_or(ParseError::MissingColon { line })?;
        let words: Vec<&str> = value.split_whitespace().collect();
        match key.trim() {
            "elements" => {
                if names.is_some() {
                    return Err(ParseError::RepeatedElements { line });
                }
                names = Some(words.iter().map(|w| w.to_string()).collect());
            }
            "le" => match words[..] {
                [a, b] => relations.push((line, a.to_string(), b.to_string())),
                _ => return Err(ParseError::BadRelation { line }),
            },
            other => {
                return Err(ParseError::UnknownKey { line, key: other.to_string() });
            }
        }
    }
    let names = names.ok_or(ParseError::MissingElements)?;
    let lookup = |line: usize, name: &str| {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ParseError::UnknownElement { line, name: name.to_string() })
    };
    let pairs = relations
        .iter()
        .map(|(line, a, b)| Ok((lookup(*line, a)?, lookup(*line, b)?)))
        .collect::<Result<Vec<_>, ParseError>>()?;
    Ok(Poset::new(names, &pairs)?)
}

/// Writes the elements in index order and the covering relation.
pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("elements: {}\n", p.names().join(" "));
    for (a, b) in p.covers() {
        out.push_str(&format!("le: {} {}\n", p.name(a), p.name(b)));
    }
    out
}
