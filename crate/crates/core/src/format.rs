//! The PosetFile text format and DOT export.
//!
//! ```text
//! # comment
//! poset w9
//! points 9
//! covers
//! 0 3
//! 0 4
//! ```
//!
//! A document names the space, gives the number of points and then lists cover
//! pairs `i j` (meaning `i ⋖ j`), one per line. `#` starts a comment and blank
//! lines are ignored. Serialization always emits the transitive reduction with
//! pairs sorted ascending and no comments, so parse followed by serialize is a
//! normal form.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::poset::{FinitePoset, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: expected `{expected}`")]
    Expected { line: usize, expected: &'static str },
    #[error("line {line}: invalid number `{token}`")]
    BadNumber { line: usize, token: String },
    #[error("line {line}: unexpected trailing token `{token}`")]
    Trailing { line: usize, token: String },
    #[error("missing `{0}` header")]
    MissingHeader(&'static str),
    #[error("line {line}: {source}")]
    Poset {
        line: usize,
        #[source]
        source: PosetError,
    },
}

/// A named finite space as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetFile {
    pub name: String,
    pub poset: FinitePoset,
}

impl PosetFile {
    pub fn new(name: impl Into<String>, poset: FinitePoset) -> Self {
        let mut name: String = name.into();
        name.retain(|c| !c.is_whitespace() && c != '#');
        if name.is_empty() {
            name.push_str("unnamed");
        }
        PosetFile { name, poset }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (line, header) = lines.next().ok_or(FormatError::MissingHeader("poset"))?;
        let name = keyword_value(line, header, "poset", "poset <name>")?;

        let (line, header) = lines.next().ok_or(FormatError::MissingHeader("points"))?;
        let count = keyword_value(line, header, "points", "points <n>")?;
        let n = parse_index(line, count)?;

        let (line, header) = lines.next().ok_or(FormatError::MissingHeader("covers"))?;
        if header != "covers" {
            return Err(FormatError::Expected {
                line,
                expected: "covers",
            });
        }

        let mut covers = Vec::new();
        let mut last_line = line;
        for (line, body) in lines {
            let mut tokens = body.split_whitespace();
            let (Some(i), Some(j)) = (tokens.next(), tokens.next()) else {
                return Err(FormatError::Expected {
                    line,
                    expected: "<i> <j>",
                });
            };
            if let Some(extra) = tokens.next() {
                return Err(FormatError::Trailing {
                    line,
                    token: extra.to_string(),
                });
            }
            let pair = (parse_index(line, i)?, parse_index(line, j)?);
            for p in [pair.0, pair.1] {
                if p >= n {
                    return Err(FormatError::Poset {
                        line,
                        source: PosetError::PointOutOfRange { point: p, n },
                    });
                }
            }
            covers.push(pair);
            last_line = line;
        }
        let poset = FinitePoset::from_covers(n, &covers).map_err(|source| FormatError::Poset {
            line: last_line,
            source,
        })?;
        Ok(PosetFile {
            name: name.to_string(),
            poset,
        })
    }
}

fn keyword_value<'a>(
    line: usize,
    text: &'a str,
    keyword: &str,
    expected: &'static str,
) -> Result<&'a str, FormatError> {
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(FormatError::Expected { line, expected });
    }
    let value = tokens.next().ok_or(FormatError::Expected { line, expected })?;
    if let Some(extra) = tokens.next() {
        return Err(FormatError::Trailing {
            line,
            token: extra.to_string(),
        });
    }
    Ok(value)
}

fn parse_index(line: usize, token: &str) -> Result<usize, FormatError> {
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FormatError::BadNumber {
            line,
            token: token.to_string(),
        });
    }
    token.parse().map_err(|_| FormatError::BadNumber {
        line,
        token: token.to_string(),
    })
}

impl FromStr for PosetFile {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, FormatError> {
        PosetFile::parse(s)
    }
}

impl fmt::Display for PosetFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "poset {}", self.name)?;
        writeln!(f, "points {}", self.poset.len())?;
        writeln!(f, "covers")?;
        for (i, j) in self.poset.covers() {
            writeln!(f, "{i} {j}")?;
        }
        Ok(())
    }
}

/// Graphviz rendering of the Hasse diagram, bottom to top, one rank per level.
pub fn to_dot(name: &str, poset: &FinitePoset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "'"));
    out.push_str("  rankdir=BT;\n  node [shape=circle];\n");
    let levels = poset.levels();
    let top = levels.iter().copied().max();
    if let Some(top) = top {
        for level in 0..=top {
            let members: Vec<String> = (0..poset.len())
                .filter(|&x| levels[x] == level)
                .map(|x| x.to_string())
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", members.join("; "));
        }
    }
    for (i, j) in poset.covers() {
        let _ = writeln!(out, "  {i} -> {j};");
    }
    out.push_str("}\n");
    out
}
