//! Text formats: PACE-2017 `.gr` graphs and `.td` tree-decompositions, and
//! `.br` bramble certificates.
//!
//! All files use 1-based vertex ids; lines starting with `c` are comments.
//! Writers emit a canonical form that the parsers read back unchanged.

mod br;
mod gr;
mod td;

use thiserror::Error;

pub use br::{parse_br, write_br};
pub use gr::{parse_gr, write_gr};
pub use td::{parse_td, write_td};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("no header line")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: empty element")]
    EmptyElement { line: usize },
    #[error("line {line}: id {id} out of range 1..={max}")]
    IdOutOfRange { line: usize, id: usize, max: usize },
    #[error("line {line}: id {id} appears twice")]
    DuplicateId { line: usize, id: usize },
    #[error("header declares {expected} {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("bag graph is not a tree: {0}")]
    NotATree(String),
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let words: Vec<&str> = l.split_whitespace().collect();
        match words.first() {
            None => None,
            Some(w) if w.starts_with('c') => None,
            Some(_) => Some((i + 1, words)),
        }
    })
}

fn number(line: usize, word: &str) -> Result<usize, FormatError> {
    word.parse().map_err(|_| FormatError::Malformed {
        line,
        msg: format!("expected a non-negative integer, found {word:?}"),
    })
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>, FormatError> {
    words.iter().map(|w| number(line, w)).collect()
}

/// Converts 1-based ids to 0-based, checking the range.
fn vertices(line: usize, ids: &[usize], n: usize) -> Result<crate::VertexSet, FormatError> {
    ids.iter()
        .map(|&v| {
            if v == 0 || v > n {
                Err(FormatError::VertexOutOfRange { line, vertex: v, n })
            } else {
                Ok(v - 1)
            }
        })
        .collect()
}

fn write_ids(out: &mut String, set: &crate::VertexSet) {
    for v in set {
        out.push(' ');
        out.push_str(&(v + 1).to_string());
    }
}
