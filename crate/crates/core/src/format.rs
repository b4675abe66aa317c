//! Line-oriented graph text format.
//!
//! ```text
//! # comment
//! n 4
//! e 0 1
//! e 1 2 T
//! ```
//!
//! The first non-comment line declares the vertex count. Each `e` line adds
//! one edge; an optional third field precolors it with an opaque token.
//! Blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, PartialColoring};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `n <vertex_count>` header")]
    MissingHeader,
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// A parsed graph file: the graph and whatever edge tokens it carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub coloring: PartialColoring,
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    let mut tokens = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let syntax = |message: &str| ParseError::Syntax {
            line,
            message: message.to_owned(),
        };
        match (fields[0], vertex_count) {
            ("n", None) => {
                if fields.len() != 2 {
                    return Err(syntax("expected `n <vertex_count>`"));
                }
                vertex_count = Some(parse_number(fields[1], line)?);
            }
            ("n", Some(_)) => return Err(syntax("duplicate `n` line")),
            (_, None) => return Err(ParseError::MissingHeader),
            ("e", Some(_)) => {
                if !(3..=4).contains(&fields.len()) {
                    return Err(syntax("expected `e <u> <v> [token]`"));
                }
                edges.push((parse_number(fields[1], line)?, parse_number(fields[2], line)?));
                tokens.push(fields.get(3).map(|t| Color::from(*t)));
                lines.push(line);
            }
            (other, Some(_)) => {
                return Err(syntax(&format!("unknown line type `{other}`")));
            }
        }
    }
    let vertex_count = vertex_count.ok_or(ParseError::MissingHeader)?;
    let graph = Graph::new(vertex_count, edges.iter().copied()).map_err(|source| {
        // point at the first offending edge line
        let line = first_bad_line(vertex_count, &edges, &lines);
        ParseError::Graph { line, source }
    })?;
    Ok(GraphFile {
        graph,
        coloring: PartialColoring::new(tokens),
    })
}

fn first_bad_line(vertex_count: usize, edges: &[(usize, usize)], lines: &[usize]) -> usize {
    for i in 0..edges.len() {
        if Graph::new(vertex_count, edges[..=i].iter().copied()).is_err() {
            return lines[i];
        }
    }
    0
}

fn parse_number(field: &str, line: usize) -> Result<usize, ParseError> {
    field.parse().map_err(|_| ParseError::Syntax {
        line,
        message: format!("`{field}` is not a vertex id"),
    })
}

/// Writes `g` in the text format, attaching tokens from `coloring` if given.
pub fn write_graph(g: &Graph, coloring: Option<&PartialColoring>) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.vertex_count()).unwrap();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match coloring.and_then(|c| c.get(e)) {
            Some(token) => writeln!(out, "e {u} {v} {token}").unwrap(),
            None => writeln!(out, "e {u} {v}").unwrap(),
        }
    }
    out
}
