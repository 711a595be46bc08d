//! Edge-list files: a header line `n m`, then `m` lines `u v` with 0-based
//! vertices. `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use boxkit_core::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: expected two non-negative integers")]
    Malformed { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: repeated edge {u} {v}")]
    Repeated { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("invalid graph: {0}")]
    Graph(#[from] boxkit_core::Error),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(ParseError::Malformed { line }),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, declared) = pair(hline, header)?;
    let mut g = Graph::empty(n)?;
    let mut found = 0;
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if let Some(&vertex) = [u, v].iter().find(|&&x| x >= n) {
            return Err(ParseError::OutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if g.has_edge(u, v) {
            return Err(ParseError::Repeated { line, u, v });
        }
        g.add_edge(u, v)?;
        found += 1;
    }
    if found != declared {
        return Err(ParseError::EdgeCount { declared, found });
    }
    Ok(g)
}

/// Canonical form: header, then edges `u < v` in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn read_graph(path: &Path) -> Result<Graph, ParseError> {
    let text = fs::read_to_string(path).map_err(|e| ParseError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_edge_list(&text)
}
