//! Text file formats.
//!
//! A hypergraph file is a header line `n k` followed by one line per edge,
//! each with k ascending vertex ids separated by single spaces, edges in
//! lexicographic order, and a trailing newline. Lines starting with `#` are
//! ignored. A pattern file is a header line with the vertex count followed by
//! one `a b` line per graph edge.

use crate::berge::PatternGraph;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> Result<Vec<(usize, &str)>> {
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(parse_err(text.lines().count(), "missing trailing newline"));
    }
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'))
        .collect())
}

/// Single-space separated non-negative integers, nothing else.
fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    if text.is_empty() {
        return Err(parse_err(line, "empty line"));
    }
    text.split(' ')
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(line, format!("expected a number, found {tok:?}")));
            }
            tok.parse().map_err(|_| parse_err(line, format!("number {tok} out of range")))
        })
        .collect()
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let lines = content_lines(text)?;
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_err(1, "missing header line \"n k\""));
    };
    let head = numbers(hline, header)?;
    let [n, k] = head[..] else {
        return Err(parse_err(hline, "header must be \"n k\""));
    };
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(lines.len() - 1);
    for &(no, line) in &lines[1..] {
        let edge = numbers(no, line)?;
        if edge.len() != k {
            return Err(parse_err(no, format!("edge has {} vertices, expected {k}", edge.len())));
        }
        if edge.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(no, "vertices must be strictly ascending"));
        }
        if let Some(&v) = edge.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if let Some(prev) = edges.last() {
            if *prev == edge {
                return Err(Error::DuplicateEdge(edge));
            }
            if *prev > edge {
                return Err(parse_err(no, "edges must be in lexicographic order"));
            }
        }
        edges.push(edge);
    }
    Hypergraph::new(n, k, edges)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.vertex_count(), h.uniformity());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_pattern_file(text: &str) -> Result<PatternGraph> {
    let lines = content_lines(text)?;
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_err(1, "missing vertex count"));
    };
    let [vertices] = numbers(hline, header)?[..] else {
        return Err(parse_err(hline, "header must be the vertex count"));
    };
    let mut edges = Vec::new();
    for &(no, line) in &lines[1..] {
        let [a, b] = numbers(no, line)?[..] else {
            return Err(parse_err(no, "pattern edges are \"a b\""));
        };
        edges.push((a, b));
    }
    PatternGraph::general(vertices, edges)
}

/// `path:m | cycle:m | star:m | matching:l | triangle`; `general:FILE` is
/// resolved by the caller, which owns file access.
pub fn parse_pattern_spec(spec: &str) -> std::result::Result<PatternSpec, String> {
    if spec == "triangle" {
        return Ok(PatternSpec::Graph(PatternGraph::Triangle));
    }
    let Some((name, arg)) = spec.split_once(':') else {
        return Err(format!("unknown pattern {spec:?}"));
    };
    if name == "general" {
        return Ok(PatternSpec::File(arg.to_string()));
    }
    let size: usize = arg.parse().map_err(|_| format!("bad pattern size {arg:?}"))?;
    let graph = match name {
        "path" => PatternGraph::Path(size),
        "cycle" => PatternGraph::Cycle(size),
        "star" => PatternGraph::Star(size),
        "matching" => PatternGraph::Matching(size),
        _ => return Err(format!("unknown pattern {name:?}")),
    };
    graph.validate().map_err(|e| e.to_string())?;
    Ok(PatternSpec::Graph(graph))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    Graph(PatternGraph),
    File(String),
}
