//! Edge-list and DIMACS graph files, and vertex-set files.
//!
//! Edge lists hold one `u v` pair per line with 0-based ids; a line with a
//! single id declares an isolated vertex. DIMACS files start with
//! `p edge n m`, list edges as `e u v` with 1-based ids, and use `c` for
//! comments. Both writers are canonical: vertices ascending, each edge once
//! with the smaller endpoint first.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use semitotal_core::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u64 },
    #[error("vertex {0} is not part of the graph")]
    UnknownVertex(u64),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    #[value(name = "edgelist")]
    EdgeList,
    Dimacs,
}

impl Format {
    /// Difference between on-disk and internal ids.
    fn offset(self) -> u64 {
        match self {
            Format::EdgeList => 0,
            Format::Dimacs => 1,
        }
    }

    pub fn vertex_to_disk(self, v: Vertex) -> u64 {
        u64::from(v) + self.offset()
    }

    pub fn vertex_from_disk(self, id: u64, line: usize) -> Result<Vertex, ParseError> {
        let min = self.offset();
        if id < min {
            return Err(malformed(line, format!("vertex ids start at {min}")));
        }
        Vertex::try_from(id - min).map_err(|_| malformed(line, format!("vertex id {id} is too large")))
    }
}

fn malformed(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed { line, message: message.into() }
}

fn number<T: FromStr>(token: &str, line: usize) -> Result<T, ParseError> {
    token.parse().map_err(|_| malformed(line, format!("expected a non-negative integer, found `{token}`")))
}

/// Content lines with their 1-based numbers, comments and blanks dropped.
fn lines<'a>(text: &'a str, comment: &'a str) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let body = raw.split(comment).next().unwrap_or("").trim();
        (!body.is_empty()).then(|| (i + 1, body.split_whitespace().collect()))
    })
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn build(vertices: BTreeSet<Vertex>, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::from_edges(vertices, edges).expect("endpoints are declared and self-loops rejected")
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut vertices = BTreeSet::new();
    let mut edges = Vec::new();
    for (line, tokens) in lines(text, "#") {
        match tokens[..] {
            [v] => {
                vertices.insert(Format::EdgeList.vertex_from_disk(number(v, line)?, line)?);
            }
            [u, v] => {
                let (u, v) = (number::<u64>(u, line)?, number::<u64>(v, line)?);
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                let (u, v) = (Format::EdgeList.vertex_from_disk(u, line)?, Format::EdgeList.vertex_from_disk(v, line)?);
                vertices.extend([u, v]);
                edges.push((u, v));
            }
            _ => return Err(malformed(line, "expected `u v` or a single vertex id")),
        }
    }
    Ok(build(vertices, edges))
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, u64, u64)> = None;
    let mut vertices = BTreeSet::new();
    let mut edges = Vec::new();
    let content = text.lines().enumerate().filter_map(|(i, raw)| {
        let t: Vec<&str> = raw.split_whitespace().collect();
        (!t.is_empty() && t[0] != "c").then_some((i + 1, t))
    });
    for (line, tokens) in content {
        match tokens[..] {
            ["p", kind, n, m] => {
                if header.is_some() {
                    return Err(malformed(line, "second `p` line"));
                }
                if !edges.is_empty() {
                    return Err(malformed(line, "`p` line after edges"));
                }
                if kind != "edge" && kind != "col" {
                    return Err(malformed(line, format!("unsupported problem type `{kind}`")));
                }
                let n: u64 = number(n, line)?;
                header = Some((line, n, number(m, line)?));
                for id in 1..=n {
                    vertices.insert(Format::Dimacs.vertex_from_disk(id, line)?);
                }
            }
            ["e", u, v] => {
                let (u, v) = (number::<u64>(u, line)?, number::<u64>(v, line)?);
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                if let Some((_, n, _)) = header {
                    if let Some(x) = [u, v].into_iter().find(|&x| x > n) {
                        return Err(malformed(line, format!("vertex {x} exceeds the declared count {n}")));
                    }
                }
                let (u, v) = (Format::Dimacs.vertex_from_disk(u, line)?, Format::Dimacs.vertex_from_disk(v, line)?);
                vertices.extend([u, v]);
                edges.push((u, v));
            }
            _ => return Err(malformed(line, "expected `p edge n m`, `e u v` or a `c` comment")),
        }
    }
    if let Some((line, _, m)) = header {
        if edges.len() as u64 != m {
            return Err(malformed(line, format!("header declares {m} edges, found {}", edges.len())));
        }
    }
    Ok(build(vertices, edges))
}

/// Canonical text for `g`.
///
/// DIMACS needs ids `0..n`; graphs with gaps are written compacted, with a
/// `c vertex <new> <old>` comment per vertex recording the original ids.
pub fn write_graph(g: &Graph, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::EdgeList => {
            for v in g.vertices() {
                let ns = g.neighbors(v).expect("own vertex");
                if ns.is_empty() {
                    writeln!(out, "{v}").unwrap();
                }
                for &u in ns.range(v + 1..) {
                    writeln!(out, "{v} {u}").unwrap();
                }
            }
        }
        Format::Dimacs => {
            let (dense, old) = g.compacted();
            let relabeled = old.iter().enumerate().any(|(i, &v)| i as Vertex != v);
            writeln!(out, "p edge {} {}", dense.vertex_count(), dense.edge_count()).unwrap();
            if relabeled {
                for (i, &v) in old.iter().enumerate() {
                    writeln!(out, "c vertex {} {v}", i + 1).unwrap();
                }
            }
            for (u, v) in dense.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}

/// Reads whitespace- or comma-separated vertex ids, `#` comments allowed,
/// using the id convention of `format`. Every id must belong to `g`.
pub fn parse_vertex_set(text: &str, format: Format, g: &Graph) -> Result<VertexSet, ParseError> {
    let mut set = VertexSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        for token in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let id: u64 = number(token, line)?;
            let v = format.vertex_from_disk(id, line).map_err(|_| ParseError::UnknownVertex(id))?;
            if !g.contains(v) {
                return Err(ParseError::UnknownVertex(id));
            }
            set.insert(v);
        }
    }
    Ok(set)
}

/// Space-separated ids in the convention of `format`.
pub fn write_vertex_set(set: &VertexSet, format: Format) -> String {
    set.iter().map(|&v| format.vertex_to_disk(v).to_string()).collect::<Vec<_>>().join(" ")
}
