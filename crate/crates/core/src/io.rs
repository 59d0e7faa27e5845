//! Text formats: edge lists, walk files and DOT export.
//!
//! Edge-list files hold one `u v` pair per line (0-indexed, whitespace
//! separated). Lines starting with `#` are comments. An optional first data
//! line `n <count>` fixes the vertex count; otherwise it is one more than the
//! largest index seen.
//!
//! Walk files hold whitespace-separated vertex indices. An empty file is the
//! empty walk.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Walk};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_data = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two fields, found {}", fields.len()),
            });
        }
        if fields[0] == "n" {
            if seen_data {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "`n` line must come before any edge".into(),
                });
            }
            n = Some(parse_index(fields[1], line_no)?);
            seen_data = true;
            continue;
        }
        seen_data = true;
        edges.push((parse_index(fields[0], line_no)?, parse_index(fields[1], line_no)?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}

pub fn parse_walk(text: &str) -> Result<Walk> {
    let mut vertices = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            vertices.push(parse_index(tok, idx + 1)?);
        }
    }
    Ok(Walk::new(vertices))
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{tok}` is not a vertex index"),
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT rendering of `G + W`: base edges are solid undirected lines, walk
/// edges are red arcs numbered in traversal order.
pub fn to_dot(g: &Graph, w: &Walk) -> String {
    let mut out = String::from("digraph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -> {v} [dir=none, style=solid];");
    }
    for (i, (u, v)) in w.steps().enumerate() {
        let _ = writeln!(out, "  {u} -> {v} [color=red, label=\"{}\"];", i + 1);
    }
    out.push_str("}\n");
    out
}
