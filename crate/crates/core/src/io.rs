//! Reading and writing graphs, labelings and posets.
//!
//! Edge-list text: one edge `u v` per line, `#` starts a comment, and an
//! optional `vertices: ...` line declares isolated vertices. JSON graphs look
//! like `{"vertices": [...], "edges": [[u, v], ...]}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, Vertex};
use crate::labeling::{EdgeLabeling, LabelingError};
use crate::poset::CliquePoset;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_ids(s: &str, line: usize) -> Result<Vec<Vertex>, IoError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| IoError::Parse {
                line,
                msg: format!("bad vertex id {t:?}"),
            })
        })
        .collect()
}

/// Parses edge-list text. Lines may carry a third number, which is ignored
/// here and read by [`parse_labeling_text`].
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let (vertices, rows) = parse_rows(text)?;
    Ok(Graph::from_edges(
        vertices,
        rows.into_iter().map(|(u, v, _)| (u, v)),
    )?)
}

type Row = (Vertex, Vertex, Option<u32>);

fn parse_rows(text: &str) -> Result<(Vec<Vertex>, Vec<Row>), IoError> {
    let mut vertices = Vec::new();
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("vertices:") {
            vertices.extend(parse_ids(rest, line)?);
            continue;
        }
        let ids = parse_ids(body, line)?;
        match *ids.as_slice() {
            [u, v] => rows.push((u, v, None)),
            [u, v, l] => rows.push((u, v, Some(l))),
            _ => {
                return Err(IoError::Parse {
                    line,
                    msg: format!("expected `u v` or `u v label`, got {body:?}"),
                })
            }
        }
        if rows.last().is_some_and(|r| r.0 == r.1) {
            return Err(IoError::Parse {
                line,
                msg: format!("self-loop at {}", ids[0]),
            });
        }
    }
    Ok((vertices, rows))
}

#[derive(Deserialize)]
struct GraphJson {
    #[serde(default)]
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

pub fn parse_graph_json(text: &str) -> Result<Graph, IoError> {
    let g: GraphJson = serde_json::from_str(text)?;
    Ok(Graph::from_edges(g.vertices, g.edges)?)
}

/// JSON if the text starts with `{`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn graph_to_json(g: &Graph) -> Value {
    json!({
        "vertices": g.vertices().collect::<Vec<_>>(),
        "edges": g.edges().map(|e| [e.lo(), e.hi()]).collect::<Vec<_>>(),
    })
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let isolated: Vec<String> = g
        .vertices()
        .filter(|&v| g.nb(v).is_empty())
        .map(|v| v.to_string())
        .collect();
    if !isolated.is_empty() {
        let _ = writeln!(out, "vertices: {}", isolated.join(" "));
    }
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

#[derive(Deserialize)]
struct LabeledEdge {
    u: Vertex,
    v: Vertex,
    label: u32,
}

#[derive(Deserialize)]
struct LabelingJson {
    #[serde(default)]
    vertices: Vec<Vertex>,
    edges: Vec<LabeledEdge>,
}

pub fn labeling_to_json(lab: &EdgeLabeling) -> Value {
    json!({
        "vertices": lab.graph().vertices().collect::<Vec<_>>(),
        "edges": lab
            .iter()
            .map(|(e, l)| json!({"u": e.lo(), "v": e.hi(), "label": l}))
            .collect::<Vec<_>>(),
    })
}

pub fn parse_labeling_json(text: &str) -> Result<EdgeLabeling, IoError> {
    let l: LabelingJson = serde_json::from_str(text)?;
    Ok(EdgeLabeling::from_edges(
        l.vertices,
        l.edges.into_iter().map(|e| (e.u, e.v, e.label)),
    )?)
}

/// `u v label` lines, same comment and `vertices:` rules as edge lists.
pub fn parse_labeling_text(text: &str) -> Result<EdgeLabeling, IoError> {
    let (vertices, rows) = parse_rows(text)?;
    let mut labeled = Vec::with_capacity(rows.len());
    for (u, v, l) in rows {
        let l = l.ok_or_else(|| IoError::Parse {
            line: 0,
            msg: format!("edge {u} {v} has no label"),
        })?;
        labeled.push((u, v, l));
    }
    Ok(EdgeLabeling::from_edges(vertices, labeled)?)
}

pub fn parse_labeling(text: &str) -> Result<EdgeLabeling, IoError> {
    if text.trim_start().starts_with('{') {
        parse_labeling_json(text)
    } else {
        parse_labeling_text(text)
    }
}

/// Labels for `graph`'s edges taken from `lab`. Fails if the edge sets differ.
pub fn relabel_onto(graph: &Graph, lab: &EdgeLabeling) -> Result<EdgeLabeling, IoError> {
    let labels: BTreeMap<Edge, u32> = lab.iter().collect();
    Ok(EdgeLabeling::new(graph.clone(), labels)?)
}

const PALETTE: [&str; 8] = [
    "black",
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "cyan",
];

pub fn labeling_to_dot(lab: &EdgeLabeling) -> String {
    let mut out = String::from("graph G {\n");
    for v in lab.graph().vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, l) in lab.iter() {
        let color = PALETTE[(l as usize - 1) % PALETTE.len()];
        let _ = writeln!(
            out,
            "  {} -- {} [label=\"{l}\", color={color}];",
            e.lo(),
            e.hi()
        );
    }
    out.push_str("}\n");
    out
}

fn set_name(s: &crate::graph::VertexSet) -> String {
    let parts: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn poset_to_dot(p: &CliquePoset) -> String {
    let mut out = String::from("digraph P {\n  rankdir=BT;\n");
    for (i, n) in p.nodes().iter().enumerate() {
        let shape = if p.is_maximal(i) { "box" } else { "ellipse" };
        let _ = writeln!(out, "  n{i} [label=\"{}\", shape={shape}];", set_name(n));
    }
    for (lo, hi) in p.cover_pairs() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

pub fn poset_to_json(p: &CliquePoset) -> Value {
    json!({
        "nodes": p
            .nodes()
            .iter()
            .enumerate()
            .map(|(i, n)| json!({"id": i, "set": n, "rank": p.rank(i), "maximal": p.is_maximal(i)}))
            .collect::<Vec<_>>(),
        "covers": p.cover_pairs(),
    })
}
