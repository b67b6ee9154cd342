use std::fmt::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::graph::GkGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            "edges" | "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(Error::GraphParse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<u64>,
    edges: Vec<[u64; 2]>,
}

/// Deterministic serialization: ascending vertices, edges sorted by
/// `(min, max)`.
///
/// The edge list carries edges only, so isolated vertices do not survive a
/// round trip through it.
pub fn export(graph: &GkGraph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::Dot => {
            out.push_str("graph G {\n");
            for v in graph.vertices() {
                writeln!(out, "  {v};").unwrap();
            }
            for (a, b) in graph.edges() {
                writeln!(out, "  {a} -- {b};").unwrap();
            }
            out.push_str("}\n");
        }
        GraphFormat::Json => {
            let json = JsonGraph {
                vertices: graph.vertices().to_vec(),
                edges: graph.edges().map(|(a, b)| [a, b]).collect(),
            };
            out = serde_json::to_string(&json).expect("plain data serializes");
            out.push('\n');
        }
        GraphFormat::EdgeList => {
            for (a, b) in graph.edges() {
                writeln!(out, "{a} {b}").unwrap();
            }
        }
    }
    out
}

/// Parses any of the export formats, detected from the first token.
pub fn parse_graph(text: &str) -> Result<GkGraph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_graph_as(text, GraphFormat::Json)
    } else if trimmed.starts_with("graph") {
        parse_graph_as(text, GraphFormat::Dot)
    } else {
        parse_graph_as(text, GraphFormat::EdgeList)
    }
}

pub fn parse_graph_as(text: &str, format: GraphFormat) -> Result<GkGraph> {
    let num = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::GraphParse(format!("bad vertex {s:?}")))
    };
    match format {
        GraphFormat::Json => {
            let g: JsonGraph =
                serde_json::from_str(text).map_err(|e| Error::GraphParse(e.to_string()))?;
            GkGraph::new(g.vertices, g.edges.into_iter().map(|[a, b]| (a, b)))
        }
        GraphFormat::EdgeList => {
            let mut vertices = Vec::new();
            let mut edges = Vec::new();
            for line in text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
            {
                let parts: Vec<&str> = line.split_whitespace().collect();
                let [a, b] = parts[..] else {
                    return Err(Error::GraphParse(format!("expected `a b`, got {line:?}")));
                };
                let (a, b) = (num(a)?, num(b)?);
                vertices.extend([a, b]);
                edges.push((a, b));
            }
            GkGraph::new(vertices, edges)
        }
        GraphFormat::Dot => {
            let body = text
                .trim()
                .strip_prefix("graph")
                .and_then(|rest| {
                    let rest = rest.trim_start();
                    let open = rest.find('{')?;
                    rest[open + 1..].strip_suffix('}')
                })
                .ok_or_else(|| Error::GraphParse("expected `graph G { ... }`".into()))?;
            let mut vertices = Vec::new();
            let mut edges = Vec::new();
            for stmt in body
                .split([';', '\n'])
                .map(str::trim)
                .filter(|s| !s.is_empty())
            {
                match stmt.split_once("--") {
                    Some((a, b)) => {
                        let (a, b) = (num(a)?, num(b)?);
                        vertices.extend([a, b]);
                        edges.push((a, b));
                    }
                    None => vertices.push(num(stmt)?),
                }
            }
            GkGraph::new(vertices, edges)
        }
    }
}
