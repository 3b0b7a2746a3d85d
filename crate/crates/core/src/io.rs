//! Text formats for graphs: a DIMACS-like edge list, JSON, and Graphviz DOT.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>      (m lines, 0-based)
//! ```
//!
//! JSON: `{"n": 4, "edges": [[0, 1], [2, 3]]}`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cover::OrderedCliqueCover;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(Format::EdgeList),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct GraphDto {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphDto> for Graph {
    type Error = Error;

    fn try_from(dto: GraphDto) -> Result<Self> {
        Graph::new(dto.n, dto.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphDto {
    fn from(g: Graph) -> Self {
        GraphDto {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphDto::from(self.clone()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = GraphDto::deserialize(d)?;
        Graph::try_from(dto).map_err(serde::de::Error::custom)
    }
}

/// Parses a graph. `Format::Dot` is export-only and rejected here.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Json => parse_json(text),
        Format::Dot => Err(Error::InvalidArgument("DOT input is not supported".into())),
    }
}

/// Picks JSON when the first non-blank character is `{`, the edge list otherwise.
pub fn detect_format(text: &str) -> Format {
    if text.trim_start().starts_with('{') {
        Format::Json
    } else {
        Format::EdgeList
    }
}

fn parse_json(text: &str) -> Result<Graph> {
    let dto: GraphDto = serde_json::from_str(text).map_err(json_error)?;
    Graph::try_from(dto)
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut tokens = tokenize(line);
        let Some((col, tag)) = tokens.next() else {
            continue;
        };
        let line_no = lineno + 1;
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, col, "duplicate header line"));
                }
                let mut fields: Vec<(usize, &str)> = tokens.collect();
                // Accept the DIMACS spelling `p edge <n> <m>` as well.
                if fields.first().is_some_and(|(_, t)| t.parse::<usize>().is_err()) {
                    fields.remove(0);
                }
                if fields.len() != 2 {
                    return Err(parse_err(line_no, col, "header must be `p <n> <m>`"));
                }
                let n = number(line_no, fields[0])?;
                let m = number(line_no, fields[1])?;
                header = Some((n, m));
            }
            "e" => {
                if header.is_none() {
                    return Err(parse_err(line_no, col, "edge line before header"));
                }
                let fields: Vec<(usize, &str)> = tokens.collect();
                if fields.len() != 2 {
                    return Err(parse_err(line_no, col, "edge must be `e <u> <v>`"));
                }
                edges.push((number(line_no, fields[0])?, number(line_no, fields[1])?));
            }
            other => {
                return Err(parse_err(line_no, col, &format!("unknown line type {other:?}")));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| parse_err(1, 1, "missing `p <n> <m>` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            1,
            &format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

/// Whitespace tokens with their 1-based starting column.
fn tokenize(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (offset + 1, tok)
    })
}

fn number(line: usize, (col, tok): (usize, &str)) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, col, &format!("expected a non-negative integer, found {tok:?}")))
}

fn parse_err(line: usize, column: usize, message: &str) -> Error {
    Error::Parse {
        line,
        column,
        message: message.to_string(),
    }
}

/// Canonical text form. Edges are sorted by (min endpoint, max endpoint).
pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => {
            let mut out = format!("p {} {}\n", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {u} {v}");
            }
            out
        }
        Format::Json => serde_json::to_string(g).expect("graph serializes"),
        Format::Dot => to_dot(g, None),
    }
}

/// Undirected DOT export. With a cover, each part becomes a cluster
/// labelled `C<i>`.
pub fn to_dot(g: &Graph, cover: Option<&OrderedCliqueCover>) -> String {
    let mut out = String::from("graph {\n");
    match cover {
        Some(c) => {
            for (i, part) in c.parts().iter().enumerate() {
                let _ = writeln!(out, "  subgraph cluster_{i} {{");
                let _ = writeln!(out, "    label=\"C{i}\";");
                for v in part {
                    let _ = writeln!(out, "    {v};");
                }
                out.push_str("  }\n");
            }
        }
        None => {
            for v in 0..g.n() {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
