//! Graph file formats: DOT, plain edge list, and a structured JSON document
//! that carries a design, its cover, the star graph and a report together.
//!
//! All writers emit vertices in canonical label order and edges in
//! lexicographic order of their endpoint indices, so repeated runs produce
//! identical bytes.
//!
//! Edge list example:
//!
//! ```text
//! # 6 vertices, 6 edges
//! h0 c0_0
//! h1 c0_1
//! h2 c0_2
//! c0_0 c0_1
//! c0_0 c0_2
//! c0_1 c0_2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored; a line holding a
//! single label declares an isolated vertex.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::design::{BlockDesign, DesignFile};
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexLabel};
use crate::star::Cover;
use crate::verify::{Claims, GeodeticReport};

pub const STRUCTURED_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    EdgeList,
    Structured,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "edgelist" => Ok(ExportFormat::EdgeList),
            "structured" | "json" => Ok(ExportFormat::Structured),
            _ => Err(Error::Parse(format!("unknown export format {s:?}"))),
        }
    }
}

/// Hubs are drawn as filled boxes, gadget copies as plain circles.
pub fn to_dot(g: &LabeledGraph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for label in g.labels() {
        match label {
            VertexLabel::Hub(_) => {
                writeln!(out, "  \"{label}\" [shape=box, style=filled, fillcolor=lightgray];")
            }
            _ => writeln!(out, "  \"{label}\";"),
        }
        .expect("writing to a String");
    }
    for (u, v) in g.graph().edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", g.label(u), g.label(v)).expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

pub fn to_edge_list(g: &LabeledGraph) -> String {
    let graph = g.graph();
    let mut out = format!(
        "# {} vertices, {} edges\n",
        graph.vertex_count(),
        graph.edge_count()
    );
    for v in (0..graph.vertex_count()).filter(|&v| graph.degree(v) == 0) {
        writeln!(out, "{}", g.label(v)).expect("writing to a String");
    }
    for (u, v) in graph.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v)).expect("writing to a String");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let at = |e: Error| Error::Parse(format!("line {}: {e}", line_no + 1));
        match fields[..] {
            [a] => vertices.push(a.parse::<VertexLabel>().map_err(at)?),
            [a, b] => edges.push((
                a.parse::<VertexLabel>().map_err(at)?,
                b.parse::<VertexLabel>().map_err(at)?,
            )),
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected one or two labels",
                    line_no + 1
                )))
            }
        }
    }
    LabeledGraph::from_labeled(vertices, edges).map_err(|e| match e {
        Error::Parse(_) => e,
        other => Error::Parse(other.to_string()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct GraphData {
    vertices: Vec<VertexLabel>,
    edges: Vec<(VertexLabel, VertexLabel)>,
}

#[derive(Serialize, Deserialize)]
struct StructuredDoc {
    version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    design: Option<DesignFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cover: Option<Cover>,
    graph: GraphData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    claims: Option<Claims>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    report: Option<serde_json::Value>,
}

/// Contents of a structured document after validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structured {
    pub design: Option<BlockDesign>,
    pub cover: Option<Cover>,
    pub graph: LabeledGraph,
    pub claims: Option<Claims>,
}

pub fn to_structured(
    graph: &LabeledGraph,
    design: Option<&BlockDesign>,
    cover: Option<&Cover>,
    report: Option<&GeodeticReport>,
) -> Result<String> {
    let doc = StructuredDoc {
        version: STRUCTURED_FORMAT_VERSION,
        design: design.map(DesignFile::from_design),
        cover: cover.cloned(),
        graph: GraphData {
            vertices: graph.labels().to_vec(),
            edges: graph
                .graph()
                .edges()
                .map(|(u, v)| (graph.label(u).clone(), graph.label(v).clone()))
                .collect(),
        },
        claims: report.map(|r| r.predictions.claims.clone()),
        report: report.map(serde_json::to_value).transpose()?,
    };
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    Ok(text)
}

/// Parses a structured document, re-validating the design and the cover.
/// The stored report is ignored; only the claims are read back.
pub fn parse_structured(text: &str) -> Result<Structured> {
    let doc: StructuredDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("structured graph: {e}")))?;
    if doc.version != STRUCTURED_FORMAT_VERSION {
        return Err(Error::Parse(format!(
            "unsupported structured format version {}",
            doc.version
        )));
    }
    let design = doc.design.map(DesignFile::into_design).transpose()?;
    let cover = doc
        .cover
        .map(|c| Cover::new(c.ground_size(), c.members().to_vec()))
        .transpose()?;
    let graph = LabeledGraph::from_labeled(doc.graph.vertices, doc.graph.edges)?;
    Ok(Structured {
        design,
        cover,
        graph,
        claims: doc.claims,
    })
}

/// Reads either format: documents starting with `{` are structured.
pub fn parse_graph_file(text: &str) -> Result<Structured> {
    if text.trim_start().starts_with('{') {
        parse_structured(text)
    } else {
        Ok(Structured {
            design: None,
            cover: None,
            graph: parse_edge_list(text)?,
            claims: None,
        })
    }
}
