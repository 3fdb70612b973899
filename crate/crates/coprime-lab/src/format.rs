//! On-disk and on-wire formats: the JSON labeling schema, DOT and CSV
//! emission, and OEIS b-file parsing.
//!
//! The JSON schema is
//! `{"graph": {"kind": "ladder"|"complete_bipartite"|"generic", "n": int,
//! "m": int?, "edges": [[int,int]]?}, "labels": [int], "k": int}`
//! with ladder labels listed top row then bottom row and bipartite labels
//! listed A side then B side, matching the vertex indexing used everywhere
//! else in the crate. Emission is deterministic, so emit -> parse -> emit is
//! byte-identical.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graphs::{Graph, GraphError, Labeling, LabelingError, Layout};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormatError {
    Json(String),
    Graph(GraphError),
    Labeling(LabelingError),
    /// ladder/complete_bipartite entries must not carry an edge list, and a
    /// generic entry must.
    EdgesMismatch {
        kind: &'static str,
    },
    MissingSideSize,
    BFile {
        line: usize,
        message: String,
    },
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(msg) => write!(f, "malformed JSON: {msg}"),
            FormatError::Graph(e) => e.fmt(f),
            FormatError::Labeling(e) => e.fmt(f),
            FormatError::EdgesMismatch { kind } => {
                write!(f, "edge list and graph kind {kind} do not agree")
            }
            FormatError::MissingSideSize => {
                write!(f, "complete_bipartite graphs need both m and n")
            }
            FormatError::BFile { line, message } => {
                write!(f, "b-file line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for FormatError {}

impl From<GraphError> for FormatError {
    fn from(e: GraphError) -> Self {
        FormatError::Graph(e)
    }
}

impl From<LabelingError> for FormatError {
    fn from(e: LabelingError) -> Self {
        FormatError::Labeling(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Ladder,
    CompleteBipartite,
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub kind: GraphKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
}

/// The file form of a labeled graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingFile {
    pub graph: GraphSpec,
    pub labels: Vec<u64>,
    pub k: u64,
}

impl LabelingFile {
    pub fn from_parts(graph: &Graph, labeling: &Labeling) -> LabelingFile {
        let spec = match *graph.layout() {
            Layout::Ladder { rungs } => GraphSpec {
                kind: GraphKind::Ladder,
                n: rungs,
                m: None,
                edges: None,
            },
            Layout::CompleteBipartite { m, n } => GraphSpec {
                kind: GraphKind::CompleteBipartite,
                n,
                m: Some(m),
                edges: None,
            },
            Layout::Generic => GraphSpec {
                kind: GraphKind::Generic,
                n: graph.n_vertices(),
                m: None,
                edges: Some(graph.edges().to_vec()),
            },
        };
        LabelingFile {
            graph: spec,
            labels: labeling.labels().to_vec(),
            k: labeling.bound_k(),
        }
    }

    pub fn to_parts(&self) -> Result<(Graph, Labeling), FormatError> {
        let graph = match self.graph.kind {
            GraphKind::Ladder => {
                if self.graph.edges.is_some() {
                    return Err(FormatError::EdgesMismatch { kind: "ladder" });
                }
                Graph::ladder(self.graph.n)?
            }
            GraphKind::CompleteBipartite => {
                if self.graph.edges.is_some() {
                    return Err(FormatError::EdgesMismatch {
                        kind: "complete_bipartite",
                    });
                }
                let m = self.graph.m.ok_or(FormatError::MissingSideSize)?;
                Graph::complete_bipartite(m, self.graph.n)?
            }
            GraphKind::Generic => {
                let edges = self
                    .graph
                    .edges
                    .clone()
                    .ok_or(FormatError::EdgesMismatch { kind: "generic" })?;
                Graph::generic(self.graph.n, edges)?
            }
        };
        let labeling = Labeling::new(self.labels.clone(), self.k)?;
        if labeling.labels().len() != graph.n_vertices() {
            return Err(FormatError::Labeling(LabelingError::SizeMismatch {
                vertices: graph.n_vertices(),
                labels: labeling.labels().len(),
            }));
        }
        Ok((graph, labeling))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("schema types always serialize")
    }

    pub fn from_json(text: &str) -> Result<LabelingFile, FormatError> {
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))
    }
}

/// Vertex names mirroring the drawing conventions: v1..vn / u1..un for
/// ladder rows, a1..am / b1..bn for bipartite sides, n0.. otherwise.
fn vertex_name(graph: &Graph, index: usize) -> String {
    match *graph.layout() {
        Layout::Ladder { rungs } => {
            if index < rungs {
                format!("v{}", index + 1)
            } else {
                format!("u{}", index - rungs + 1)
            }
        }
        Layout::CompleteBipartite { m, .. } => {
            if index < m {
                format!("a{}", index + 1)
            } else {
                format!("b{}", index - m + 1)
            }
        }
        Layout::Generic => format!("n{index}"),
    }
}

/// Emits the labeled graph in DOT form.
pub fn to_dot(graph: &Graph, labeling: &Labeling) -> String {
    let mut out = String::from("graph coprime_labeling {\n");
    for (i, &label) in labeling.labels().iter().enumerate() {
        out.push_str(&format!(
            "  {} [label=\"{}\"];\n",
            vertex_name(graph, i),
            label
        ));
    }
    for &(a, b) in graph.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            vertex_name(graph, a),
            vertex_name(graph, b)
        ));
    }
    out.push_str("}\n");
    out
}

/// Emits the labels as CSV: two rows (top/bottom or A/B) for the structured
/// layouts, one flat row for generic graphs.
pub fn to_csv(graph: &Graph, labeling: &Labeling) -> String {
    let row = |labels: &[u64]| {
        labels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let labels = labeling.labels();
    match *graph.layout() {
        Layout::Ladder { rungs } => {
            format!("{}\n{}\n", row(&labels[..rungs]), row(&labels[rungs..]))
        }
        Layout::CompleteBipartite { m, .. } => {
            format!("{}\n{}\n", row(&labels[..m]), row(&labels[m..]))
        }
        Layout::Generic => format!("{}\n", row(labels)),
    }
}

/// Parses an OEIS b-file: one `index value` pair per line, `#` comments and
/// blank lines ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, u64)>, FormatError> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let index = fields
            .next()
            .and_then(|f| f.parse::<u64>().ok())
            .ok_or_else(|| FormatError::BFile {
                line: i + 1,
                message: "expected an integer index".into(),
            })?;
        let value = fields
            .next()
            .and_then(|f| f.parse::<u64>().ok())
            .ok_or_else(|| FormatError::BFile {
                line: i + 1,
                message: "expected an integer value".into(),
            })?;
        if fields.next().is_some() {
            return Err(FormatError::BFile {
                line: i + 1,
                message: "trailing fields after the value".into(),
            });
        }
        entries.push((index, value));
    }
    Ok(entries)
}
