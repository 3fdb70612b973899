//! Graph and labeling data model plus the coprime-labeling verifier that
//! every construction and search in this crate is certified against.
//!
//! A coprime labeling assigns distinct integers from {1..k} to the vertices
//! so that adjacent labels are relatively prime. A prime labeling is the
//! special case k = |V|, i.e. the labels are exactly 1..n.

use std::collections::HashSet;
use std::fmt;

use crate::numtheory::gcd;

/// Structural tag describing how a graph was built.
///
/// Ladder vertices are indexed top row first: indices `0..n` are the top
/// vertices left to right, `n..2n` the bottom vertices left to right.
/// Complete bipartite vertices are indexed A side (`0..m`) then B side
/// (`m..m+n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Layout {
    Ladder { rungs: usize },
    CompleteBipartite { m: usize, n: usize },
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    ZeroSize,
    EdgeOutOfRange {
        edge: (usize, usize),
        n_vertices: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    DuplicateEdge {
        edge: (usize, usize),
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::ZeroSize => write!(f, "graph size must be at least 1"),
            GraphError::EdgeOutOfRange { edge, n_vertices } => write!(
                f,
                "edge ({}, {}) references a vertex outside 0..{n_vertices}",
                edge.0, edge.1
            ),
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { edge } => {
                write!(f, "duplicate edge ({}, {})", edge.0, edge.1)
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// Undirected simple graph: vertex count plus an edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    layout: Layout,
}

impl Graph {
    /// The ladder with `n` rungs: two horizontal paths of `n` vertices joined
    /// by `n` vertical edges. 2n vertices, 3n - 2 edges.
    pub fn ladder(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroSize);
        }
        let mut edges = Vec::with_capacity(3 * n - 2);
        for i in 0..n {
            edges.push((i, n + i));
        }
        for i in 0..n - 1 {
            edges.push((i, i + 1));
        }
        for i in 0..n - 1 {
            edges.push((n + i, n + i + 1));
        }
        Ok(Graph {
            n_vertices: 2 * n,
            edges,
            layout: Layout::Ladder { rungs: n },
        })
    }

    /// The complete bipartite graph with sides of size `m` and `n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
        if m == 0 || n == 0 {
            return Err(GraphError::ZeroSize);
        }
        let mut edges = Vec::with_capacity(m * n);
        for a in 0..m {
            for b in 0..n {
                edges.push((a, m + b));
            }
        }
        Ok(Graph {
            n_vertices: m + n,
            edges,
            layout: Layout::CompleteBipartite { m, n },
        })
    }

    /// An arbitrary simple graph from an explicit edge list.
    pub fn generic(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Graph, GraphError> {
        if n_vertices == 0 {
            return Err(GraphError::ZeroSize);
        }
        let mut seen = HashSet::new();
        for &(a, b) in &edges {
            if a >= n_vertices || b >= n_vertices {
                return Err(GraphError::EdgeOutOfRange {
                    edge: (a, b),
                    n_vertices,
                });
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::DuplicateEdge { edge: (a, b) });
            }
        }
        Ok(Graph {
            n_vertices,
            edges,
            layout: Layout::Generic,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelingError {
    ZeroLabel,
    LabelBeyondBound { label: u64, bound_k: u64 },
    DuplicateLabel { label: u64 },
    SizeMismatch { vertices: usize, labels: usize },
}

impl fmt::Display for LabelingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelingError::ZeroLabel => write!(f, "labels must be positive"),
            LabelingError::LabelBeyondBound { label, bound_k } => {
                write!(f, "label {label} exceeds bound k = {bound_k}")
            }
            LabelingError::DuplicateLabel { label } => write!(f, "duplicate label {label}"),
            LabelingError::SizeMismatch { vertices, labels } => {
                write!(
                    f,
                    "graph has {vertices} vertices but {labels} labels were given"
                )
            }
        }
    }
}

impl std::error::Error for LabelingError {}

/// Distinct positive labels drawn from {1..bound_k}, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<u64>,
    bound_k: u64,
}

impl Labeling {
    pub fn new(labels: Vec<u64>, bound_k: u64) -> Result<Labeling, LabelingError> {
        let mut seen = HashSet::new();
        for &l in &labels {
            if l == 0 {
                return Err(LabelingError::ZeroLabel);
            }
            if l > bound_k {
                return Err(LabelingError::LabelBeyondBound { label: l, bound_k });
            }
            if !seen.insert(l) {
                return Err(LabelingError::DuplicateLabel { label: l });
            }
        }
        Ok(Labeling { labels, bound_k })
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn bound_k(&self) -> u64 {
        self.bound_k
    }
}

/// Certificate that one edge breaks coprimality: the edge, its two labels,
/// and the smallest prime dividing both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub edge: (usize, usize),
    pub label_a: u64,
    pub label_b: u64,
    pub common_divisor: u64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "labels {} and {} on edge ({}, {}) share the factor {}",
            self.label_a, self.label_b, self.edge.0, self.edge.1, self.common_divisor
        )
    }
}

fn smallest_prime_factor(x: u64) -> u64 {
    debug_assert!(x >= 2);
    if x.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    x
}

/// Every edge whose endpoint labels share a factor greater than 1, in edge
/// order. An empty result means the labeling is a valid coprime labeling.
pub fn verify(graph: &Graph, labeling: &Labeling) -> Result<Vec<Violation>, LabelingError> {
    if labeling.labels.len() != graph.n_vertices {
        return Err(LabelingError::SizeMismatch {
            vertices: graph.n_vertices,
            labels: labeling.labels.len(),
        });
    }
    let mut violations = Vec::new();
    for &(a, b) in &graph.edges {
        let (la, lb) = (labeling.labels[a], labeling.labels[b]);
        let g = gcd(la, lb);
        if g > 1 {
            violations.push(Violation {
                edge: (a, b),
                label_a: la,
                label_b: lb,
                common_divisor: smallest_prime_factor(g),
            });
        }
    }
    Ok(violations)
}

/// True when the labeling is a coprime labeling that uses exactly the labels
/// 1..n with bound k = n, i.e. a prime labeling.
pub fn is_prime_labeling(graph: &Graph, labeling: &Labeling) -> Result<bool, LabelingError> {
    let violations = verify(graph, labeling)?;
    if !violations.is_empty() {
        return Ok(false);
    }
    let n = graph.n_vertices as u64;
    if labeling.bound_k != n {
        return Ok(false);
    }
    // Distinctness plus the bound already force the label set to be {1..n}.
    debug_assert!(labeling.labels.iter().all(|&l| l >= 1 && l <= n));
    Ok(true)
}
