//! Simple undirected graphs over dense integer vertex ids, together with the
//! structural decompositions the rest of the crate builds on: bipartition,
//! connected components, biconnected blocks, and edge-disjoint cycle
//! decompositions of even graphs.
//!
//! Graphs are immutable once built (construction goes through
//! [`Graph::add_edge`] or a generator) and every operation is a pure
//! function, so values can be shared freely across threads.

mod decompose;
pub mod generate;

pub use decompose::CycleDecomposition;

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("vertex {vertex} out of range for graph with {count} vertices")]
    VertexOutOfRange { vertex: u32, count: usize },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(u32, u32),
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// An unordered vertex pair, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub u32, pub u32);

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop; fallible
    /// construction happens in [`Graph::add_edge`].
    pub fn new(u: u32, v: u32) -> Self {
        assert_ne!(u, v, "self-loop at vertex {u}");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// Vertex ids are dense integers in `[0, vertex_count)`. Generators never
/// emit isolated vertices, but the type tolerates them for intermediate
/// computations and for files with an explicit vertex-count header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Self { vertex_count, edges: BTreeSet::new() }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w as usize >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange { vertex: w, count: self.vertex_count });
            }
        }
        let e = Edge::new(u, v);
        if !self.edges.insert(e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.edges.contains(&Edge::new(u, v))
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|e| e.0 == v || e.1 == v).count()
    }

    /// Adjacency lists with each neighbor list sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.0 as usize].push(e.1);
            adj[e.1 as usize].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Parses the shared edge-list text format: one `u v` pair per line,
    /// `#` starts a comment, and an optional `p <n> <m>` header asserts the
    /// vertex and edge counts. Without a header the vertex count is the
    /// largest id plus one.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let mut tokens = line.split_whitespace().peekable();
            let Some(&first) = tokens.peek() else { continue };
            if first == "p" {
                tokens.next();
                if header.is_some() {
                    return Err(ParseError::Malformed {
                        line: line_no,
                        message: "duplicate header".into(),
                    });
                }
                let n = parse_token(tokens.next(), line_no, "vertex count")?;
                let m = parse_token(tokens.next(), line_no, "edge count")?;
                if tokens.next().is_some() {
                    return Err(ParseError::Malformed {
                        line: line_no,
                        message: "trailing tokens after header".into(),
                    });
                }
                header = Some((n as usize, m as usize));
                continue;
            }
            let u = parse_token(tokens.next(), line_no, "source vertex")?;
            let v = parse_token(tokens.next(), line_no, "target vertex")?;
            if tokens.next().is_some() {
                return Err(ParseError::Malformed {
                    line: line_no,
                    message: "trailing tokens after edge".into(),
                });
            }
            pairs.push((u, v));
        }
        let max_id = pairs.iter().map(|&(u, v)| u.max(v)).max();
        let inferred = max_id.map_or(0, |m| m as usize + 1);
        let vertex_count = match header {
            Some((n, m)) => {
                if m != pairs.len() {
                    return Err(ParseError::Malformed {
                        line: 0,
                        message: format!("header asserts {m} edges, file has {}", pairs.len()),
                    });
                }
                if inferred > n {
                    return Err(ParseError::Malformed {
                        line: 0,
                        message: format!("header asserts {n} vertices, file uses id {}", inferred - 1),
                    });
                }
                n
            }
            None => inferred,
        };
        Ok(Graph::from_edges(vertex_count, pairs)?)
    }

    /// Serializes to the edge-list format with a `p` header and sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p {} {}", self.vertex_count, self.edges.len());
        for e in &self.edges {
            let _ = writeln!(out, "{} {}", e.0, e.1);
        }
        out
    }
}

fn parse_token(token: Option<&str>, line: usize, what: &str) -> Result<u32, ParseError> {
    let t = token.ok_or_else(|| ParseError::Malformed {
        line,
        message: format!("missing {what}"),
    })?;
    t.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("invalid {what} '{t}'"),
    })
}

/// One side of a two-sided vertex assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// An arbitrary two-sided assignment of every vertex.
///
/// Unlike [`Bipartition`] this makes no promise about edges: it is the
/// witness shape used by the dispensing solver, where same-side edges are
/// exactly the removed ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideAssignment {
    sides: Vec<Side>,
}

impl SideAssignment {
    pub fn new(sides: Vec<Side>) -> Self {
        Self { sides }
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn side(&self, v: u32) -> Side {
        self.sides[v as usize]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    /// Vertices on `X` and on `Y`, each ascending.
    pub fn parts(&self) -> (Vec<u32>, Vec<u32>) {
        let mut x = Vec::new();
        let mut y = Vec::new();
        for (v, s) in self.sides.iter().enumerate() {
            match s {
                Side::X => x.push(v as u32),
                Side::Y => y.push(v as u32),
            }
        }
        (x, y)
    }

    /// True when the edge has endpoints on opposite sides.
    pub fn crosses(&self, e: Edge) -> bool {
        self.side(e.0) != self.side(e.1)
    }
}

/// A proper two-coloring: every edge crosses sides. Built by
/// [`Graph::bipartition`] or validated from an arbitrary assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition(SideAssignment);

impl Bipartition {
    /// Validates that `assignment` is proper for `g`.
    pub fn validated(g: &Graph, assignment: SideAssignment) -> Option<Self> {
        if assignment.len() != g.vertex_count() {
            return None;
        }
        if g.edges().all(|e| assignment.crosses(e)) {
            Some(Bipartition(assignment))
        } else {
            None
        }
    }

    pub fn assignment(&self) -> &SideAssignment {
        &self.0
    }

    pub fn side(&self, v: u32) -> Side {
        self.0.side(v)
    }

    pub fn parts(&self) -> (Vec<u32>, Vec<u32>) {
        self.0.parts()
    }
}

/// A closed walk of distinct vertices witnessing an odd cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycle(pub Vec<u32>);

impl std::fmt::Display for OddCycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", ids.join("-"))
    }
}
