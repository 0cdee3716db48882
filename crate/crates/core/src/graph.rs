//! Immutable mixed-graph model and the edge-list parser.
//!
//! A mixed graph is a simple graph in which every edge is either
//! unoriented or carries a direction. For an oriented edge `u` is the
//! head and `v` the tail: the arrow runs u -> v. All other modules
//! inherit this convention.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeKind {
    Unoriented,
    Oriented,
}

/// One edge of a mixed graph. For `Oriented`, `u` is the head and `v`
/// the tail.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct EdgeRecord {
    pub id: usize,
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
}

impl EdgeRecord {
    pub fn is_oriented(&self) -> bool {
        self.kind == EdgeKind::Oriented
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint other than `w`; panics if `w` is not an endpoint.
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            assert_eq!(self.v, w, "vertex {} is not an endpoint of edge {}", w, self.id);
            self.u
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge between vertices {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range (n = {n})")]
    InvalidVertex { index: usize, n: usize },
    #[error("edge id {id} out of range (m = {m})")]
    InvalidEdge { id: usize, m: usize },
    #[error("edge {0} is not oriented")]
    NotOriented(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Malformed,
    UnknownKind(String),
    SelfLoop,
    DuplicateEdge,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Malformed => write!(f, "expected `<u> <v> <kind>`"),
            ParseErrorKind::UnknownKind(t) => write!(f, "unknown kind token `{}` (expected D or U)", t),
            ParseErrorKind::SelfLoop => write!(f, "self-loop"),
            ParseErrorKind::DuplicateEdge => write!(f, "duplicate edge for this vertex pair"),
        }
    }
}

/// Immutable mixed graph on vertices 0..n-1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedGraph {
    labels: Vec<String>,
    edges: Vec<EdgeRecord>,
}

impl MixedGraph {
    /// Builds a graph from `(u, v, kind)` triples; for oriented edges
    /// `u` is the head. Edge ids follow the slice order.
    pub fn new(n: usize, spec: &[(usize, usize, EdgeKind)]) -> Result<Self, GraphError> {
        let labels = (0..n).map(|v| v.to_string()).collect();
        let mut g = MixedGraph { labels, edges: Vec::with_capacity(spec.len()) };
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        for (id, &(u, v, kind)) in spec.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::InvalidVertex { index: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key, ()).is_some() {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            g.edges.push(EdgeRecord { id, u, v, kind });
        }
        Ok(g)
    }

    /// Parses the edge-list format: one `<u> <v> <kind>` per line with
    /// kind D (oriented, head u) or U (unoriented). Blank lines and `#`
    /// comments are skipped. Vertex labels are arbitrary non-whitespace
    /// tokens, interned in first-appearance order.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(ParseError { line, kind: ParseErrorKind::Malformed });
            }
            let mut intern = |tok: &str| -> usize {
                *index.entry(tok.to_string()).or_insert_with(|| {
                    labels.push(tok.to_string());
                    labels.len() - 1
                })
            };
            let u = intern(toks[0]);
            let v = intern(toks[1]);
            let kind = match toks[2] {
                "D" => EdgeKind::Oriented,
                "U" => EdgeKind::Unoriented,
                other => {
                    return Err(ParseError {
                        line,
                        kind: ParseErrorKind::UnknownKind(other.to_string()),
                    })
                }
            };
            if u == v {
                return Err(ParseError { line, kind: ParseErrorKind::SelfLoop });
            }
            if seen.insert((u.min(v), u.max(v)), ()).is_some() {
                return Err(ParseError { line, kind: ParseErrorKind::DuplicateEdge });
            }
            edges.push(EdgeRecord { id: edges.len(), u, v, kind });
        }
        Ok(MixedGraph { labels, edges })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &EdgeRecord {
        &self.edges[id]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Adjacency lists of the underlying graph: per vertex, `(neighbor,
    /// edge id)` pairs in edge-id order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n()];
        for e in &self.edges {
            adj[e.u].push((e.v, e.id));
            adj[e.v].push((e.u, e.id));
        }
        adj
    }

    /// Swaps head and tail on the named edges; everything else is kept.
    pub fn revert_edges(&self, edge_ids: &[usize]) -> Result<Self, GraphError> {
        let mut g = self.clone();
        for &id in edge_ids {
            let e = g.edges.get_mut(id).ok_or(GraphError::InvalidEdge { id, m: self.edges.len() })?;
            if e.kind != EdgeKind::Oriented {
                return Err(GraphError::NotOriented(id));
            }
            std::mem::swap(&mut e.u, &mut e.v);
        }
        Ok(g)
    }

    /// The underlying unoriented graph (every edge made unoriented).
    pub fn underlying(&self) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.kind = EdgeKind::Unoriented;
        }
        g
    }

    /// Induced subgraph on `verts` (ascending), with vertices and edges
    /// re-indexed densely.
    pub fn induced(&self, verts: &[usize]) -> Self {
        let mut map = vec![usize::MAX; self.n()];
        let mut labels = Vec::with_capacity(verts.len());
        for (slot, &v) in verts.iter().enumerate() {
            map[v] = slot;
            labels.push(self.labels[v].clone());
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            if map[e.u] != usize::MAX && map[e.v] != usize::MAX {
                edges.push(EdgeRecord { id: edges.len(), u: map[e.u], v: map[e.v], kind: e.kind });
            }
        }
        MixedGraph { labels, edges }
    }

    /// Connected components of the underlying graph, each a sorted
    /// vertex list.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut comp = Vec::new();
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}
