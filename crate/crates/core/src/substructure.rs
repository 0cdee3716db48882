//! Substructures: (vertex subset, edge subset) pairs of a host graph,
//! and the classification of their connected components.
//!
//! Edges of a substructure may dangle: one or both endpoints can be
//! absent from the vertex subset. A connected square component is
//! exactly a rootless tree (tree plus one dangling edge) or unicyclic;
//! everything degenerate is Irregular and contributes zero downstream.

use crate::cycles::CycleSeq;
use crate::graph::{GraphError, MixedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substructure<'g> {
    host: &'g MixedGraph,
    verts: Vec<usize>,
    edge_ids: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentShape {
    /// A tree with its root deleted but the root's incident edge kept
    /// (the dangling edge). `alpha` counts oriented edges directed away
    /// from the root, `c_un` counts unoriented edges.
    RootlessTree {
        present_verts: Vec<usize>,
        full_edges: Vec<usize>,
        dangling_edge: usize,
        root: usize,
        alpha: usize,
        c_un: usize,
    },
    /// Connected, all endpoints present, #edges = #verts: exactly one cycle.
    Unicyclic {
        present_verts: Vec<usize>,
        edges: Vec<usize>,
        cycle: CycleSeq,
    },
    /// Anything else, including edges with both endpoints absent,
    /// isolated vertices, and components with #edges != #verts.
    Irregular {
        present_verts: Vec<usize>,
        edges: Vec<usize>,
    },
}

impl ComponentShape {
    pub fn present_verts(&self) -> &[usize] {
        match self {
            ComponentShape::RootlessTree { present_verts, .. }
            | ComponentShape::Unicyclic { present_verts, .. }
            | ComponentShape::Irregular { present_verts, .. } => present_verts,
        }
    }

    pub fn edge_ids(&self) -> Vec<usize> {
        match self {
            ComponentShape::RootlessTree { full_edges, dangling_edge, .. } => {
                let mut ids = full_edges.clone();
                ids.push(*dangling_edge);
                ids.sort_unstable();
                ids
            }
            ComponentShape::Unicyclic { edges, .. } | ComponentShape::Irregular { edges, .. } => {
                edges.clone()
            }
        }
    }
}

impl<'g> Substructure<'g> {
    pub fn new(
        host: &'g MixedGraph,
        verts: impl Into<Vec<usize>>,
        edge_ids: impl Into<Vec<usize>>,
    ) -> Result<Self, GraphError> {
        let mut verts = verts.into();
        let mut edge_ids = edge_ids.into();
        verts.sort_unstable();
        verts.dedup();
        edge_ids.sort_unstable();
        edge_ids.dedup();
        if let Some(&v) = verts.iter().find(|&&v| v >= host.n()) {
            return Err(GraphError::InvalidVertex { index: v, n: host.n() });
        }
        if let Some(&id) = edge_ids.iter().find(|&&id| id >= host.m()) {
            return Err(GraphError::InvalidEdge { id, m: host.m() });
        }
        Ok(Substructure { host, verts, edge_ids })
    }

    pub fn host(&self) -> &'g MixedGraph {
        self.host
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    pub fn is_square(&self) -> bool {
        self.verts.len() == self.edge_ids.len()
    }

    /// Partitions the substructure by connectivity over present
    /// vertices and classifies each component. A dangling edge belongs
    /// to the component of its unique present endpoint; an edge with
    /// both endpoints absent forms an Irregular singleton.
    pub fn components(&self) -> Vec<ComponentShape> {
        let n = self.host.n();
        let mut present = vec![false; n];
        for &v in &self.verts {
            present[v] = true;
        }

        let mut dsu = Dsu::new(n);
        for &id in &self.edge_ids {
            let e = self.host.edge(id);
            if present[e.u] && present[e.v] {
                dsu.union(e.u, e.v);
            }
        }

        let mut shapes = Vec::new();
        // group vertices and edges per DSU root
        let mut comp_verts: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        let mut comp_edges: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &v in &self.verts {
            comp_verts.entry(dsu.find(v)).or_default().push(v);
        }
        for &id in &self.edge_ids {
            let e = self.host.edge(id);
            let anchor = if present[e.u] {
                e.u
            } else if present[e.v] {
                e.v
            } else {
                shapes.push(ComponentShape::Irregular { present_verts: vec![], edges: vec![id] });
                continue;
            };
            comp_edges.entry(dsu.find(anchor)).or_default().push(id);
        }

        for (root, verts) in comp_verts {
            let edges = comp_edges.remove(&root).unwrap_or_default();
            shapes.push(classify_component(self.host, &present, verts, edges));
        }
        shapes
    }
}

fn classify_component(
    host: &MixedGraph,
    present: &[bool],
    verts: Vec<usize>,
    edges: Vec<usize>,
) -> ComponentShape {
    let full: Vec<usize> = edges
        .iter()
        .copied()
        .filter(|&id| {
            let e = host.edge(id);
            present[e.u] && present[e.v]
        })
        .collect();
    let dangling: Vec<usize> = edges.iter().copied().filter(|id| !full.contains(id)).collect();

    if dangling.len() == 1 && full.len() + 1 == verts.len() {
        // full edges connect the component, so with #full = #verts - 1
        // they form a tree; one dangling edge makes it a rootless tree.
        let dangling_edge = dangling[0];
        let de = host.edge(dangling_edge);
        let root = if present[de.u] { de.v } else { de.u };
        // BFS distances from the root over the full tree (root
        // reattached via the dangling edge)
        let mut dist: std::collections::HashMap<usize, usize> = Default::default();
        dist.insert(root, 0);
        let present_end = de.other(root);
        dist.insert(present_end, 1);
        let mut frontier = vec![present_end];
        while let Some(v) = frontier.pop() {
            for &id in &full {
                let e = host.edge(id);
                if e.touches(v) {
                    let w = e.other(v);
                    if !dist.contains_key(&w) {
                        dist.insert(w, dist[&v] + 1);
                        frontier.push(w);
                    }
                }
            }
        }
        let mut alpha = 0;
        let mut c_un = 0;
        for &id in edges.iter() {
            let e = host.edge(id);
            if e.is_oriented() {
                // away from the root: the tail is farther than the head
                if dist[&e.u] < dist[&e.v] {
                    alpha += 1;
                }
            } else {
                c_un += 1;
            }
        }
        return ComponentShape::RootlessTree {
            present_verts: verts,
            full_edges: full,
            dangling_edge,
            root,
            alpha,
            c_un,
        };
    }

    if dangling.is_empty() && edges.len() == verts.len() && !verts.is_empty() {
        // connected with #edges = #verts: exactly one cycle
        let cycle = find_cycle_of(host, &verts, &edges);
        return ComponentShape::Unicyclic { present_verts: verts, edges, cycle };
    }

    ComponentShape::Irregular { present_verts: verts, edges }
}

/// The unique cycle of a unicyclic component, in canonical traversal
/// direction: start at the smallest cycle vertex and proceed toward
/// its smaller-indexed cycle neighbor.
pub fn find_cycle_of(host: &MixedGraph, verts: &[usize], edges: &[usize]) -> CycleSeq {
    let mut degree: std::collections::HashMap<usize, usize> = Default::default();
    let mut alive: std::collections::HashSet<usize> = edges.iter().copied().collect();
    for &id in edges {
        let e = host.edge(id);
        *degree.entry(e.u).or_insert(0) += 1;
        *degree.entry(e.v).or_insert(0) += 1;
    }
    // peel leaves until only the cycle remains
    let mut queue: Vec<usize> = verts.iter().copied().filter(|v| degree[v] == 1).collect();
    let mut removed: std::collections::HashSet<usize> = Default::default();
    while let Some(v) = queue.pop() {
        removed.insert(v);
        let id = *edges
            .iter()
            .find(|&&id| alive.contains(&id) && host.edge(id).touches(v))
            .expect("leaf vertex must have one remaining edge");
        alive.remove(&id);
        let w = host.edge(id).other(v);
        let d = degree.get_mut(&w).unwrap();
        *d -= 1;
        if *d == 1 {
            queue.push(w);
        }
    }
    let cycle_verts: Vec<usize> = verts.iter().copied().filter(|v| !removed.contains(v)).collect();
    let start = *cycle_verts.iter().min().expect("unicyclic component has a cycle");
    let nbr_edges: Vec<usize> = alive
        .iter()
        .copied()
        .filter(|&id| host.edge(id).touches(start))
        .collect();
    assert_eq!(nbr_edges.len(), 2, "cycle vertex must have degree 2 on the cycle");
    let first_edge = *nbr_edges
        .iter()
        .min_by_key(|&&id| host.edge(id).other(start))
        .unwrap();

    let mut vs = vec![start];
    let mut es = vec![first_edge];
    let mut prev = start;
    let mut cur = host.edge(first_edge).other(start);
    while cur != start {
        vs.push(cur);
        let next_edge = alive
            .iter()
            .copied()
            .find(|&id| {
                let e = host.edge(id);
                e.touches(cur) && e.other(cur) != prev && id != *es.last().unwrap()
            })
            .expect("cycle traversal must continue");
        es.push(next_edge);
        prev = cur;
        cur = host.edge(next_edge).other(cur);
    }
    CycleSeq { verts: vs, edges: es }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let r = self.find(self.parent[v]);
            self.parent[v] = r;
        }
        self.parent[v]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
