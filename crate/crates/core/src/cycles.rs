//! Mixed-cycle profiling, the five-type classification, and the
//! closed-form incidence determinant values for cycles.
//!
//! A cycle profile (a, b, c) counts oriented edges agreeing with the
//! traversal direction, oriented edges opposing it, and unoriented
//! edges. The classification:
//!   type I:   a + b odd
//!   type II:  |a-b|/2 + c odd     type III: |a-b|/2 + c even
//!   type IV:  |a-b|/2 odd         type V:   |a-b|/2 even
//! {I, II, III} governs S and Q; {I, IV, V} governs T and L.

use thiserror::Error;

use crate::graph::{EdgeKind, MixedGraph};
use crate::matrices::{incidence, quasi_incidence, Incidence, OrientationMap};

/// An ordered cycle: `edges[k]` joins `verts[k]` and `verts[(k+1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSeq {
    pub verts: Vec<usize>,
    pub edges: Vec<usize>,
}

impl CycleSeq {
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// The same cycle traversed the other way around.
    pub fn reversed(&self) -> CycleSeq {
        let k = self.len();
        let verts: Vec<usize> = std::iter::once(self.verts[0])
            .chain(self.verts[1..].iter().rev().copied())
            .collect();
        let edges: Vec<usize> = (0..k).map(|j| self.edges[(k - 1 - j) % k]).collect();
        CycleSeq { verts, edges }
    }

    /// The same cycle started `shift` positions later.
    pub fn rotated(&self, shift: usize) -> CycleSeq {
        let k = self.len();
        CycleSeq {
            verts: (0..k).map(|j| self.verts[(j + shift) % k]).collect(),
            edges: (0..k).map(|j| self.edges[(j + shift) % k]).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleProfile {
    /// oriented edges traversed head -> tail (clockwise)
    pub a: usize,
    /// oriented edges traversed tail -> head
    pub b: usize,
    /// unoriented edges
    pub c: usize,
}

impl CycleProfile {
    pub fn len(&self) -> usize {
        self.a + self.b + self.c
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleTypeS {
    I,
    II,
    III,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleTypeT {
    I,
    IV,
    V,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("vertex/edge sequence is not a cycle of the graph at position {0}")]
    NotACycle(usize),
    #[error("cycle length {0} is below 3")]
    TooShort(usize),
}

/// Counts (a, b, c) of a cycle against its given traversal direction.
pub fn cycle_profile(g: &MixedGraph, cycle: &CycleSeq) -> Result<CycleProfile, CycleError> {
    let k = cycle.len();
    if k < 3 {
        return Err(CycleError::TooShort(k));
    }
    if cycle.edges.len() != k {
        return Err(CycleError::NotACycle(0));
    }
    let mut p = CycleProfile { a: 0, b: 0, c: 0 };
    for j in 0..k {
        let from = cycle.verts[j];
        let to = cycle.verts[(j + 1) % k];
        let e = g.edge(cycle.edges[j]);
        let joins = (e.u == from && e.v == to) || (e.u == to && e.v == from);
        if !joins {
            return Err(CycleError::NotACycle(j));
        }
        match e.kind {
            EdgeKind::Unoriented => p.c += 1,
            EdgeKind::Oriented => {
                if e.u == from {
                    p.a += 1; // traversed head -> tail
                } else {
                    p.b += 1;
                }
            }
        }
    }
    Ok(p)
}

/// The (S-side, T-side) type labels of a cycle profile.
pub fn classify_cycle(p: &CycleProfile) -> (CycleTypeS, CycleTypeT) {
    if (p.a + p.b) % 2 == 1 {
        return (CycleTypeS::I, CycleTypeT::I);
    }
    let d = (p.a as i64 - p.b as i64).unsigned_abs() as usize / 2;
    let s = if (d + p.c) % 2 == 1 { CycleTypeS::II } else { CycleTypeS::III };
    let t = if d % 2 == 1 { CycleTypeT::IV } else { CycleTypeT::V };
    (s, t)
}

/// |det|^2 of the incidence square submatrix on the cycle: 2, 4 or 0
/// for types (I, II, III) under S and (I, IV, V) under T. The closed
/// form is checked against the exact determinant; a mismatch panics
/// (it would signal an implementation bug).
pub fn cycle_det_normsq(
    g: &MixedGraph,
    cycle: &CycleSeq,
    which: Incidence,
    orient: Option<&OrientationMap>,
) -> u64 {
    let p = cycle_profile(g, cycle).expect("cycle_det_normsq requires a cycle of the graph");
    let (ts, tt) = classify_cycle(&p);
    let closed: u64 = match which {
        Incidence::S => match ts {
            CycleTypeS::I => 2,
            CycleTypeS::II => 4,
            CycleTypeS::III => 0,
        },
        Incidence::T => match tt {
            CycleTypeT::I => 2,
            CycleTypeT::IV => 4,
            CycleTypeT::V => 0,
        },
    };
    let full = match which {
        Incidence::S => quasi_incidence(g),
        Incidence::T => {
            let default;
            let orient = match orient {
                Some(o) => o,
                None => {
                    default = OrientationMap::lower_to_higher(g);
                    &default
                }
            };
            incidence(g, orient).expect("orientation map must cover unoriented edges")
        }
    };
    let mut rows = cycle.verts.clone();
    let mut cols = cycle.edges.clone();
    rows.sort_unstable();
    cols.sort_unstable();
    let det = full
        .submatrix(&rows, &cols)
        .and_then(|m| m.determinant())
        .expect("cycle submatrix is square");
    assert_eq!(
        det.norm_sqr(),
        num_bigint::BigInt::from(closed),
        "closed-form |det|^2 disagrees with the exact determinant"
    );
    closed
}

/// All simple cycles of the underlying graph, each in the canonical
/// direction (smallest vertex first, toward its smaller cycle
/// neighbor). DFS enumeration; fine at desk scale.
pub fn simple_cycles(g: &MixedGraph) -> Vec<CycleSeq> {
    let adj = g.adjacency();
    let mut cycles = Vec::new();
    let n = g.n();
    let mut on_path = vec![false; n];

    for start in 0..n {
        let mut path_v = vec![start];
        let mut path_e: Vec<usize> = Vec::new();
        on_path[start] = true;
        // iterative DFS over neighbors with index > start
        let mut iters: Vec<usize> = vec![0];
        while let Some(&top) = path_v.last() {
            let idx = *iters.last().unwrap();
            if idx < adj[top].len() {
                *iters.last_mut().unwrap() += 1;
                let (next, eid) = adj[top][idx];
                if next == start && path_v.len() >= 3 {
                    // close a cycle; keep one of the two directions
                    if path_v[1] < *path_v.last().unwrap() {
                        let mut edges = path_e.clone();
                        edges.push(eid);
                        cycles.push(CycleSeq { verts: path_v.clone(), edges });
                    }
                } else if next > start && !on_path[next] {
                    on_path[next] = true;
                    path_v.push(next);
                    path_e.push(eid);
                    iters.push(0);
                }
            } else {
                on_path[top] = false;
                path_v.pop();
                path_e.pop();
                iters.pop();
            }
        }
    }
    cycles
}
