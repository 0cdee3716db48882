//! Quapartite structure: four-part vertex partitions, walk weights,
//! explicit kernel vectors, and the singularity equivalences.

use thiserror::Error;

use crate::cycles::{classify_cycle, cycle_profile, simple_cycles, CycleTypeS, CycleTypeT};
use crate::gaussian::GaussianInt;
use crate::graph::{EdgeKind, MixedGraph};
use crate::matrices::{hermitian_laplacian, quasi_laplacian, MatrixKind};

/// A labeling of the vertices by parts 1..=4 such that unoriented
/// edges join parts {1,3} or {2,4} and oriented edges run
/// 1->2->3->4->1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadPartition {
    labels: Vec<u8>,
}

impl QuadPartition {
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn part(&self, v: usize) -> u8 {
        self.labels[v]
    }

    /// The four parts as vertex lists (possibly empty).
    pub fn parts(&self) -> [Vec<usize>; 4] {
        let mut parts: [Vec<usize>; 4] = Default::default();
        for (v, &p) in self.labels.iter().enumerate() {
            parts[(p - 1) as usize].push(v);
        }
        parts
    }

    /// Checks the edge constraints against a graph.
    pub fn is_valid_for(&self, g: &MixedGraph) -> bool {
        self.labels.len() == g.n()
            && self.labels.iter().all(|&p| (1..=4).contains(&p))
            && g.edges().iter().all(|e| {
                let (pu, pv) = (self.labels[e.u], self.labels[e.v]);
                match e.kind {
                    EdgeKind::Unoriented => (pu + 2 - 1) % 4 + 1 == pv,
                    // head u in part k, tail v in part k+1
                    EdgeKind::Oriented => pu % 4 + 1 == pv,
                }
            })
    }
}

/// Finds a quapartition by label propagation, or None if the edge
/// constraints cannot be satisfied.
pub fn find_quapartition(g: &MixedGraph) -> Option<QuadPartition> {
    let adj = g.adjacency();
    let mut labels: Vec<u8> = vec![0; g.n()];
    for start in 0..g.n() {
        if labels[start] != 0 {
            continue;
        }
        labels[start] = 1;
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for &(w, eid) in &adj[v] {
                let e = g.edge(eid);
                let step: u8 = match e.kind {
                    EdgeKind::Unoriented => 2,
                    EdgeKind::Oriented if e.u == v => 1, // v is the head
                    EdgeKind::Oriented => 3,             // v is the tail
                };
                let want = (labels[v] - 1 + step) % 4 + 1;
                if labels[w] == 0 {
                    labels[w] = want;
                    frontier.push(w);
                } else if labels[w] != want {
                    return None;
                }
            }
        }
    }
    let partition = QuadPartition { labels };
    debug_assert!(partition.is_valid_for(g));
    Some(partition)
}

/// A walk in a mixed graph: `edges[k]` joins `verts[k]` and
/// `verts[k+1]`.
#[derive(Clone, Debug)]
pub struct Walk {
    pub verts: Vec<usize>,
    pub edges: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WalkError {
    #[error("a walk needs at least one vertex")]
    Empty,
    #[error("walk has {verts} vertices but {edges} edges")]
    LengthMismatch { verts: usize, edges: usize },
    #[error("edge at position {0} does not join the adjacent walk vertices")]
    BadEdge(usize),
}

/// Weight of a walk: |sum of f(e)| with f = +1 for an oriented edge
/// traversed head to tail, -1 for the reverse, +2 for an unoriented
/// edge.
pub fn walk_weight(g: &MixedGraph, walk: &Walk) -> Result<u64, WalkError> {
    if walk.verts.is_empty() {
        return Err(WalkError::Empty);
    }
    if walk.edges.len() + 1 != walk.verts.len() {
        return Err(WalkError::LengthMismatch {
            verts: walk.verts.len(),
            edges: walk.edges.len(),
        });
    }
    let mut sum: i64 = 0;
    for (k, &eid) in walk.edges.iter().enumerate() {
        let e = g.edge(eid);
        let (from, to) = (walk.verts[k], walk.verts[k + 1]);
        if !(e.u == from && e.v == to || e.u == to && e.v == from) {
            return Err(WalkError::BadEdge(k));
        }
        sum += match e.kind {
            EdgeKind::Unoriented => 2,
            EdgeKind::Oriented if e.u == from => 1,
            EdgeKind::Oriented => -1,
        };
    }
    Ok(sum.unsigned_abs())
}

/// Explicit kernel vector of L_H or Q_H, supported on the singular
/// connected components, or None when the matrix is nonsingular.
///
/// Within a component the entries are propagated per edge: for Q_H an
/// unoriented edge uv forces x_v = -x_u and an oriented edge with head
/// u forces x_v = i x_u; for L_H the rules are x_v = x_u and
/// x_v = -i x_u. A component supports a kernel vector exactly when the
/// propagation is consistent around every cycle.
pub fn null_labeling(g: &MixedGraph, which: MatrixKind) -> Option<Vec<GaussianInt>> {
    let adj = g.adjacency();
    let mut x: Vec<Option<GaussianInt>> = vec![None; g.n()];
    let mut any = false;
    for comp in g.connected_components() {
        let start = comp[0];
        let mut trial: Vec<Option<GaussianInt>> = vec![None; g.n()];
        trial[start] = Some(GaussianInt::one());
        let mut frontier = vec![start];
        let mut consistent = true;
        'bfs: while let Some(v) = frontier.pop() {
            for &(w, eid) in &adj[v] {
                let e = g.edge(eid);
                let phase = match (which, e.kind) {
                    (MatrixKind::Q, EdgeKind::Unoriented) => GaussianInt::new(-1, 0),
                    (MatrixKind::L, EdgeKind::Unoriented) => GaussianInt::one(),
                    (MatrixKind::Q, EdgeKind::Oriented) if e.u == v => GaussianInt::i(),
                    (MatrixKind::Q, EdgeKind::Oriented) => GaussianInt::new(0, -1),
                    (MatrixKind::L, EdgeKind::Oriented) if e.u == v => GaussianInt::new(0, -1),
                    (MatrixKind::L, EdgeKind::Oriented) => GaussianInt::i(),
                };
                let want = &phase * trial[v].as_ref().unwrap();
                match &trial[w] {
                    None => {
                        trial[w] = Some(want);
                        frontier.push(w);
                    }
                    Some(cur) if *cur != want => {
                        consistent = false;
                        break 'bfs;
                    }
                    Some(_) => {}
                }
            }
        }
        if consistent {
            any = true;
            for &v in &comp {
                x[v] = trial[v].take();
            }
        }
    }
    if !any {
        return None;
    }
    let vec: Vec<GaussianInt> =
        x.into_iter().map(|o| o.unwrap_or_else(GaussianInt::zero)).collect();
    // verify M x = 0
    let m = match which {
        MatrixKind::L => hermitian_laplacian(g),
        MatrixKind::Q => quasi_laplacian(g),
    };
    for r in 0..g.n() {
        let mut acc = GaussianInt::zero();
        for c in 0..g.n() {
            acc = &acc + &(m.get(r, c) * &vec[c]);
        }
        assert!(acc.is_zero(), "claimed kernel vector is not in the kernel");
    }
    Some(vec)
}

/// Global singularity facts about a mixed graph. The three-way
/// equivalence quapartite <=> all cycles type III <=> Q_H singular
/// (and its L_H counterpart with type V) holds per connected
/// component; `equivalence_report` asserts it component-wise and
/// reports the global booleans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub quapartite: bool,
    pub all_cycles_type_iii: bool,
    pub q_singular: bool,
    pub all_cycles_type_v: bool,
    pub l_singular: bool,
    pub cycle_count: usize,
}

pub fn equivalence_report(g: &MixedGraph) -> EquivalenceReport {
    for comp in g.connected_components() {
        let sub = g.induced(&comp);
        let facts = global_facts(&sub);
        assert_eq!(
            facts.quapartite, facts.all_cycles_type_iii,
            "component equivalence quapartite <=> all cycles type III violated"
        );
        assert_eq!(
            facts.all_cycles_type_iii, facts.q_singular,
            "component equivalence all cycles type III <=> Q singular violated"
        );
        assert_eq!(
            facts.all_cycles_type_v, facts.l_singular,
            "component equivalence all cycles type V <=> L singular violated"
        );
    }
    global_facts(g)
}

fn global_facts(g: &MixedGraph) -> EquivalenceReport {
    let cycles = simple_cycles(g);
    let mut all_iii = true;
    let mut all_v = true;
    for c in &cycles {
        let p = cycle_profile(g, c).expect("enumerated cycle is a cycle");
        let (s, t) = classify_cycle(&p);
        all_iii &= s == CycleTypeS::III;
        all_v &= t == CycleTypeT::V;
    }
    let det_q = quasi_laplacian(g).determinant().unwrap();
    let det_l = hermitian_laplacian(g).determinant().unwrap();
    EquivalenceReport {
        quapartite: find_quapartition(g).is_some(),
        all_cycles_type_iii: all_iii,
        q_singular: det_q.is_zero(),
        all_cycles_type_v: all_v,
        l_singular: det_l.is_zero(),
        cycle_count: cycles.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_four_cycle_is_quapartite() {
        let g = MixedGraph::parse("0 1 D\n1 2 D\n2 3 D\n3 0 D").unwrap();
        let p = find_quapartition(&g).unwrap();
        assert_eq!(p.labels(), &[1, 2, 3, 4]);
        assert!(p.is_valid_for(&g));
    }

    #[test]
    fn directed_triangle_is_not_quapartite() {
        let g = MixedGraph::parse("0 1 D\n1 2 D\n2 0 D").unwrap();
        assert_eq!(find_quapartition(&g), None);
    }

    #[test]
    fn unoriented_bipartite_iff_quapartite() {
        // an unoriented graph is quapartite exactly when bipartite:
        // parts alternate 1/3 (or 2/4)
        let p4 = MixedGraph::parse("0 1 U\n1 2 U\n2 3 U").unwrap();
        let p = find_quapartition(&p4).unwrap();
        assert_eq!(p.labels(), &[1, 3, 1, 3]);
        let k3 = MixedGraph::parse("0 1 U\n0 2 U\n1 2 U").unwrap();
        assert_eq!(find_quapartition(&k3), None);
    }

    #[test]
    fn parts_are_recovered() {
        let g = MixedGraph::parse("0 1 D\n1 2 D\n2 3 D\n3 0 D").unwrap();
        let parts = find_quapartition(&g).unwrap().parts();
        assert_eq!(parts, [vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn walk_weights() {
        let g = MixedGraph::parse("0 1 D\n1 2 U\n2 3 D").unwrap();
        // 0 ->(fwd) 1 -(un)- 2 ->(fwd) 3: 1 + 2 + 1 = 4
        let w = Walk { verts: vec![0, 1, 2, 3], edges: vec![0, 1, 2] };
        assert_eq!(walk_weight(&g, &w).unwrap(), 4);
        // reversal negates the oriented contributions only
        let w = Walk { verts: vec![3, 2, 1, 0], edges: vec![2, 1, 0] };
        assert_eq!(walk_weight(&g, &w).unwrap(), 0);
        // single vertex
        let w = Walk { verts: vec![0], edges: vec![] };
        assert_eq!(walk_weight(&g, &w).unwrap(), 0);
    }

    #[test]
    fn walk_validation() {
        let g = MixedGraph::parse("0 1 D\n1 2 U").unwrap();
        let w = Walk { verts: vec![], edges: vec![] };
        assert_eq!(walk_weight(&g, &w).unwrap_err(), WalkError::Empty);
        let w = Walk { verts: vec![0, 2], edges: vec![0] };
        assert_eq!(walk_weight(&g, &w).unwrap_err(), WalkError::BadEdge(0));
        let w = Walk { verts: vec![0, 1], edges: vec![] };
        assert!(matches!(walk_weight(&g, &w), Err(WalkError::LengthMismatch { .. })));
    }

    #[test]
    fn quapartite_walk_weight_multiple_of_four() {
        // same-part vertices of a quapartite graph are joined only by
        // walks of weight divisible by four
        let g = MixedGraph::parse("0 1 D\n1 2 D\n2 3 D\n3 0 D\n1 4 D").unwrap();
        let p = find_quapartition(&g).unwrap();
        // 0 and 2 lie in parts 1 and 3; 4 shares part 3 with 2
        assert_eq!(p.part(2), p.part(4));
        let w = Walk { verts: vec![2, 1, 4], edges: vec![1, 4] };
        assert_eq!(walk_weight(&g, &w).unwrap() % 4, 0);
        let w = Walk { verts: vec![0, 3, 2, 1, 0], edges: vec![3, 2, 1, 0] };
        assert_eq!(walk_weight(&g, &w).unwrap() % 4, 0);
    }

    #[test]
    fn kernel_vectors() {
        // directed four-cycle: both L and Q singular
        let g = MixedGraph::parse("0 1 D\n1 2 D\n2 3 D\n3 0 D").unwrap();
        assert!(null_labeling(&g, MatrixKind::Q).is_some());
        // unoriented path: both singular (tree)
        let g = MixedGraph::parse("0 1 U\n1 2 U").unwrap();
        assert!(null_labeling(&g, MatrixKind::Q).is_some());
        assert!(null_labeling(&g, MatrixKind::L).is_some());
        // unoriented triangle: Q (the signless Laplacian of an odd
        // cycle) is nonsingular, while L always kills the all-ones
        // vector on an unoriented graph
        let g = MixedGraph::parse("0 1 U\n0 2 U\n1 2 U").unwrap();
        assert_eq!(null_labeling(&g, MatrixKind::Q), None);
        let ones = vec![GaussianInt::one(); 3];
        assert_eq!(null_labeling(&g, MatrixKind::L), Some(ones));
    }

    #[test]
    fn kernel_vanishes_off_singular_components() {
        // unoriented triangle (nonsingular) plus an isolated edge
        // (singular): the kernel vector is zero on the triangle
        let g = MixedGraph::parse("0 1 U\n0 2 U\n1 2 U\n3 4 U").unwrap();
        let x = null_labeling(&g, MatrixKind::Q).unwrap();
        assert!(x[0].is_zero() && x[1].is_zero() && x[2].is_zero());
        assert!(!x[3].is_zero() && !x[4].is_zero());
    }

    #[test]
    fn equivalence_reports() {
        let g = MixedGraph::parse("0 1 D\n1 2 D\n2 3 D\n3 0 D").unwrap();
        let r = equivalence_report(&g);
        assert!(r.quapartite && r.all_cycles_type_iii && r.q_singular);
        assert_eq!(r.cycle_count, 1);

        // mixed triangle: its one cycle is type III / type IV
        let g = MixedGraph::parse("0 1 D\n1 2 D\n2 0 U").unwrap();
        let r = equivalence_report(&g);
        assert!(r.quapartite && r.all_cycles_type_iii && r.q_singular);
        assert!(!r.all_cycles_type_v && !r.l_singular);
    }

    #[test]
    fn disconnected_equivalences_hold_per_component() {
        // directed triangle plus an isolated vertex: globally not
        // quapartite yet Q is singular; the per-component assertions
        // still hold
        let g = MixedGraph::new(
            4,
            &[
                (0, 1, crate::graph::EdgeKind::Oriented),
                (1, 2, crate::graph::EdgeKind::Oriented),
                (2, 0, crate::graph::EdgeKind::Oriented),
            ],
        )
        .unwrap();
        let r = equivalence_report(&g);
        assert!(!r.quapartite && r.q_singular);
    }
}
