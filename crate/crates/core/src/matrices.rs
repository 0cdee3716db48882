//! Constructors for the six matrices of a mixed graph: the Hermitian
//! adjacency H, degree matrix D, Laplacian L = D - H, quasi-Laplacian
//! Q = D + H, and the incidence matrices S (with SS* = Q) and T (with
//! TT* = L).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::gaussian::GaussianInt;
use crate::graph::{EdgeKind, MixedGraph};
use crate::matrix::GMatrix;

/// Which Laplacian-side matrix an operation targets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixKind {
    L,
    Q,
}

/// Which incidence matrix an operation targets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Incidence {
    S,
    T,
}

impl MatrixKind {
    pub fn incidence(self) -> Incidence {
        match self {
            MatrixKind::L => Incidence::T,
            MatrixKind::Q => Incidence::S,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("orientation map is missing unoriented edge {0}")]
    MissingOrientation(usize),
    #[error("orientation map names edge {0} which is not unoriented")]
    NotUnoriented(usize),
}

/// A chosen direction (head, tail) for each unoriented edge, used by
/// the incidence matrix T.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OrientationMap {
    dir: BTreeMap<usize, (usize, usize)>,
}

impl OrientationMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, edge_id: usize, head: usize, tail: usize) {
        self.dir.insert(edge_id, (head, tail));
    }

    pub fn head_tail(&self, edge_id: usize) -> Option<(usize, usize)> {
        self.dir.get(&edge_id).copied()
    }

    /// Deterministic default: every unoriented edge is directed from
    /// the lower to the higher vertex index.
    pub fn lower_to_higher(g: &MixedGraph) -> Self {
        let mut map = OrientationMap::new();
        for e in g.edges() {
            if e.kind == EdgeKind::Unoriented {
                map.insert(e.id, e.u.min(e.v), e.u.max(e.v));
            }
        }
        map
    }

    /// Flips the chosen direction of one edge.
    pub fn flip(&mut self, edge_id: usize) {
        if let Some((h, t)) = self.dir.get_mut(&edge_id).map(|p| *p) {
            self.dir.insert(edge_id, (t, h));
        }
    }

    pub fn validate(&self, g: &MixedGraph) -> Result<(), MatrixError> {
        for e in g.edges() {
            if e.kind == EdgeKind::Unoriented && !self.dir.contains_key(&e.id) {
                return Err(MatrixError::MissingOrientation(e.id));
            }
        }
        for (&id, _) in &self.dir {
            if id >= g.m() || g.edge(id).kind != EdgeKind::Unoriented {
                return Err(MatrixError::NotUnoriented(id));
            }
        }
        Ok(())
    }
}

/// h_uv = i for an oriented edge with head u and tail v, -i for the
/// reverse, 1 for an unoriented edge, 0 otherwise.
pub fn hermitian_adjacency(g: &MixedGraph) -> GMatrix {
    let mut h = GMatrix::zeros(g.n(), g.n());
    for e in g.edges() {
        match e.kind {
            EdgeKind::Unoriented => {
                h.set(e.u, e.v, GaussianInt::one());
                h.set(e.v, e.u, GaussianInt::one());
            }
            EdgeKind::Oriented => {
                h.set(e.u, e.v, GaussianInt::i());
                h.set(e.v, e.u, -GaussianInt::i());
            }
        }
    }
    h
}

/// Diagonal matrix of underlying-graph degrees (every incident edge
/// counts once regardless of kind).
pub fn degree_matrix(g: &MixedGraph) -> GMatrix {
    let mut d = GMatrix::zeros(g.n(), g.n());
    for e in g.edges() {
        for w in [e.u, e.v] {
            let cur = d.get(w, w).clone();
            d.set(w, w, &cur + &GaussianInt::one());
        }
    }
    d
}

/// L_H = D - H.
pub fn hermitian_laplacian(g: &MixedGraph) -> GMatrix {
    let d = degree_matrix(g);
    let h = hermitian_adjacency(g);
    GMatrix::from_fn(g.n(), g.n(), |r, c| d.get(r, c) - h.get(r, c))
}

/// Q_H = D + H.
pub fn quasi_laplacian(g: &MixedGraph) -> GMatrix {
    let d = degree_matrix(g);
    let h = hermitian_adjacency(g);
    GMatrix::from_fn(g.n(), g.n(), |r, c| d.get(r, c) + h.get(r, c))
}

/// The quasi-incidence matrix S (n x m, columns in edge-id order):
/// s_ue = 1 for an unoriented edge incident to u or an oriented edge
/// with head u, -i for an oriented edge with tail u, 0 otherwise.
pub fn quasi_incidence(g: &MixedGraph) -> GMatrix {
    let mut s = GMatrix::zeros(g.n(), g.m());
    for e in g.edges() {
        match e.kind {
            EdgeKind::Unoriented => {
                s.set(e.u, e.id, GaussianInt::one());
                s.set(e.v, e.id, GaussianInt::one());
            }
            EdgeKind::Oriented => {
                s.set(e.u, e.id, GaussianInt::one());
                s.set(e.v, e.id, -GaussianInt::i());
            }
        }
    }
    s
}

/// The incidence matrix T (n x m) for a chosen orientation of the
/// unoriented edges: t_ue = 1 for the head of any edge, -1 for the
/// tail of a newly oriented edge, i for the tail of an originally
/// oriented edge, 0 otherwise.
pub fn incidence(g: &MixedGraph, orient: &OrientationMap) -> Result<GMatrix, MatrixError> {
    let mut t = GMatrix::zeros(g.n(), g.m());
    for e in g.edges() {
        match e.kind {
            EdgeKind::Oriented => {
                t.set(e.u, e.id, GaussianInt::one());
                t.set(e.v, e.id, GaussianInt::i());
            }
            EdgeKind::Unoriented => {
                let (head, tail) = orient
                    .head_tail(e.id)
                    .ok_or(MatrixError::MissingOrientation(e.id))?;
                t.set(head, e.id, GaussianInt::one());
                t.set(tail, e.id, -GaussianInt::one());
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn adjacency_single_unoriented_edge() {
        let gr = MixedGraph::parse("0 1 U").unwrap();
        let h = hermitian_adjacency(&gr);
        assert_eq!(h, GMatrix::from_rows(&[vec![(0, 0), (1, 0)], vec![(1, 0), (0, 0)]]));
    }

    #[test]
    fn adjacency_single_oriented_edge() {
        let gr = MixedGraph::parse("0 1 D").unwrap();
        let h = hermitian_adjacency(&gr);
        assert_eq!(h, GMatrix::from_rows(&[vec![(0, 0), (0, 1)], vec![(0, -1), (0, 0)]]));
    }

    #[test]
    fn adjacency_empty_graph() {
        let gr = MixedGraph::new(3, &[]).unwrap();
        assert_eq!(hermitian_adjacency(&gr), GMatrix::zeros(3, 3));
    }

    #[test]
    fn undirected_k3_degree_and_quasi_laplacian() {
        let gr = MixedGraph::parse("0 1 U\n0 2 U\n1 2 U").unwrap();
        let d = degree_matrix(&gr);
        assert_eq!(d, GMatrix::from_rows(&[
            vec![(2, 0), (0, 0), (0, 0)],
            vec![(0, 0), (2, 0), (0, 0)],
            vec![(0, 0), (0, 0), (2, 0)],
        ]));
        let q = quasi_laplacian(&gr);
        assert_eq!(q, GMatrix::from_rows(&[
            vec![(2, 0), (1, 0), (1, 0)],
            vec![(1, 0), (2, 0), (1, 0)],
            vec![(1, 0), (1, 0), (2, 0)],
        ]));
    }

    #[test]
    fn directed_triangle_laplacian() {
        let gr = MixedGraph::parse("0 1 D\n1 2 D\n2 0 D").unwrap();
        let l = hermitian_laplacian(&gr);
        assert_eq!(l, GMatrix::from_rows(&[
            vec![(2, 0), (0, -1), (0, 1)],
            vec![(0, 1), (2, 0), (0, -1)],
            vec![(0, -1), (0, 1), (2, 0)],
        ]));
    }

    #[test]
    fn single_oriented_edge_quasi_laplacian_equals_ss_star() {
        let gr = MixedGraph::parse("0 1 D").unwrap();
        let q = quasi_laplacian(&gr);
        assert_eq!(q, GMatrix::from_rows(&[vec![(1, 0), (0, 1)], vec![(0, -1), (1, 0)]]));
        assert_eq!(q, quasi_incidence(&gr).mul_conj_transpose());
    }

    #[test]
    fn quasi_incidence_columns() {
        let gr = MixedGraph::parse("0 1 U").unwrap();
        let s = quasi_incidence(&gr);
        assert_eq!(s, GMatrix::from_rows(&[vec![(1, 0)], vec![(1, 0)]]));

        let gr = MixedGraph::parse("0 1 D").unwrap();
        let s = quasi_incidence(&gr);
        assert_eq!(s, GMatrix::from_rows(&[vec![(1, 0)], vec![(0, -1)]]));

        // path 0 -> 1, 1 - 2 unoriented
        let gr = MixedGraph::parse("0 1 D\n1 2 U").unwrap();
        let s = quasi_incidence(&gr);
        assert_eq!(s, GMatrix::from_rows(&[
            vec![(1, 0), (0, 0)],
            vec![(0, -1), (1, 0)],
            vec![(0, 0), (1, 0)],
        ]));
    }

    #[test]
    fn incidence_columns() {
        // unoriented 0-1 oriented as 0 -> 1
        let gr = MixedGraph::parse("0 1 U").unwrap();
        let t = incidence(&gr, &OrientationMap::lower_to_higher(&gr)).unwrap();
        assert_eq!(t, GMatrix::from_rows(&[vec![(1, 0)], vec![(-1, 0)]]));

        // originally oriented 0 -> 1
        let gr = MixedGraph::parse("0 1 D").unwrap();
        let t = incidence(&gr, &OrientationMap::lower_to_higher(&gr)).unwrap();
        assert_eq!(t, GMatrix::from_rows(&[vec![(1, 0)], vec![(0, 1)]]));
    }

    #[test]
    fn reversing_new_orientation_flips_column_sign() {
        let gr = MixedGraph::parse("0 1 U\n1 2 U\n2 0 U").unwrap();
        let mut orient = OrientationMap::lower_to_higher(&gr);
        let t1 = incidence(&gr, &orient).unwrap();
        orient.flip(1);
        let t2 = incidence(&gr, &orient).unwrap();
        for r in 0..3 {
            assert_eq!(*t2.get(r, 1), -t1.get(r, 1));
            assert_eq!(t2.get(r, 0), t1.get(r, 0));
        }
        // determinant of a square submatrix flips sign only
        let d1 = t1.submatrix(&[0, 1, 2], &[0, 1, 2]).unwrap().determinant().unwrap();
        let d2 = t2.submatrix(&[0, 1, 2], &[0, 1, 2]).unwrap().determinant().unwrap();
        assert_eq!(d2, -d1);
    }

    #[test]
    fn incidence_missing_orientation_errors() {
        let gr = MixedGraph::parse("0 1 U").unwrap();
        assert_eq!(
            incidence(&gr, &OrientationMap::new()).unwrap_err(),
            MatrixError::MissingOrientation(0)
        );
    }

    #[test]
    fn laplacians_are_hermitian_with_degree_diagonal() {
        let gr = MixedGraph::parse("0 1 D\n1 2 U\n2 0 D\n2 3 U").unwrap();
        let l = hermitian_laplacian(&gr);
        let q = quasi_laplacian(&gr);
        assert!(hermitian_adjacency(&gr).is_hermitian());
        assert!(l.is_hermitian());
        assert!(q.is_hermitian());
        let d = degree_matrix(&gr);
        for v in 0..gr.n() {
            assert_eq!(l.get(v, v), d.get(v, v));
            assert_eq!(q.get(v, v), d.get(v, v));
        }
    }
}
