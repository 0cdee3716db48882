//! Exact combinatorics of Hermitian Laplacian and quasi-Laplacian
//! minors of mixed graphs.
//!
//! A mixed graph carries both unoriented and oriented edges. Its
//! Hermitian adjacency matrix puts `i` / `-i` on oriented pairs and
//! `1` on unoriented ones; the Laplacian `L = D - H` and the
//! quasi-Laplacian `Q = D + H` factor through incidence matrices as
//! `Q = S S*` and `L = T T*`. Every minor of `L` and `Q` then expands
//! over combinatorial substructures of the graph: rootless trees and
//! unicyclic pieces classified by cycle type. This crate implements
//! the matrices, the substructure combinatorics, and the singularity
//! theory (quapartite partitions, kernel vectors, matrix-tree
//! corollaries), all over exact Gaussian integers.

pub mod cycles;
pub mod gaussian;
pub mod graph;
pub mod matrices;
pub mod matrix;
pub mod minors;
pub mod quapartite;
pub mod substructure;

pub use cycles::{
    classify_cycle, cycle_det_normsq, cycle_profile, simple_cycles, CycleProfile, CycleSeq,
    CycleTypeS, CycleTypeT,
};
pub use gaussian::GaussianInt;
pub use graph::{EdgeKind, EdgeRecord, GraphError, MixedGraph, ParseError};
pub use matrices::{
    degree_matrix, hermitian_adjacency, hermitian_laplacian, incidence, quasi_incidence,
    quasi_laplacian, Incidence, MatrixKind, OrientationMap,
};
pub use matrix::GMatrix;
pub use minors::{
    cofactor, enumerate_generalized_matchings, enumerate_square_substructures, nonprincipal_minor,
    principal_minor, rootless_tree_det, spanning_tree_count, square_substructure_eval,
    GeneralizedMatching, Method, MinorReport, MinorTerm, SquareSubstructureEval,
};
pub use quapartite::{
    equivalence_report, find_quapartition, null_labeling, walk_weight, EquivalenceReport,
    QuadPartition, Walk,
};
pub use substructure::{ComponentShape, Substructure};
