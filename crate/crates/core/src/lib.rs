//! Toolkit for the *diminished Sombor* (DSO) matrix of a finite simple graph.
//!
//! For a graph `G` with degree sequence `d_1, ..., d_n`, the diminished Sombor
//! matrix has entry `sqrt(d_i^2 + d_j^2) / (d_i + d_j)` whenever `ij` is an
//! edge and `0` otherwise.  Everything in this crate is built around that
//! matrix and the degree-based index it sums to:
//!
//! * [`graph`] — compact simple-graph type, families, classification,
//!   exhaustive enumeration, and the graph6 / edge-list interchange formats;
//! * [`invariants`] — degree-based indices (DSO, geometric–arithmetic, Zagreb,
//!   Gutman–Milovanović) and the trace identities that tie them to the matrix;
//! * [`matrix`] / [`eigen`] — dense symmetric storage and a cyclic Jacobi
//!   eigensolver with an explicit convergence contract;
//! * [`spectra`] — closed-form spectra for complete graphs, cycles, complete
//!   bipartite graphs, stars, and the regular-graph scaling rule;
//! * [`charpoly`] — characteristic polynomials, including an exact-rational
//!   recurrence for paths;
//! * [`audit`] — a registry of published spectral bounds evaluated as
//!   falsifiable checks over single graphs or whole corpora;
//! * [`search`] — an exhaustive near-integer energy scan.
//!
//! Floating-point output throughout is rendered with a fixed 10-significant-
//! digit formatter ([`numfmt`]) so that identical inputs produce byte-identical
//! reports regardless of thread count or platform.

pub mod audit;
pub mod charpoly;
pub mod eigen;
pub mod graph;
pub mod invariants;
pub mod matrix;
pub mod numfmt;
pub mod search;
pub mod spectra;

pub use eigen::{EigenError, Spectrum};
pub use graph::{Graph, GraphError};
pub use matrix::{adjacency_matrix, dso_matrix, DenseSym};
