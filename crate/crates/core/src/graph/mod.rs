//! Finite simple graphs on labeled vertices `0..n`.
//!
//! The representation keeps three synchronized views of the same graph: a
//! normalized edge list (each pair stored once as `(i, j)` with `i < j`,
//! sorted), one adjacency bit row per vertex for O(1) membership tests, and a
//! cached degree sequence.  Graphs are immutable after construction, so the
//! views can never drift apart and a `&Graph` is safe to share across threads.
//!
//! Vertex labels are `u32` and loops/multi-edges are rejected at the boundary;
//! everything downstream (indices, matrices, audits) may rely on that.

mod classify;
mod edgelist;
mod enumerate;
mod families;
mod graph6;

pub use classify::{classify, diameter, Diameter, GraphClass};
pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError};
pub use enumerate::{
    canonical_key, labeled_graph_count, labeled_graph_from_mask, labeled_graphs, EnumerateError,
    MAX_CANONICAL_ORDER, MAX_ENUMERATION_ORDER,
};
pub use families::{generate_family, FamilyError, GraphFamily};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};

use std::fmt;
use thiserror::Error;

/// Errors rejected at graph construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// An edge references a vertex `>= n`.
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: u32, v: u32, n: usize },
    /// A loop `(v, v)` was supplied; simple graphs have none.
    #[error("edge ({v}, {v}) is a loop; only simple graphs are supported")]
    SelfLoop { v: u32 },
}

/// Degree data summarized once per graph; several bound checks gate on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSummary {
    /// Number of vertices.
    pub n: usize,
    /// Number of edges.
    pub m: usize,
    /// Maximum degree (0 for an edgeless graph).
    pub max_degree: u32,
    /// Minimum degree over all vertices (0 when isolated vertices exist).
    pub min_degree: u32,
    /// First Zagreb index: the integer sum of squared degrees.
    pub first_zagreb: u64,
}

/// An immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Adjacency bit rows, `words` u64 words per vertex, row-major.
    adj: Vec<u64>,
    words: usize,
    /// Normalized edge list: `i < j`, sorted lexicographically, no duplicates.
    edges: Vec<(u32, u32)>,
    degrees: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list.
    ///
    /// Pairs may come in either orientation and may repeat; they are
    /// normalized to `i < j`, sorted, and deduplicated.  Loops and vertex
    /// labels `>= n` are rejected with the offending pair.
    pub fn from_edge_list(
        n: usize,
        pairs: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, GraphError> {
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (u, v) in pairs {
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            if (u as usize) >= n || (v as usize) >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_normalized(n, edges))
    }

    /// Builds from edges already normalized (`i < j`, sorted, deduplicated).
    /// Internal constructor shared by families, enumeration, and the parsers.
    pub(crate) fn from_normalized(n: usize, mut edges: Vec<(u32, u32)>) -> Self {
        // Callers guarantee `i < j` and no duplicates, but arrive in
        // whatever order they generate pairs (the complement and mask
        // constructors go column-major); the stored contract is
        // lexicographic, and derived equality depends on it.
        edges.sort_unstable();
        let words = n.div_ceil(64).max(1);
        let mut adj = vec![0u64; n * words];
        let mut degrees = vec![0u32; n];
        for &(i, j) in &edges {
            debug_assert!(i < j && (j as usize) < n);
            let (i, j) = (i as usize, j as usize);
            adj[i * words + j / 64] |= 1 << (j % 64);
            adj[j * words + i / 64] |= 1 << (i % 64);
            degrees[i] += 1;
            degrees[j] += 1;
        }
        Self { n, adj, words, edges, degrees }
    }

    /// Number of vertices.
    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Degree of vertex `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.degrees[v]
    }

    /// The degree sequence indexed by vertex.
    #[inline]
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// The normalized edge list (`i < j`, sorted).
    #[inline]
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Whether vertices `u` and `v` are adjacent (false for `u == v`).
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Iterates over the neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.words..(v + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// The complement graph: same vertices, exactly the missing pairs as edges.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if !self.has_edge(i, j) {
                    edges.push((i as u32, j as u32));
                }
            }
        }
        Graph::from_normalized(self.n, edges)
    }

    /// Disjoint union: vertices of `other` are relabeled to start at `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n as u32;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(i, j)| (i + shift, j + shift)));
        Graph::from_normalized(self.n + other.n, edges)
    }

    /// Degree summary used by the bound-check gates.
    pub fn degree_summary(&self) -> DegreeSummary {
        let max_degree = self.degrees.iter().copied().max().unwrap_or(0);
        let min_degree = self.degrees.iter().copied().min().unwrap_or(0);
        let first_zagreb = self.degrees.iter().map(|&d| u64::from(d) * u64::from(d)).sum();
        DegreeSummary {
            n: self.n,
            m: self.edges.len(),
            max_degree,
            min_degree,
            first_zagreb,
        }
    }

    /// Minimum degree over non-isolated vertices, if any edge exists.
    pub fn min_positive_degree(&self) -> Option<u32> {
        self.degrees.iter().copied().filter(|&d| d > 0).min()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ n: {}, edges: {:?} }}", self.n, self.edges)
    }
}

// ============================================================================
// Tests
// ============================================================================
