//! Dense symmetric matrices and the two graph matrices built on them.
//!
//! [`dso_matrix`] carries `edge_weight(d_i, d_j)` on adjacent pairs and zeros
//! elsewhere (including the diagonal); [`adjacency_matrix`] is the plain 0/1
//! matrix.  Both feed the same eigensolver.

use crate::graph::Graph;
use crate::invariants::edge_weight;

/// A dense symmetric `n x n` matrix with full row-major storage.
///
/// Writes go through [`DenseSym::set_sym`], which mirrors the entry, so the
/// storage is symmetric by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSym {
    n: usize,
    data: Vec<f64>,
}

impl DenseSym {
    /// The zero matrix of size `n`.
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    /// Matrix dimension.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    /// Frobenius norm `sqrt(Σ a_ij²)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    /// Diagonal sum.
    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// The principal submatrix with row and column `remove` deleted; entries
    /// keep their original values, so for a graph matrix this is vertex
    /// deletion *without* recomputing degrees.
    pub fn principal_submatrix(&self, remove: usize) -> DenseSym {
        assert!(remove < self.n);
        let mut sub = DenseSym::zeros(self.n - 1);
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != remove).collect();
        for (i, &oi) in keep.iter().enumerate() {
            for (j, &oj) in keep.iter().enumerate() {
                sub.data[i * sub.n + j] = self.get(oi, oj);
            }
        }
        sub
    }

    /// Flat row-major view, length `n*n`.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

/// The diminished Sombor matrix of `g`.
pub fn dso_matrix(g: &Graph) -> DenseSym {
    let mut m = DenseSym::zeros(g.n_vertices());
    for &(i, j) in g.edges() {
        let w = edge_weight(g.degree(i as usize), g.degree(j as usize));
        m.set_sym(i as usize, j as usize, w);
    }
    m
}

/// The 0/1 adjacency matrix of `g`.
pub fn adjacency_matrix(g: &Graph) -> DenseSym {
    let mut m = DenseSym::zeros(g.n_vertices());
    for &(i, j) in g.edges() {
        m.set_sym(i as usize, j as usize, 1.0);
    }
    m
}
