//! Parameterized graph families used as fixtures and closed-form references.

use super::Graph;
use thiserror::Error;

/// A family name together with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    /// Path on `n >= 1` vertices.
    Path { n: usize },
    /// Cycle on `n >= 3` vertices.
    Cycle { n: usize },
    /// Complete graph on `n >= 1` vertices.
    Complete { n: usize },
    /// Complete bipartite graph with parts of size `p, q >= 1`.
    CompleteBipartite { p: usize, q: usize },
    /// Star on `n >= 2` vertices (one center adjacent to `n - 1` leaves).
    Star { n: usize },
    /// Perfect matching on an even `n >= 2` vertices: `n/2` disjoint edges.
    Matching { n: usize },
    /// `n` isolated vertices.
    Edgeless { n: usize },
}

/// A family parameter outside its supported range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{family} requires {requirement}, got {given}")]
pub struct FamilyError {
    pub family: &'static str,
    pub requirement: &'static str,
    pub given: usize,
}

/// Builds the requested family member on vertices `0..n`.
///
/// Vertex layout is fixed: paths and cycles are numbered along the walk, the
/// star center is vertex 0, bipartite parts are `0..p` and `p..p+q`, and the
/// matching pairs consecutive vertices.
pub fn generate_family(family: GraphFamily) -> Result<Graph, FamilyError> {
    use GraphFamily::*;
    let fail = |family, requirement, given| Err(FamilyError { family, requirement, given });
    let edges: Vec<(u32, u32)> = match family {
        Path { n: 0 } => return fail("path", "n >= 1", 0),
        Path { n } => (1..n as u32).map(|v| (v - 1, v)).collect(),
        Cycle { n } if n < 3 => return fail("cycle", "n >= 3", n),
        Cycle { n } => (1..n as u32).map(|v| (v - 1, v)).chain([(0, n as u32 - 1)]).collect(),
        Complete { n: 0 } => return fail("complete", "n >= 1", 0),
        Complete { n } => {
            let mut edges = Vec::with_capacity(n * (n - 1) / 2);
            for j in 1..n as u32 {
                for i in 0..j {
                    edges.push((i, j));
                }
            }
            edges
        }
        CompleteBipartite { p, q } if p < 1 || q < 1 => {
            return fail("complete bipartite", "p, q >= 1", p.min(q))
        }
        CompleteBipartite { p, q } => {
            let mut edges = Vec::with_capacity(p * q);
            for i in 0..p as u32 {
                for j in 0..q as u32 {
                    edges.push((i, p as u32 + j));
                }
            }
            edges
        }
        Star { n } if n < 2 => return fail("star", "n >= 2", n),
        Star { n } => (1..n as u32).map(|v| (0, v)).collect(),
        Matching { n } if n < 2 || n % 2 != 0 => {
            return fail("matching", "an even n >= 2", n)
        }
        Matching { n } => (0..n as u32 / 2).map(|k| (2 * k, 2 * k + 1)).collect(),
        Edgeless { n: _ } => Vec::new(),
    };
    let n = match family {
        CompleteBipartite { p, q } => p + q,
        Path { n } | Cycle { n } | Complete { n } | Star { n } | Matching { n }
        | Edgeless { n } => n,
    };
    Ok(Graph::from_normalized(n, {
        let mut edges = edges;
        edges.sort_unstable();
        edges
    }))
}
