//! Exhaustive enumeration of labeled graphs and a brute-force canonical key.
//!
//! Labeled graphs on `n` vertices are indexed by an edge bitmask: bit `k`
//! selects the `k`-th pair in the column-major upper-triangle order used by
//! graph6 (`(0,1), (0,2), (1,2), (0,3), ...`), so mask enumeration, graph6
//! payloads, and canonical keys all speak about the same bit positions.
//! The canonical key minimizes that bit string over all `n!` relabelings —
//! exact isomorphism invariance bought by brute force, hence the small-order
//! limits.

use super::{graph6::write_graph6, Graph};
use thiserror::Error;

/// Largest order for which full labeled enumeration is offered (2^21 graphs).
pub const MAX_ENUMERATION_ORDER: usize = 7;
/// Largest order for which the factorial canonical key is offered (8! relabelings).
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Size-limit errors for the exhaustive operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("labeled enumeration supports 1..={MAX_ENUMERATION_ORDER} vertices, got {n}")]
    EnumerationOrder { n: usize },
    #[error("canonical keys support 1..={MAX_CANONICAL_ORDER} vertices, got {n}")]
    CanonicalOrder { n: usize },
}

/// Number of labeled graphs on `n` vertices: `2^(n(n-1)/2)`.
pub fn labeled_graph_count(n: usize) -> Result<u64, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::EnumerationOrder { n });
    }
    Ok(1u64 << (n * (n - 1) / 2))
}

/// The graph whose edge set is the given bitmask (column-major pair order).
///
/// Panics if `n` exceeds [`MAX_ENUMERATION_ORDER`] or the mask has bits
/// beyond pair `n(n-1)/2`; the streaming wrappers guarantee both.
pub fn labeled_graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(n <= MAX_ENUMERATION_ORDER && (pairs == 64 || mask >> pairs == 0));
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    let mut k = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::from_normalized(n, edges)
}

/// Streams every labeled graph on `n` vertices in mask order.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    let count = labeled_graph_count(n)?;
    Ok((0..count).map(move |mask| labeled_graph_from_mask(n, mask)))
}

/// The upper-triangle bit string of `g` relabeled by `perm`, packed into a
/// `u32` so that lexicographically smaller bit strings compare smaller.
fn relabeled_bits(g: &Graph, perm: &[usize]) -> u32 {
    let n = g.n_vertices();
    let mut bits = 0u32;
    for j in 1..n {
        for i in 0..j {
            bits = bits << 1 | u32::from(g.has_edge(perm[i], perm[j]));
        }
    }
    bits
}

/// Canonical key: the graph6 record of the lexicographically smallest
/// relabeling.  Two graphs of the same order get equal keys exactly when
/// they are isomorphic; the leading size header separates different orders.
pub fn canonical_key(g: &Graph) -> Result<String, EnumerateError> {
    let n = g.n_vertices();
    if n == 0 || n > MAX_CANONICAL_ORDER {
        return Err(EnumerateError::CanonicalOrder { n });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = relabeled_bits(g, &perm);
    // Heap's algorithm over all n! permutations.
    let mut stack = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            best = best.min(relabeled_bits(g, &perm));
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    // Re-expand the winning bit string into a graph and render it as graph6.
    let pairs = n * (n - 1) / 2;
    let mut mask = 0u64;
    for k in 0..pairs {
        if best >> (pairs - 1 - k) & 1 == 1 {
            mask |= 1 << k;
        }
    }
    Ok(write_graph6(&labeled_graph_from_mask(n, mask)))
}

// ============================================================================
// Tests
// ============================================================================
