//! Structural classification: connectivity, regularity, completeness,
//! bipartite structure, and diameter.  The bound registry gates its checks
//! and locates claimed equality classes through [`GraphClass`].

use super::Graph;
use std::collections::VecDeque;
use std::fmt;

/// Graph diameter, infinite when the graph is disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

/// Structural flags for one graph.
///
/// Degenerate conventions: the graphs on 0 or 1 vertices count as connected
/// (and complete); `star` and `perfect_matching` require at least 2 vertices;
/// `complete_bipartite` requires both parts non-empty, hence a connected
/// graph on at least 2 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClass {
    pub connected: bool,
    /// `Some(k)` when every vertex has degree `k`.
    pub regular: Option<u32>,
    pub complete: bool,
    /// Two-coloring classes when the graph is bipartite (sorted vertex lists;
    /// isolated vertices land in the first class).
    pub bipartite: Option<(Vec<u32>, Vec<u32>)>,
    /// Part sizes `(p, q)` with `p <= q` when the graph is a complete
    /// bipartite graph `K_{p,q}`.
    pub complete_bipartite: Option<(usize, usize)>,
    /// Star `K_{1,n-1}` on `n >= 2` vertices.
    pub star: bool,
    pub edgeless: bool,
    /// Every vertex has degree exactly 1 (a disjoint union of `n/2` edges).
    pub perfect_matching: bool,
    pub diameter: Diameter,
}

/// Breadth-first distances from `src`; unreachable vertices stay `u32::MAX`.
fn bfs(g: &Graph, src: usize, dist: &mut [u32]) {
    dist.fill(u32::MAX);
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
}

/// Diameter by breadth-first search from every vertex.
pub fn diameter(g: &Graph) -> Diameter {
    let n = g.n_vertices();
    if n <= 1 {
        return Diameter::Finite(0);
    }
    let mut dist = vec![0u32; n];
    let mut best = 0;
    for src in 0..n {
        bfs(g, src, &mut dist);
        for &d in dist.iter() {
            if d == u32::MAX {
                return Diameter::Infinite;
            }
            best = best.max(d);
        }
    }
    Diameter::Finite(best)
}

/// Two-coloring by breadth-first search over every component.
fn bipartition(g: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.n_vertices();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    let part = |c: u8| (0..n as u32).filter(|&v| color[v as usize] == c).collect();
    Some((part(0), part(1)))
}

/// Computes every structural flag for `g`.
pub fn classify(g: &Graph) -> GraphClass {
    let n = g.n_vertices();
    let m = g.n_edges();
    let degrees = g.degrees();
    let regular = match degrees.split_first() {
        None => Some(0),
        Some((&d0, rest)) => rest.iter().all(|&d| d == d0).then_some(d0),
    };
    let diameter = diameter(g);
    let connected = diameter != Diameter::Infinite;
    let bipartite = bipartition(g);
    let complete_bipartite = match &bipartite {
        Some((a, b)) if connected && !a.is_empty() && !b.is_empty() => {
            // A connected bipartite graph is complete bipartite exactly when
            // every cross pair is present.
            (m == a.len() * b.len()).then(|| (a.len().min(b.len()), a.len().max(b.len())))
        }
        _ => None,
    };
    GraphClass {
        connected,
        regular,
        complete: m == n * n.saturating_sub(1) / 2,
        star: complete_bipartite.is_some_and(|(p, _)| p == 1),
        complete_bipartite,
        bipartite,
        edgeless: m == 0,
        perfect_matching: n >= 2 && degrees.iter().all(|&d| d == 1),
        diameter,
    }
}
