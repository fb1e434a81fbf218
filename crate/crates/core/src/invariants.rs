//! Degree-based indices and the trace identities linking them to the matrix.
//!
//! For an edge `uv` with endpoint degrees `d_u`, `d_v`:
//!
//! | quantity                | per-edge term                              |
//! |-------------------------|--------------------------------------------|
//! | DSO index               | `sqrt(d_u^2 + d_v^2) / (d_u + d_v)`        |
//! | geometric–arithmetic    | `2 sqrt(d_u d_v) / (d_u + d_v)`            |
//! | Gutman–Milovanović      | `(d_u d_v)^alpha (d_u + d_v)^beta`         |
//!
//! and the first Zagreb index is the vertex sum `Σ d_i^2`.  The DSO matrix
//! inherits its entries from the first row, so `tr(M²)` has the closed edge
//! form computed by [`trace_square_edge_formula`]; [`trace_square_identity`]
//! exposes the algebraic rewrite of that sum in terms of the `(1, -2)`
//! Gutman–Milovanović index, in both the corrected form and the published
//! form that differs by a factor of two on the index term.

use crate::graph::Graph;

/// Off-diagonal matrix weight of an edge with endpoint degrees `du`, `dv`.
///
/// Values lie in `[sqrt(2)/2, 1)`, hitting the lower end exactly when the
/// degrees agree.  Endpoints of a real edge always have positive degree;
/// zero degrees are a caller bug and panic.
pub fn edge_weight(du: u32, dv: u32) -> f64 {
    assert!(du >= 1 && dv >= 1, "edge endpoints must have positive degree, got ({du}, {dv})");
    let (x, y) = (f64::from(du), f64::from(dv));
    (x * x + y * y).sqrt() / (x + y)
}

/// Sums `f(d_u, d_v)` over the edges of `g`.
fn edge_sum(g: &Graph, f: impl Fn(f64, f64) -> f64) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let du = f64::from(g.degree(u as usize));
            let dv = f64::from(g.degree(v as usize));
            f(du, dv)
        })
        .sum()
}

/// The diminished Sombor index: the sum of [`edge_weight`] over all edges.
pub fn dso_index(g: &Graph) -> f64 {
    edge_sum(g, |x, y| (x * x + y * y).sqrt() / (x + y))
}

/// The geometric–arithmetic index `Σ 2 sqrt(d_u d_v) / (d_u + d_v)`.
pub fn geometric_arithmetic(g: &Graph) -> f64 {
    edge_sum(g, |x, y| 2.0 * (x * y).sqrt() / (x + y))
}

/// The first Zagreb index `Σ_v d_v^2`, as a float for formula plumbing.
pub fn first_zagreb(g: &Graph) -> f64 {
    g.degrees().iter().map(|&d| f64::from(d) * f64::from(d)).sum()
}

/// The Gutman–Milovanović index `Σ (d_u d_v)^alpha (d_u + d_v)^beta`.
pub fn gutman_milovanovic(g: &Graph, alpha: f64, beta: f64) -> f64 {
    edge_sum(g, |x, y| (x * y).powf(alpha) * (x + y).powf(beta))
}

/// `tr(M²)` in closed edge form: `2 Σ (d_u² + d_v²) / (d_u + d_v)²`.
pub fn trace_square_edge_formula(g: &Graph) -> f64 {
    2.0 * edge_sum(g, |x, y| (x * x + y * y) / ((x + y) * (x + y)))
}

/// Both sides of the `tr(M²)/2` rewrite, in both published and corrected form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSquareIdentity {
    /// `Σ (d_u² + d_v²) / (d_u + d_v)²`, the direct edge sum (`tr(M²)/2`).
    pub lhs: f64,
    /// `m - 2·M_{1,-2}` — the algebraically forced right-hand side, since
    /// `(d_u² + d_v²)/(d_u + d_v)² = 1 - 2 d_u d_v/(d_u + d_v)²`.
    pub rhs_corrected: f64,
    /// `m - M_{1,-2}` — the right-hand side as published, kept for audit
    /// purposes; it overshoots by one copy of the index.
    pub rhs_as_stated: f64,
}

/// Evaluates the `tr(M²)/2` identity; downstream "corrected" bounds use
/// [`TraceSquareIdentity::rhs_corrected`].
pub fn trace_square_identity(g: &Graph) -> TraceSquareIdentity {
    let m = g.n_edges() as f64;
    let index = gutman_milovanovic(g, 1.0, -2.0);
    TraceSquareIdentity {
        lhs: trace_square_edge_formula(g) / 2.0,
        rhs_corrected: m - 2.0 * index,
        rhs_as_stated: m - index,
    }
}

// ============================================================================
// Tests
// ============================================================================
