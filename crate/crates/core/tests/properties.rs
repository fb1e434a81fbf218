//! Randomized invariants: codec roundtrips, complement involution, spectral
//! moment identities, and eigenvalue interlacing under vertex deletion.

use dso_core::eigen::{dso_spectrum, sym_eigenvalues, DEFAULT_TOL};
use dso_core::graph::{parse_edge_list, parse_graph6, write_edge_list, write_graph6, Graph};
use dso_core::invariants::{dso_index, edge_weight, trace_square_edge_formula};
use dso_core::{dso_matrix, DenseSym};
use proptest::prelude::*;

/// A labeled graph with `0 <= n <= max_n` vertices and uniform random edges.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n as u32 {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, edges).expect("generated edges are valid")
        })
    })
}

proptest! {
    // Orders above 62 switch graph6 to its long header form; cover both.
    #[test]
    fn graph6_roundtrip_is_exact(g in arb_graph(80)) {
        let record = write_graph6(&g);
        let back = parse_graph6(record.as_bytes()).expect("own records parse");
        prop_assert_eq!(back.n_vertices(), g.n_vertices());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(write_graph6(&back), record);
    }

    #[test]
    fn edge_list_roundtrip_is_exact(g in arb_graph(40)) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).expect("own listings parse");
        prop_assert_eq!(back.n_vertices(), g.n_vertices());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(30)) {
        let n = g.n_vertices();
        let complement = g.complement();
        let double = complement.complement();
        prop_assert_eq!(double.edges(), g.edges());
        prop_assert_eq!(
            g.n_edges() + complement.n_edges(),
            n * n.saturating_sub(1) / 2
        );
        for v in 0..n {
            prop_assert_eq!(
                (g.degree(v) + complement.degree(v)) as usize,
                n - 1
            );
        }
    }

    // Zero diagonal forces a zero eigenvalue sum; the second moment equals
    // twice the sum of squared edge weights, computable from degrees alone.
    #[test]
    fn spectral_moments_match_degree_formulas(g in arb_graph(10)) {
        let s = dso_spectrum(&g, DEFAULT_TOL).expect("solver converges");
        prop_assert!(s.sum().abs() <= 1e-10);
        prop_assert!(
            (s.sum_of_squares() - trace_square_edge_formula(&g)).abs() <= 1e-9
        );
        let weight_sum: f64 = g
            .edges()
            .iter()
            .map(|&(u, v)| edge_weight(g.degree(u as usize), g.degree(v as usize)))
            .sum();
        prop_assert!((dso_index(&g) - weight_sum).abs() <= 1e-12);
    }

    // Cauchy interlacing: deleting one vertex nests the new eigenvalues
    // strictly inside consecutive pairs of the old ones.
    #[test]
    fn vertex_deletion_interlaces_eigenvalues(g in arb_graph(8), pick in any::<prop::sample::Index>()) {
        let n = g.n_vertices();
        prop_assume!(n >= 2);
        let full = dso_matrix(&g);
        let mut outer = sym_eigenvalues(&full, DEFAULT_TOL).expect("solver converges");
        outer.sort_by(|a, b| b.total_cmp(a));
        let removed = pick.index(n);
        let sub: DenseSym = full.principal_submatrix(removed);
        let mut inner = sym_eigenvalues(&sub, DEFAULT_TOL).expect("solver converges");
        inner.sort_by(|a, b| b.total_cmp(a));
        for (i, mu) in inner.iter().enumerate() {
            prop_assert!(outer[i] >= mu - 1e-9, "outer[{i}] < inner[{i}]");
            prop_assert!(*mu >= outer[i + 1] - 1e-9, "inner[{i}] < outer[{}]", i + 1);
        }
    }
}
