//! Acceptance gate: nine end-to-end criteria covering closed-form spectra,
//! the regular-graph scaling law, exact path polynomials, trace identities,
//! structural spectral facts, the bound registry with its equality classes,
//! the documented counterexample values, the near-integer energy scan, and
//! graph6 codec stability.
//!
//! Each criterion is one test; the harness line is its pass/fail verdict,
//! and a `criterion N: PASS` detail line is printed for `--nocapture` runs.

use dso_core::audit::{
    run_audit, run_corpus_audit, BoundCheckResult, CheckEvaluation, CheckOutcome,
    Expectation, DEFAULT_AUDIT_TOL,
};
use dso_core::charpoly::{char_poly_from_spectrum, path_char_poly};
use dso_core::eigen::{adjacency_spectrum, dso_spectrum, Spectrum, DEFAULT_TOL};
use dso_core::graph::{
    classify, generate_family, labeled_graphs, parse_graph6, write_graph6, Graph,
    GraphFamily,
};
use dso_core::invariants::trace_square_edge_formula;
use dso_core::search::scan;
use dso_core::spectra::{
    complete_bipartite_spectrum, complete_spectrum, cycle_spectrum,
    regular_scaled_spectrum, star_spectrum,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::{Duration, Instant};

// ============================================================================
// Helpers
// ============================================================================

fn family(f: GraphFamily) -> Graph {
    generate_family(f).expect("family parameters are valid")
}

fn solve(g: &Graph) -> Spectrum {
    dso_spectrum(g, DEFAULT_TOL).expect("solver converges at default tolerance")
}

/// Largest absolute difference between two equally long eigenvalue lists.
fn spectrum_gap(a: &Spectrum, b: &Spectrum) -> f64 {
    assert_eq!(a.eigenvalues().len(), b.eigenvalues().len(), "spectrum sizes differ");
    a.eigenvalues()
        .iter()
        .zip(b.eigenvalues())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Every labeled graph on 1..=n_max vertices, materialized per order.
fn corpus(n_max: usize) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| labeled_graphs(n).expect("order within enumeration bounds"))
        .collect()
}

fn evaluation<'a>(
    results: &'a [BoundCheckResult],
    check_id: &str,
) -> &'a CheckEvaluation {
    results
        .iter()
        .find(|r| r.check_id == check_id)
        .unwrap_or_else(|| panic!("{check_id} missing from registry"))
        .evaluation()
        .unwrap_or_else(|| panic!("{check_id} inapplicable"))
}

fn budget(start: Instant, limit: Duration, label: &str) -> f64 {
    let elapsed = start.elapsed();
    assert!(elapsed <= limit, "{label} exceeded its time budget: {elapsed:?} > {limit:?}");
    elapsed.as_secs_f64()
}

// ============================================================================
// Criterion 1: closed-form spectra match the solver
// ============================================================================

#[test]
fn criterion_1_closed_form_spectra_match_numeric() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut cases = 0usize;
    for n in 1..=12 {
        let g = family(GraphFamily::Complete { n });
        worst = worst.max(spectrum_gap(&complete_spectrum(n).expect("n >= 1"), &solve(&g)));
        cases += 1;
    }
    for n in 3..=12 {
        let g = family(GraphFamily::Cycle { n });
        worst = worst.max(spectrum_gap(&cycle_spectrum(n).expect("n >= 3"), &solve(&g)));
        cases += 1;
    }
    for n in 2..=12 {
        let g = family(GraphFamily::Star { n });
        worst = worst.max(spectrum_gap(&star_spectrum(n).expect("n >= 2"), &solve(&g)));
        cases += 1;
    }
    for p in 1..=6 {
        for q in p..=(12 - p) {
            let g = family(GraphFamily::CompleteBipartite { p, q });
            worst = worst.max(spectrum_gap(
                &complete_bipartite_spectrum(p, q).expect("p, q >= 1"),
                &solve(&g),
            ));
            cases += 1;
        }
    }
    assert!(worst <= 1e-9, "closed-form mismatch: worst gap {worst:e}");
    let secs = budget(start, Duration::from_secs(1), "criterion 1");
    println!("criterion 1: PASS — {cases} closed-form spectra within 1e-9 (worst {worst:.3e}, {secs:.2}s)");
}

// ============================================================================
// Criterion 2: regular graphs scale the adjacency spectrum
// ============================================================================

#[test]
fn criterion_2_regular_scaling_is_exhaustive_through_order_six() {
    let start = Instant::now();
    let regulars: Vec<Graph> = corpus(6)
        .into_iter()
        .filter(|g| classify(g).regular.is_some())
        .collect();
    assert!(regulars.len() > 100, "expected a substantial regular sub-corpus");
    let worst = regulars
        .par_iter()
        .map(|g| {
            let adjacency =
                adjacency_spectrum(g, DEFAULT_TOL).expect("adjacency solve converges");
            let scaled =
                regular_scaled_spectrum(g, &adjacency).expect("graph is regular");
            spectrum_gap(&scaled, &solve(g))
        })
        .reduce(|| 0.0, f64::max);
    assert!(worst <= 1e-9, "scaling law violated: worst gap {worst:e}");
    let secs = budget(start, Duration::from_secs(30), "criterion 2");
    println!(
        "criterion 2: PASS — {} regular graphs scale within 1e-9 (worst {worst:.3e}, {secs:.2}s)",
        regulars.len()
    );
}

// ============================================================================
// Criterion 3: exact path polynomials and Vieta agreement
// ============================================================================

#[test]
fn criterion_3_path_characteristic_polynomials_are_exact() {
    let start = Instant::now();
    let pinned: [(usize, &str); 4] = [
        (2, r#"{"coefficients":[{"num":-1,"den":2},{"num":0,"den":1},{"num":1,"den":1}]}"#),
        (
            3,
            r#"{"coefficients":[{"num":0,"den":1},{"num":-10,"den":9},{"num":0,"den":1},{"num":1,"den":1}]}"#,
        ),
        (
            4,
            r#"{"coefficients":[{"num":25,"den":81},{"num":0,"den":1},{"num":-29,"den":18},{"num":0,"den":1},{"num":1,"den":1}]}"#,
        ),
        (
            5,
            r#"{"coefficients":[{"num":0,"den":1},{"num":70,"den":81},{"num":0,"den":1},{"num":-19,"den":9},{"num":0,"den":1},{"num":1,"den":1}]}"#,
        ),
    ];
    for (n, expected) in pinned {
        assert_eq!(
            path_char_poly(n).expect("n >= 2").to_json(),
            expected,
            "exact coefficients changed for the {n}-vertex path"
        );
    }
    let mut worst = 0.0f64;
    for n in 2..=12 {
        let exact = path_char_poly(n).expect("n >= 2").coefficients_f64();
        let numeric = char_poly_from_spectrum(&solve(&family(GraphFamily::Path { n })))
            .coefficients_f64();
        assert_eq!(exact.len(), numeric.len());
        for (e, c) in exact.iter().zip(&numeric) {
            worst = worst.max((e - c).abs());
        }
    }
    assert!(worst <= 1e-8, "coefficient drift {worst:e} above 1e-8");
    let secs = budget(start, Duration::from_secs(1), "criterion 3");
    println!("criterion 3: PASS — exact path polynomials pinned; numeric coefficients within 1e-8 (worst {worst:.3e}, {secs:.2}s)");
}

// ============================================================================
// Criterion 4: trace identities across every order-6 graph
// ============================================================================

#[test]
fn criterion_4_trace_identities_hold_on_the_full_order_six_corpus() {
    let start = Instant::now();
    let graphs: Vec<Graph> = labeled_graphs(6).expect("order 6 enumerable").collect();
    assert_eq!(graphs.len(), 32_768);
    let (worst_sum, worst_sq) = graphs
        .par_iter()
        .map(|g| {
            let s = solve(g);
            let sum = s.sum().abs();
            let sq = (s.sum_of_squares() - trace_square_edge_formula(g)).abs();
            (sum, sq)
        })
        .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
    assert!(worst_sum <= 1e-10, "eigenvalue sum drift {worst_sum:e} above 1e-10");
    assert!(worst_sq <= 1e-9, "second moment drift {worst_sq:e} above 1e-9");
    let secs = budget(start, Duration::from_secs(60), "criterion 4");
    println!("criterion 4: PASS — 32768 graphs: |Σλ| worst {worst_sum:.3e}, second-moment worst {worst_sq:.3e} ({secs:.2}s)");
}

// ============================================================================
// Criterion 5: structural spectral facts with zero counterexamples
// ============================================================================

#[test]
fn criterion_5_structural_checks_have_no_counterexamples_through_order_six() {
    let start = Instant::now();
    let report = run_corpus_audit(corpus(6).into_iter(), DEFAULT_AUDIT_TOL)
        .expect("corpus audit converges");
    for id in ["MODULI", "TWO-DIST", "DIAM"] {
        let aggregate = report.find(id).expect("registered check");
        assert_eq!(
            aggregate.fails, 0,
            "{id} has counterexamples, worst: {:?}",
            aggregate.worst
        );
        assert!(aggregate.applicable > 0, "{id} never applied");
    }
    let secs = budget(start, Duration::from_secs(120), "criterion 5");
    println!(
        "criterion 5: PASS — MODULI/TWO-DIST/DIAM clean over {} graphs ({secs:.2}s)",
        report.graphs
    );
}

// ============================================================================
// Criterion 6: the bound registry holds, with exact equality classes
// ============================================================================

/// Checks whose equality class is asserted as an exact iff over every
/// applicable graph of order <= 6.
const TRUSTED_IFF: [&str; 13] = [
    "DSO-TR-A-LO",
    "DSO-TR-A-HI",
    "L1-LO",
    "L1-HI-CORRECTED",
    "L1-RHO-LO-CORRECTED",
    "L1-RHO-HI",
    "L1-M1-HI",
    "L1-M-HI",
    "E-TR-HI",
    "E-M12-HI",
    "E-KPQ-LO",
    "E-KPQ-HI",
    "E-SMALLM",
];

/// Checks whose equality class is an exact iff among connected graphs with
/// at least one edge; outside that corpus the bound also pinches on
/// degenerate inputs (no edges, or bipartite components plus isolated
/// vertices), so only the forward direction is asserted there.
const CONNECTED_IFF: [&str; 2] = ["E-TR-LO", "E-M12-LO"];

/// Checks where the declared class implies equality but equality can occur
/// outside it (forward direction only).
const FORWARD_ONLY: [&str; 5] = ["NG-LO", "CDSO", "E-L1-LO", "E-L1-HI", "E-ALPHA"];

#[test]
fn criterion_6_expected_bounds_hold_with_exact_equality_classes() {
    let start = Instant::now();
    let graphs = corpus(6);
    let total = graphs.len();
    let violations: Vec<String> = graphs
        .par_iter()
        .map(|g| {
            let mut bad = Vec::new();
            let results = run_audit(g, DEFAULT_AUDIT_TOL).expect("audit converges");
            let g6 = write_graph6(g);
            let class = classify(g);
            let core_corpus = class.connected && g.n_edges() > 0;
            for r in &results {
                let CheckOutcome::Evaluated(e) = &r.outcome else { continue };
                if r.expectation == Expectation::Holds && !e.holds {
                    bad.push(format!("{g6}: {} fails (slack {:e})", r.check_id, e.slack));
                }
                let exact_iff = TRUSTED_IFF.contains(&r.check_id)
                    || (CONNECTED_IFF.contains(&r.check_id) && core_corpus);
                if exact_iff && e.equality_observed != e.equality_expected {
                    bad.push(format!(
                        "{g6}: {} equality mismatch (expected {}, observed {})",
                        r.check_id, e.equality_expected, e.equality_observed
                    ));
                }
                let forward_only = FORWARD_ONLY.contains(&r.check_id)
                    || (CONNECTED_IFF.contains(&r.check_id) && !core_corpus);
                if forward_only && e.equality_expected && !e.equality_observed {
                    bad.push(format!(
                        "{g6}: {} misses equality on its declared class",
                        r.check_id
                    ));
                }
            }
            // Among connected graphs, the two one-sided energy bounds pinch
            // simultaneously exactly on complete graphs.  Disconnected
            // corpora add degenerate pinches (e.g. edgeless spectra), so the
            // joint claim is scoped to connected inputs.
            if class.connected {
                let lo = results.iter().find(|r| r.check_id == "E-L1-LO");
                let hi = results.iter().find(|r| r.check_id == "E-L1-HI");
                if let (Some(lo), Some(hi)) = (lo, hi) {
                    if let (CheckOutcome::Evaluated(lo), CheckOutcome::Evaluated(hi)) =
                        (&lo.outcome, &hi.outcome)
                    {
                        let pinched = lo.equality_observed && hi.equality_observed;
                        if pinched != class.complete {
                            bad.push(format!(
                                "{g6}: joint energy pinch does not match completeness"
                            ));
                        }
                    }
                }
            }
            bad
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    assert!(
        violations.is_empty(),
        "{} violations, first 10: {:#?}",
        violations.len(),
        &violations[..violations.len().min(10)]
    );
    let secs = budget(start, Duration::from_secs(300), "criterion 6");
    println!("criterion 6: PASS — registry holds with exact equality classes over {total} graphs ({secs:.2}s)");
}

// ============================================================================
// Criterion 7: documented counterexample values on the 4-clique
// ============================================================================

#[test]
fn criterion_7_documented_failures_reproduce_on_the_four_clique() {
    let start = Instant::now();
    let g = family(GraphFamily::Complete { n: 4 });
    let results = run_audit(&g, DEFAULT_AUDIT_TOL).expect("audit converges");
    let lambda1 = 2.121_320_343_559_642_4; // 3 / sqrt(2)
    let three_sqrt2 = 4.242_640_687_119_285; // 3 sqrt(2)
    let pinned = [
        ("DSO-TR-B-LO", 2.0 * three_sqrt2, three_sqrt2, false),
        ("L1-RHO-LO", three_sqrt2, lambda1, false),
        ("L1-M-LO", three_sqrt2, lambda1, false),
        ("L1-GA", lambda1, 0.0, false),
        ("L1-HI-STATED", lambda1, 2.598_076_211_353_316, true), // sqrt(27/4)
    ];
    for (id, lhs, rhs, holds) in pinned {
        let e = evaluation(&results, id);
        assert!((e.lhs - lhs).abs() <= 1e-6, "{id} lhs {} != {lhs}", e.lhs);
        assert!((e.rhs - rhs).abs() <= 1e-6, "{id} rhs {} != {rhs}", e.rhs);
        assert_eq!(e.holds, holds, "{id} verdict flipped");
    }
    // The as-stated spectral-radius upper bound is strict here even though
    // the graph satisfies the equality condition attached to it.
    let stated = evaluation(&results, "L1-HI-STATED");
    assert!(stated.equality_expected && !stated.equality_observed);
    assert!((stated.rhs - stated.lhs) > 0.4, "the stated bound should be visibly slack");
    let secs = budget(start, Duration::from_secs(5), "criterion 7");
    println!("criterion 7: PASS — documented counterexample values reproduced within 1e-6 ({secs:.2}s)");
}

// ============================================================================
// Criterion 8: near-integer energy scan with pinned near misses
// ============================================================================

#[test]
fn criterion_8_energy_scan_finds_no_integer_candidates_through_order_six() {
    let start = Instant::now();
    let report = scan(corpus(6).into_iter(), 1e-6, false, 32).expect("scan converges");
    // 33867 labeled graphs through order 6, minus one edgeless graph per order.
    assert_eq!(report.scanned, 33_861);
    assert_eq!(report.edgeless_skipped, 6);
    assert!(
        report.candidates.is_empty(),
        "unexpected near-integer candidates: {:?}",
        report.candidates
    );
    let top = report.near_integer_report(3);
    let golden = [
        ("EKNO", 2.085_009_583_933_761e-3),
        ("EKho", 2.085_009_583_933_761e-3),
        ("EMgg", 2.085_009_583_933_761e-3),
    ];
    assert_eq!(top.len(), 3);
    for (row, (g6, gap)) in top.iter().zip(golden) {
        assert_eq!(row.graph6, g6, "near-miss ranking changed");
        assert_eq!(row.n, 6);
        assert!(
            (row.gap - gap).abs() <= 1e-10,
            "{g6} gap drifted: {} vs {gap}",
            row.gap
        );
    }
    let secs = budget(start, Duration::from_secs(120), "criterion 8");
    println!("criterion 8: PASS — no candidates at 1e-6; top-3 near-miss gaps stable to 1e-10 ({secs:.2}s)");
}

// ============================================================================
// Criterion 9: graph6 codec stability
// ============================================================================

#[test]
fn criterion_9_graph6_roundtrips_exactly() {
    let start = Instant::now();
    // Exhaustive through order 5, plus the order-0 record.
    let empty = Graph::from_edge_list(0, []).expect("empty graph");
    assert_eq!(write_graph6(&empty), "?");
    let mut exhaustive = 1usize;
    for g in corpus(5) {
        let record = write_graph6(&g);
        let back = parse_graph6(record.as_bytes()).expect("own records parse");
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.n_vertices(), g.n_vertices());
        assert_eq!(write_graph6(&back), record);
        exhaustive += 1;
    }
    assert_eq!(exhaustive, 1 + 1 + 2 + 8 + 64 + 1024);

    // A seeded corpus of 1000 records, spanning the long-header encodings.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0DD5_0B0A_11AD_2026);
    let mut long_headers = 0usize;
    for _ in 0..1000 {
        let n: usize = rng.random_range(1..=80);
        if n > 62 {
            long_headers += 1;
        }
        let mut edges = Vec::new();
        let mut bits = 0u64;
        let mut left = 0u32;
        for i in 0..n as u32 {
            for j in (i + 1)..n as u32 {
                if left == 0 {
                    bits = rng.random();
                    left = 64;
                }
                if bits & 1 == 1 {
                    edges.push((i, j));
                }
                bits >>= 1;
                left -= 1;
            }
        }
        let g = Graph::from_edge_list(n, edges).expect("generated edges are valid");
        let record = write_graph6(&g);
        let back = parse_graph6(record.as_bytes()).expect("own records parse");
        assert_eq!(back.edges(), g.edges());
        assert_eq!(write_graph6(&back), record, "record not byte-stable");
    }
    assert!(long_headers > 100, "seeded corpus should exercise long headers");
    let secs = budget(start, Duration::from_secs(60), "criterion 9");
    println!("criterion 9: PASS — 1099 exhaustive + 1000 seeded records byte-stable ({long_headers} long-header, {secs:.2}s)");
}
