//! Near-integer energy scan.
//!
//! The working conjecture this module probes: no graph with at least one edge
//! has an integer diminished Sombor energy.  Edgeless graphs are excluded —
//! their energy is 0 — and because "no graph" might or might not be meant to
//! include disconnected ones, every report carries counts under both
//! interpretations (all scanned graphs vs. connected ones only).
//!
//! Two-tier evaluation keeps the scan honest about floating point: the corpus
//! is first measured at the solver's default tolerance, and every row that is
//! about to be *reported* — candidate or near miss — is re-solved at the
//! tighter [`REFINE_TOL`] so no reported gap is an artifact of solver error.
//! The scan yields candidates, never proofs: a gap below epsilon means "worth
//! a closer look", not "integer energy".
//!
//! Scanning is embarrassingly parallel over fixed-size batches, merged in
//! input order, so a given corpus and epsilon always produce byte-identical
//! reports.

use crate::eigen::{dso_spectrum, EigenError, DEFAULT_TOL};
use crate::graph::{
    canonical_key, classify, parse_graph6, write_graph6, EnumerateError, Graph,
};
use crate::numfmt::{fmt_g10, json_string};
use rayon::prelude::*;
use std::collections::HashSet;
use thiserror::Error;

/// Default candidate threshold on `|energy - nearest integer|`.
pub const DEFAULT_EPSILON: f64 = 1e-6;
/// Solver tolerance used when re-solving rows selected for reporting.
pub const REFINE_TOL: f64 = 1e-13;
/// Default number of near-miss rows retained by a scan.
pub const DEFAULT_TRACK: usize = 32;
/// Graphs evaluated per parallel batch.
const CHUNK: usize = 512;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("eigensolver failed on {graph6}: {source}")]
    Eigen { graph6: String, source: EigenError },
    #[error("canonical dedup is limited to small orders: {source}")]
    Dedup { source: EnumerateError },
}

/// One graph's distance to the nearest integer energy.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyCandidate {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    /// Energy at the tightest tolerance the row has been solved with.
    pub energy: f64,
    pub nearest_integer: u64,
    /// `|energy - nearest_integer|`, in `[0, 0.5]`.
    pub gap: f64,
    /// Whether the row has been re-solved at [`REFINE_TOL`].
    pub refined: bool,
    /// The gap measured during the coarse pass.
    pub coarse_gap: f64,
}

impl EnergyCandidate {
    fn measure(g: &Graph, tol: f64) -> Result<Self, SearchError> {
        let graph6 = write_graph6(g);
        let spectrum = dso_spectrum(g, tol)
            .map_err(|source| SearchError::Eigen { graph6: graph6.clone(), source })?;
        let energy = spectrum.energy();
        let nearest = energy.round();
        let gap = (energy - nearest).abs();
        Ok(Self {
            graph6,
            n: g.n_vertices(),
            m: g.n_edges(),
            connected: classify(g).connected,
            energy,
            nearest_integer: nearest as u64,
            gap,
            refined: false,
            coarse_gap: gap,
        })
    }

    /// Re-solves the row's graph at [`REFINE_TOL`]; `coarse_gap` keeps the
    /// first-pass value.
    fn refine(&mut self) -> Result<(), SearchError> {
        let g = parse_graph6(self.graph6.as_bytes()).expect("self-written graph6 round-trips");
        let refined = Self::measure(&g, REFINE_TOL)?;
        self.energy = refined.energy;
        self.nearest_integer = refined.nearest_integer;
        self.gap = refined.gap;
        self.refined = true;
        Ok(())
    }

    /// One JSON object: `{"graph6":..,"n":..,"m":..,"energy":..,"gap":..}`.
    pub fn to_json(&self) -> String {
        format!(
            "{{\"graph6\":{},\"n\":{},\"m\":{},\"energy\":{},\"gap\":{}}}",
            json_string(&self.graph6),
            self.n,
            self.m,
            fmt_g10(self.energy),
            fmt_g10(self.gap)
        )
    }
}

/// Ordering used for every reported list: gap, then order, then graph6.
fn row_order(a: &EnergyCandidate, b: &EnergyCandidate) -> std::cmp::Ordering {
    a.gap
        .total_cmp(&b.gap)
        .then_with(|| a.n.cmp(&b.n))
        .then_with(|| a.graph6.cmp(&b.graph6))
}

/// Outcome of one corpus scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    /// The candidate threshold the scan ran with.
    pub epsilon: f64,
    /// Graphs with at least one edge that were measured.
    pub scanned: u64,
    /// Of those, how many were connected (the stricter conjecture reading).
    pub connected_scanned: u64,
    /// Graphs dropped by the `m >= 1` filter.
    pub edgeless_skipped: u64,
    /// Graphs dropped as canonical duplicates (0 without dedup).
    pub duplicates_skipped: u64,
    /// Every scanned graph with refined gap below epsilon, sorted by
    /// (gap, n, graph6).  Empty while the conjecture survives.
    pub candidates: Vec<EnergyCandidate>,
    /// The smallest gaps seen across the whole corpus — conjecture-adjacent
    /// evidence even when no candidate clears epsilon.  Sorted like
    /// `candidates` and capped at the scan's `track` argument.
    pub nearest: Vec<EnergyCandidate>,
}

impl ScanReport {
    /// The `top_k` smallest refined gaps (fewer if the corpus or the scan's
    /// tracking window is smaller).
    pub fn near_integer_report(&self, top_k: usize) -> &[EnergyCandidate] {
        &self.nearest[..top_k.min(self.nearest.len())]
    }

    /// Candidate rows as JSON lines (one object per line).
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for row in &self.candidates {
            out.push_str(&row.to_json());
            out.push('\n');
        }
        out
    }

    /// One-object summary of the scan's counts under both conjecture
    /// readings.
    pub fn summary_json(&self) -> String {
        format!(
            "{{\"epsilon\":{},\"scanned\":{},\"connected_scanned\":{},\
             \"edgeless_skipped\":{},\"duplicates_skipped\":{},\"candidates\":{}}}",
            fmt_g10(self.epsilon),
            self.scanned,
            self.connected_scanned,
            self.edgeless_skipped,
            self.duplicates_skipped,
            self.candidates.len()
        )
    }
}

/// Scans a graph stream for near-integer energies.
///
/// Edgeless graphs are skipped; with `dedup` one representative per
/// isomorphism class is kept (small orders only).  `track` caps the retained
/// near-miss rows.  Memory stays bounded by the batch size plus the retained
/// rows, so arbitrarily long streams are fine.
pub fn scan(
    graphs: impl Iterator<Item = Graph>,
    epsilon: f64,
    dedup: bool,
    track: usize,
) -> Result<ScanReport, SearchError> {
    let mut report = ScanReport {
        epsilon,
        scanned: 0,
        connected_scanned: 0,
        edgeless_skipped: 0,
        duplicates_skipped: 0,
        candidates: Vec::new(),
        nearest: Vec::new(),
    };
    let mut seen = HashSet::new();
    let mut graphs = graphs.peekable();
    let mut batch = Vec::with_capacity(CHUNK);
    while graphs.peek().is_some() {
        batch.clear();
        // Filters run on the stream side so the dedup set is filled in input
        // order no matter how the batch is later scheduled.
        while batch.len() < CHUNK {
            let Some(g) = graphs.next() else { break };
            if g.n_edges() == 0 {
                report.edgeless_skipped += 1;
                continue;
            }
            if dedup {
                let key = canonical_key(&g).map_err(|source| SearchError::Dedup { source })?;
                if !seen.insert(key) {
                    report.duplicates_skipped += 1;
                    continue;
                }
            }
            batch.push(g);
        }
        let rows: Vec<Result<EnergyCandidate, SearchError>> =
            batch.par_iter().map(|g| EnergyCandidate::measure(g, DEFAULT_TOL)).collect();
        for row in rows {
            let row = row?;
            report.scanned += 1;
            report.connected_scanned += u64::from(row.connected);
            if row.gap < epsilon {
                report.candidates.push(row.clone());
            }
            report.nearest.push(row);
        }
        report.nearest.sort_by(row_order);
        report.nearest.truncate(track);
    }
    // Every row that leaves the scan is re-solved at the tight tolerance.
    for row in report.candidates.iter_mut().chain(report.nearest.iter_mut()) {
        row.refine()?;
    }
    report.candidates.retain(|row| row.gap < epsilon);
    report.candidates.sort_by(row_order);
    report.nearest.sort_by(row_order);
    Ok(report)
}

// ============================================================================
// Tests
// ============================================================================
