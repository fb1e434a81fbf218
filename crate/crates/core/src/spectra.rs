//! Closed-form diminished Sombor spectra for the reference families.
//!
//! In a regular graph all edges share one weight, so the matrix is just the
//! adjacency matrix scaled by `sqrt(2)/2`; that single fact yields the
//! complete-graph and cycle spectra.  Complete bipartite graphs (stars
//! included) have rank-two matrices with one symmetric pair of nonzero
//! eigenvalues.  Every function returns a [`Spectrum`] sorted and clustered
//! exactly like the numeric solver's output, so closed form and solved form
//! compare elementwise.

use crate::eigen::Spectrum;
use crate::graph::Graph;
use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use thiserror::Error;

/// Parameter or shape errors for the closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{family} spectrum requires {requirement}, got {given}")]
    Parameter { family: &'static str, requirement: &'static str, given: usize },
    #[error("regular scaling requires a regular graph, got degrees {min}..={max}")]
    NotRegular { min: u32, max: u32 },
}

fn parameter(family: &'static str, requirement: &'static str, given: usize) -> ClosedFormError {
    ClosedFormError::Parameter { family, requirement, given }
}

/// Complete graph: `(sqrt2/2)(n-1)` once and `-sqrt2/2` with multiplicity `n-1`.
pub fn complete_spectrum(n: usize) -> Result<Spectrum, ClosedFormError> {
    if n < 1 {
        return Err(parameter("complete", "n >= 1", n));
    }
    let mut values = vec![-FRAC_1_SQRT_2; n];
    values[0] = FRAC_1_SQRT_2 * (n as f64 - 1.0);
    Ok(Spectrum::from_eigenvalues(values))
}

/// Cycle: `sqrt2 * cos(2*pi*j/n)` for `j = 0..n`.
pub fn cycle_spectrum(n: usize) -> Result<Spectrum, ClosedFormError> {
    if n < 3 {
        return Err(parameter("cycle", "n >= 3", n));
    }
    let values = (0..n)
        .map(|j| SQRT_2 * (2.0 * PI * j as f64 / n as f64).cos())
        .collect();
    Ok(Spectrum::from_eigenvalues(values))
}

/// Complete bipartite graph: `±sqrt(pq) * sqrt(p²+q²) / (p+q)` and `n-2` zeros.
pub fn complete_bipartite_spectrum(p: usize, q: usize) -> Result<Spectrum, ClosedFormError> {
    if p < 1 || q < 1 {
        return Err(parameter("complete bipartite", "p, q >= 1", p.min(q)));
    }
    let (pf, qf) = (p as f64, q as f64);
    let r = (pf * qf).sqrt() * (pf * pf + qf * qf).sqrt() / (pf + qf);
    let mut values = vec![0.0; p + q];
    values[0] = r;
    values[p + q - 1] = -r;
    Ok(Spectrum::from_eigenvalues(values))
}

/// Star: `±sqrt(n-1) * sqrt(n² - 2n + 2) / n` and `n-2` zeros.
pub fn star_spectrum(n: usize) -> Result<Spectrum, ClosedFormError> {
    if n < 2 {
        return Err(parameter("star", "n >= 2", n));
    }
    let nf = n as f64;
    let r = (nf - 1.0).sqrt() * (nf * nf - 2.0 * nf + 2.0).sqrt() / nf;
    let mut values = vec![0.0; n];
    values[0] = r;
    values[n - 1] = -r;
    Ok(Spectrum::from_eigenvalues(values))
}

/// Regular-graph rule: the DSO spectrum is the adjacency spectrum scaled by
/// `sqrt(2)/2`.  Rejects non-regular graphs, whose edge weights vary.
pub fn regular_scaled_spectrum(g: &Graph, adjacency: &Spectrum) -> Result<Spectrum, ClosedFormError> {
    let degrees = g.degrees();
    let (min, max) = (
        degrees.iter().copied().min().unwrap_or(0),
        degrees.iter().copied().max().unwrap_or(0),
    );
    if min != max {
        return Err(ClosedFormError::NotRegular { min, max });
    }
    let values = adjacency.eigenvalues().iter().map(|&v| FRAC_1_SQRT_2 * v).collect();
    Ok(Spectrum::from_eigenvalues(values))
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{adjacency_spectrum, dso_spectrum, DEFAULT_TOL};
    use crate::graph::{generate_family, GraphFamily::*};
    use approx::assert_abs_diff_eq;

    fn assert_spectra_match(closed: &Spectrum, solved: &Spectrum, tol: f64) {
        assert_eq!(closed.eigenvalues().len(), solved.eigenvalues().len());
        for (c, s) in closed.eigenvalues().iter().zip(solved.eigenvalues()) {
            assert_abs_diff_eq!(c, s, epsilon = tol);
        }
    }

    #[test]
    fn complete_graph_closed_form_matches_the_solver() {
        for n in 1..=8 {
            let g = generate_family(Complete { n }).unwrap();
            let closed = complete_spectrum(n).unwrap();
            let solved = dso_spectrum(&g, DEFAULT_TOL).unwrap();
            assert_spectra_match(&closed, &solved, 1e-10);
            assert_eq!(closed.distinct_count(), if n == 1 { 1 } else { 2 });
        }
    }

    #[test]
    fn cycle_closed_form_matches_the_solver() {
        for n in 3..=9 {
            let g = generate_family(Cycle { n }).unwrap();
            let closed = cycle_spectrum(n).unwrap();
            let solved = dso_spectrum(&g, DEFAULT_TOL).unwrap();
            assert_spectra_match(&closed, &solved, 1e-10);
        }
        assert_eq!(cycle_spectrum(6).unwrap().distinct_count(), 4);
    }

    #[test]
    fn complete_bipartite_closed_form_pinned_value() {
        // K_{2,3}: nonzero pair ±sqrt(78)/5.
        let s = complete_bipartite_spectrum(2, 3).unwrap();
        assert_abs_diff_eq!(s.eigenvalues()[0], 78.0f64.sqrt() / 5.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eigenvalues()[0], 1.766_352_2, epsilon = 1e-7);
        assert_abs_diff_eq!(s.eigenvalues()[4], -1.766_352_2, epsilon = 1e-7);
        assert_eq!(&s.eigenvalues()[1..4], &[0.0, 0.0, 0.0]);

        let g = generate_family(CompleteBipartite { p: 2, q: 3 }).unwrap();
        assert_spectra_match(&s, &dso_spectrum(&g, DEFAULT_TOL).unwrap(), 1e-10);
    }

    #[test]
    fn star_closed_form_agrees_with_one_sided_bipartite() {
        for n in 2..=9 {
            let star = star_spectrum(n).unwrap();
            let kpq = complete_bipartite_spectrum(1, n - 1).unwrap();
            assert_spectra_match(&star, &kpq, 1e-12);
            let g = generate_family(Star { n }).unwrap();
            assert_spectra_match(&star, &dso_spectrum(&g, DEFAULT_TOL).unwrap(), 1e-10);
        }
    }

    #[test]
    fn regular_scaling_reproduces_the_solver_on_cycles() {
        let g = generate_family(Cycle { n: 5 }).unwrap();
        let adjacency = adjacency_spectrum(&g, DEFAULT_TOL).unwrap();
        let scaled = regular_scaled_spectrum(&g, &adjacency).unwrap();
        assert_spectra_match(&scaled, &dso_spectrum(&g, DEFAULT_TOL).unwrap(), 1e-10);
    }

    #[test]
    fn regular_scaling_rejects_irregular_graphs() {
        let g = generate_family(Path { n: 4 }).unwrap();
        let adjacency = adjacency_spectrum(&g, DEFAULT_TOL).unwrap();
        assert_eq!(
            regular_scaled_spectrum(&g, &adjacency),
            Err(ClosedFormError::NotRegular { min: 1, max: 2 })
        );
    }

    #[test]
    fn parameter_errors() {
        assert!(complete_spectrum(0).is_err());
        assert!(cycle_spectrum(2).is_err());
        assert!(star_spectrum(1).is_err());
        assert!(complete_bipartite_spectrum(0, 2).is_err());
    }

    #[test]
    fn trivial_complete_graph_has_a_zero_spectrum() {
        let s = complete_spectrum(1).unwrap();
        assert_eq!(s.eigenvalues(), &[0.0]);
    }
}
