//! Characteristic polynomials of the diminished Sombor matrix.
//!
//! Two routes are provided.  The general route expands the monic product
//! `Π (λ - λ_i)` over a solved spectrum, inheriting the solver's floating
//! accuracy.  For paths the matrix is tridiagonal with off-diagonal weights
//! `(a, b, ..., b, a)` where `a² = 5/9` and `b² = 1/2`, so the polynomial has
//! exact rational coefficients; [`path_char_poly`] builds them via the
//! auxiliary recurrence
//!
//! ```text
//! Ω_1 = λ,  Ω_2 = λ² - 1/2,  Ω_k = λ·Ω_{k-1} - (1/2)·Ω_{k-2},
//! φ(P_n) = λ²·Ω_{n-2} - (10/9)·λ·Ω_{n-3} + (25/81)·Ω_{n-4}   (n >= 3),
//! ```
//!
//! with `Ω_0 = 1`, `Ω_{-1} = 0`, over arbitrary-precision rationals — the
//! denominators are powers of 2 and 3 that outgrow `u64` around forty
//! vertices.  `P_2` is the lone special case (`λ² - 1/2`): its single edge
//! joins two degree-1 endpoints, so the end weight is `sqrt2/2`, not `a`.
//!
//! Coefficients are stored ascending, `c_0..c_n` with `c_n = 1`.

use crate::eigen::Spectrum;
use crate::numfmt::fmt_g10;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// A monic characteristic polynomial, `φ(λ) = Σ c_k λ^k`, `c_n = 1`.
#[derive(Debug, Clone, PartialEq)]
pub enum CharPoly {
    /// Floating coefficients from the spectrum product.
    Float(Vec<f64>),
    /// Exact rational coefficients from a structural recurrence.
    Rational(Vec<BigRational>),
}

/// Errors for the exact path construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharPolyError {
    #[error("path characteristic polynomial requires n >= 2, got {n}")]
    PathOrder { n: usize },
}

impl CharPoly {
    /// Polynomial degree (the number of vertices).
    pub fn degree(&self) -> usize {
        match self {
            CharPoly::Float(c) => c.len() - 1,
            CharPoly::Rational(c) => c.len() - 1,
        }
    }

    /// Coefficients `c_0..c_n` as floats, exact ones converted.
    pub fn coefficients_f64(&self) -> Vec<f64> {
        match self {
            CharPoly::Float(c) => c.clone(),
            CharPoly::Rational(c) => c.iter().map(rational_to_f64).collect(),
        }
    }

    /// JSON rendering: `{"coefficients":[...]}` with rationals as
    /// `{"num":...,"den":...}` objects and floats as plain numbers.
    pub fn to_json(&self) -> String {
        let body = match self {
            CharPoly::Float(c) => {
                c.iter().map(|&v| fmt_g10(v)).collect::<Vec<_>>().join(",")
            }
            CharPoly::Rational(c) => c
                .iter()
                .map(|r| format!("{{\"num\":{},\"den\":{}}}", r.numer(), r.denom()))
                .collect::<Vec<_>>()
                .join(","),
        };
        format!("{{\"coefficients\":[{body}]}}")
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    // Good to a relative 1e-15 for the magnitudes arising here; used only
    // for cross-checks and display.
    let approx = |x: &BigInt| -> f64 {
        x.to_string().parse().expect("decimal digits parse as f64")
    };
    approx(r.numer()) / approx(r.denom())
}

/// Monic expansion of `Π (λ - λ_i)` over the solved eigenvalues.
pub fn char_poly_from_spectrum(s: &Spectrum) -> CharPoly {
    let mut coeffs = vec![1.0];
    for &root in s.eigenvalues() {
        let mut next = vec![0.0; coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= root * c;
        }
        coeffs = next;
    }
    CharPoly::Float(coeffs)
}

// --- exact rational polynomial helpers (ascending coefficient vectors) ---

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `λ * p`.
fn shift(p: &[BigRational]) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.push(BigRational::zero());
    out.extend_from_slice(p);
    out
}

/// `p - c * q`.
fn sub_scaled(p: &[BigRational], c: &BigRational, q: &[BigRational]) -> Vec<BigRational> {
    let len = p.len().max(q.len());
    let mut out = vec![BigRational::zero(); len];
    for (k, slot) in out.iter_mut().enumerate() {
        let a = p.get(k).cloned().unwrap_or_else(BigRational::zero);
        let b = q.get(k).cloned().unwrap_or_else(BigRational::zero);
        *slot = a - c * b;
    }
    out
}

/// Exact characteristic polynomial of the path on `n >= 2` vertices.
pub fn path_char_poly(n: usize) -> Result<CharPoly, CharPolyError> {
    if n < 2 {
        return Err(CharPolyError::PathOrder { n });
    }
    if n == 2 {
        return Ok(CharPoly::Rational(vec![ratio(-1, 2), BigRational::zero(), BigRational::one()]));
    }
    // Ω_{-1} = 0, Ω_0 = 1, Ω_k = λ·Ω_{k-1} - (1/2)·Ω_{k-2}; indices -1..=n-2
    // stored with an offset of one.
    let half = ratio(1, 2);
    let mut omega: Vec<Vec<BigRational>> = vec![vec![], vec![BigRational::one()]];
    for k in 2..=n - 1 {
        let prev = shift(&omega[k - 1]);
        omega.push(sub_scaled(&prev, &half, &omega[k - 2]));
    }
    let omega = |k: isize| -> &[BigRational] { &omega[(k + 1) as usize] };
    let n = n as isize;
    let head = shift(&shift(omega(n - 2)));
    let mid = shift(omega(n - 3));
    let phi = sub_scaled(&sub_scaled(&head, &ratio(10, 9), &mid), &ratio(-25, 81), omega(n - 4));
    Ok(CharPoly::Rational(phi))
}

// ============================================================================
// Tests
// ============================================================================
