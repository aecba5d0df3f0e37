//! Knot derivative estimation.
//!
//! The default estimator is the arithmetic mean method: each interior knot
//! gets the step-weighted mean of its two adjacent chord slopes, and the two
//! end knots use a three-point extrapolation of the first and last chords.

use crate::data::{Dataset, DerivativeSet};
use crate::error::{Error, Result};

/// Chord slopes `Δ_i = (f_{i+1} - f_i) / h_i`.
pub fn chord_slopes(ds: &Dataset) -> Vec<f64> {
    let f = ds.values();
    (0..ds.intervals())
        .map(|i| (f[i + 1] - f[i]) / ds.step(i))
        .collect()
}

/// Arithmetic mean method derivative estimates.
pub fn amm_derivatives(ds: &Dataset) -> DerivativeSet {
    let n = ds.len();
    let h: Vec<f64> = (0..n - 1).map(|i| ds.step(i)).collect();
    let slope = chord_slopes(ds);

    let mut d = Vec::with_capacity(n);
    d.push(slope[0] + (slope[0] - slope[1]) * h[0] / (h[0] + h[1]));
    for i in 1..n - 1 {
        d.push((h[i] * slope[i - 1] + h[i - 1] * slope[i]) / (h[i - 1] + h[i]));
    }
    let (a, b) = (slope[n - 2], slope[n - 3]);
    d.push(a + (a - b) * h[n - 2] / (h[n - 3] + h[n - 2]));
    DerivativeSet::from_vec_unchecked(d)
}

/// Wraps user-supplied knot derivatives, e.g. the exact derivatives of a
/// known generating function.
pub fn set_derivatives(ds: &Dataset, d: &[f64]) -> Result<DerivativeSet> {
    if d.len() != ds.len() {
        return Err(Error::LengthMismatch {
            what: "derivatives",
            expected: ds.len(),
            found: d.len(),
        });
    }
    if let Some(i) = d.iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFinite {
            what: "derivatives",
            index: i + 1,
        });
    }
    Ok(DerivativeSet::from_vec_unchecked(d.to_vec()))
}
