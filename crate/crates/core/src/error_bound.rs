//! A-priori bound on `‖φ_ε - ψ‖∞` for data sampled from a smooth `ψ`, plus
//! measured sup-norm gaps between sampled functions.
//!
//! The bound splits into three terms:
//!
//! * zipper term `‖ε‖∞ / (1 - |λ|∞) · (CΦ + 4hη/π)`, the cost of reversing
//!   intervals relative to the same interpolant with an all-zero signature;
//! * spline term `½‖ψ‴‖∞ h³ c`, the classical rational trigonometric spline
//!   error;
//! * fractal term `|λ|∞ / (1 - |λ|∞) · (E(h) + E*(h))` with
//!   `E(h) = ‖ψ‖∞ + 4h E₁/π` and `E*(h) = F + 4h E₂/π`.
//!
//! `c` comes from an external spline error estimate and is always supplied by
//! the caller.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::data::{CheckedConfig, Dataset, DerivativeSet, SampledFunction};
use crate::error::{Error, Result};
use crate::evaluator::sup_distance;
use crate::ifs::{rational_coeffs, trig_basis};

/// Number of angle samples used to maximise the denominators.
const XI_SAMPLES: usize = 10_000;

/// Caller-supplied constants of the bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorBoundInputs {
    /// `‖ψ‖∞`; when absent the data maximum `max |f_i|` stands in for it.
    pub psi_sup: Option<f64>,
    /// `‖ψ‴‖∞`; when absent the spline term (and the total) is not reported.
    pub psi3_sup: Option<f64>,
    /// Spline error constant `c`. The default of 1 is illustrative only.
    pub c: f64,
    /// Denominator ratio constant `C ∈ (0, 1]`; 1 is its supremum.
    pub denominator_ratio: f64,
}

impl Default for ErrorBoundInputs {
    fn default() -> Self {
        Self {
            psi_sup: None,
            psi3_sup: None,
            c: 1.0,
            denominator_ratio: 1.0,
        }
    }
}

impl ErrorBoundInputs {
    fn validate(&self) -> Result<()> {
        let bad = |name: &str, v: f64| {
            Error::InvalidSettings(format!("{name} must be finite and non-negative, got {v}"))
        };
        for (name, v) in [("psi_sup", self.psi_sup), ("psi3_sup", self.psi3_sup)] {
            if let Some(v) = v {
                if !(v >= 0.0) || !v.is_finite() {
                    return Err(bad(name, v));
                }
            }
        }
        if !(self.c > 0.0) || !self.c.is_finite() {
            return Err(bad("c", self.c));
        }
        if !(self.denominator_ratio > 0.0 && self.denominator_ratio <= 1.0) {
            return Err(Error::InvalidSettings(format!(
                "denominator ratio C must lie in (0, 1], got {}",
                self.denominator_ratio
            )));
        }
        Ok(())
    }
}

/// All pieces of the bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorBoundReport {
    pub zipper_term: f64,
    /// `None` when `‖ψ‴‖∞` was not supplied.
    pub spline_term: Option<f64>,
    pub fractal_term: f64,
    /// Sum of the three terms, `None` when the spline term is missing.
    pub total: Option<f64>,
    /// `Φ = max_{j<n} |f_j|`.
    pub phi: f64,
    /// `η = max_{j<n} |d_j|`.
    pub eta: f64,
    pub h: f64,
    pub l: f64,
    /// `ξ = max_j max_θ |q_j(θ)|`.
    pub xi: f64,
    pub e1: f64,
    pub e2: f64,
    pub f: f64,
    pub e_h: f64,
    pub e_star_h: f64,
    pub signature_sup: f64,
    pub lambda_sup: f64,
    /// `‖ψ‖∞` used in `E(h)`.
    pub psi_sup: f64,
    /// `‖ψ‖∞` was replaced by the data maximum.
    pub psi_sup_estimated: bool,
    /// The default `c = 1` was used.
    pub c_illustrative: bool,
}

/// Computes the three-term bound and its intermediates.
pub fn bound_report(
    ds: &Dataset,
    d: &DerivativeSet,
    cfg: &CheckedConfig,
    inputs: &ErrorBoundInputs,
) -> Result<ErrorBoundReport> {
    inputs.validate()?;
    let n = ds.len();
    let f = ds.values();
    let dv = d.values();
    if dv.len() != n {
        return Err(Error::LengthMismatch {
            what: "derivatives",
            expected: n,
            found: dv.len(),
        });
    }

    let max_abs = |xs: &[f64]| xs.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let phi = max_abs(&f[..n - 1]);
    let eta = max_abs(&dv[..n - 1]);
    let e1 = eta;
    let e2 = dv[0].abs().max(dv[n - 1].abs());
    let f_ends = f[0].abs().max(f[n - 1].abs());
    let h = ds.max_step();
    let l = ds.span();

    let mut xi = 0.0f64;
    for j in 0..ds.intervals() {
        let coeffs = rational_coeffs(ds, d, cfg, j)?;
        for k in 0..XI_SAMPLES {
            let theta = k as f64 * FRAC_PI_2 / (XI_SAMPLES - 1) as f64;
            xi = xi.max(coeffs.denominator(&trig_basis(theta)?).abs());
        }
    }

    let (psi_sup, psi_sup_estimated) = match inputs.psi_sup {
        Some(v) => (v, false),
        None => (max_abs(f), true),
    };
    let lambda_sup = cfg.lambda_sup();
    let signature_sup = cfg.signature.sup_norm();
    let damp = 1.0 / (1.0 - lambda_sup);

    let zipper_term = if signature_sup == 0.0 {
        0.0
    } else {
        signature_sup * damp * (inputs.denominator_ratio * phi + 4.0 * h * eta / PI)
    };
    let e_h = psi_sup + 4.0 * h * e1 / PI;
    let e_star_h = f_ends + 4.0 * h * e2 / PI;
    let fractal_term = if lambda_sup == 0.0 {
        0.0
    } else {
        lambda_sup * damp * (e_h + e_star_h)
    };
    let spline_term = inputs.psi3_sup.map(|p3| 0.5 * p3 * h.powi(3) * inputs.c);

    Ok(ErrorBoundReport {
        zipper_term,
        spline_term,
        fractal_term,
        total: spline_term.map(|s| zipper_term + s + fractal_term),
        phi,
        eta,
        h,
        l,
        xi,
        e1,
        e2,
        f: f_ends,
        e_h,
        e_star_h,
        signature_sup,
        lambda_sup,
        psi_sup,
        psi_sup_estimated,
        c_illustrative: inputs.c == 1.0,
    })
}

/// `max_i |a_i - b_i|` over a shared grid.
pub fn measured_gap(a: &SampledFunction, b: &SampledFunction) -> Result<f64> {
    sup_distance(a, b)
}
