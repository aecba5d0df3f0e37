//! Zipper IFS assembly.
//!
//! Interval `j` carries an affine map `L_j` from `[t_1, t_n]` onto `I_j` and a
//! vertical map `F_j(t, f) = λ_j f + M_j(t)`, where `M_j = p_j / q_j` is a
//! rational cubic trigonometric function of `θ = (π/2)(t - t_1)/(t_n - t_1)`.
//! The numerator coefficients are chosen so that the attractor interpolates
//! the data and matches the knot derivatives.
//!
//! Interval indices in this module are 0-based.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::data::{AffineMap, CheckedConfig, Dataset, DerivativeSet, Signature};
use crate::error::{Error, Result};

/// Rounding slack allowed on `θ` and on preimages `L_j^{-1}(s)`.
pub const DOMAIN_SLACK: f64 = 1e-12;

/// Affine map of interval `j`: `L(t_1) = t_{j+ε_j}`, `L(t_n) = t_{j+1-ε_j}`.
pub fn affine_map(ds: &Dataset, j: usize, reversed: bool) -> Result<AffineMap> {
    if j >= ds.intervals() {
        return Err(Error::IndexOutOfRange {
            interval: j + 1,
            count: ds.intervals(),
        });
    }
    let t = ds.knots();
    let (first, last) = if reversed {
        (t[j + 1], t[j])
    } else {
        (t[j], t[j + 1])
    };
    let (t1, tn) = (ds.start(), ds.end());
    let l = tn - t1;
    Ok(AffineMap {
        a: (last - first) / l,
        b: (tn * first - t1 * last) / l,
    })
}

/// The four trigonometric blending functions at one angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigBasis {
    pub b0: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

impl TrigBasis {
    fn at(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        let (ms, mc) = (1.0 - s, 1.0 - c);
        Self {
            b0: ms * ms * ms,
            b1: s * ms * ms,
            b2: c * mc * mc,
            b3: mc * mc * mc,
        }
    }

    /// Derivatives of the four functions with respect to `θ`.
    fn derivative_at(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        let (ms, mc) = (1.0 - s, 1.0 - c);
        Self {
            b0: -3.0 * c * ms * ms,
            b1: c * ms * ms - 2.0 * s * c * ms,
            b2: -s * mc * mc + 2.0 * c * s * mc,
            b3: 3.0 * s * mc * mc,
        }
    }

    fn dot(&self, w: [f64; 4]) -> f64 {
        self.b0 * w[0] + self.b1 * w[1] + self.b2 * w[2] + self.b3 * w[3]
    }
}

/// Evaluates the blending functions, accepting `θ` up to [`DOMAIN_SLACK`]
/// outside `[0, π/2]`.
pub fn trig_basis(theta: f64) -> Result<TrigBasis> {
    if !(-DOMAIN_SLACK..=FRAC_PI_2 + DOMAIN_SLACK).contains(&theta) {
        return Err(Error::ThetaOutOfRange(theta));
    }
    Ok(TrigBasis::at(theta.clamp(0.0, FRAC_PI_2)))
}

/// Angle parameter of `t ∈ [t_1, t_n]`.
pub fn theta_of(ds: &Dataset, t: f64) -> f64 {
    FRAC_PI_2 * (t - ds.start()) / ds.span()
}

/// Shifted end values and slopes of one interval:
/// `f*_start = f_{j+ε} - λ f_1`, `f*_end = f_{j+1-ε} - λ f_n`,
/// `d*_start = a d_{j+ε} - λ d_1`, `d*_end = a d_{j+1-ε} - λ d_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Anchors {
    pub f_start: f64,
    pub f_end: f64,
    pub d_start: f64,
    pub d_end: f64,
}

/// Computes [`Anchors`] for interval `j` with slope `a` of its affine map.
pub fn anchors(
    ds: &Dataset,
    d: &DerivativeSet,
    signature: &Signature,
    lambda: f64,
    j: usize,
    a: f64,
) -> Anchors {
    let f = ds.values();
    let n = ds.len();
    let (first, last) = if signature.reversed(j) {
        (j + 1, j)
    } else {
        (j, j + 1)
    };
    Anchors {
        f_start: f[first] - lambda * f[0],
        f_end: f[last] - lambda * f[n - 1],
        d_start: a * d[first] - lambda * d[0],
        d_end: a * d[last] - lambda * d[n - 1],
    }
}

/// Numerator `(U, V, W, X)` and denominator `(α, β, γ, δ)` coefficients of
/// one interval's `M_j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RationalCoeffs {
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub x: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl RationalCoeffs {
    pub fn numerator(&self, basis: &TrigBasis) -> f64 {
        basis.dot([self.u, self.v, self.w, self.x])
    }

    pub fn denominator(&self, basis: &TrigBasis) -> f64 {
        basis.dot([self.alpha, self.beta, self.gamma, self.delta])
    }

    /// `p(θ) / q(θ)`; `θ` is clamped to `[0, π/2]`.
    pub fn value_at_theta(&self, theta: f64) -> f64 {
        let basis = TrigBasis::at(theta.clamp(0.0, FRAC_PI_2));
        self.numerator(&basis) / self.denominator(&basis)
    }

    /// `d(p/q)/dθ` by the quotient rule.
    pub fn theta_derivative(&self, theta: f64) -> f64 {
        let theta = theta.clamp(0.0, FRAC_PI_2);
        let basis = TrigBasis::at(theta);
        let dbasis = TrigBasis::derivative_at(theta);
        let (p, q) = (self.numerator(&basis), self.denominator(&basis));
        let (dp, dq) = (self.numerator(&dbasis), self.denominator(&dbasis));
        (dp * q - p * dq) / (q * q)
    }

    pub fn numerator_coeffs(&self) -> [f64; 4] {
        [self.u, self.v, self.w, self.x]
    }
}

/// Coefficients of interval `j`.
///
/// `U` and `X` enforce the value conditions at `θ = 0` and `θ = π/2`; `V` and
/// `W` enforce the slope conditions there. `W` pairs `γ` with the value term
/// and `δ` with the slope term, which is the only pairing that satisfies the
/// slope condition at `θ = π/2`.
pub fn rational_coeffs(
    ds: &Dataset,
    d: &DerivativeSet,
    cfg: &CheckedConfig,
    j: usize,
) -> Result<RationalCoeffs> {
    check_derivatives(ds, d)?;
    let map = affine_map(ds, j, cfg.signature.reversed(j))?;
    let anchors = anchors(ds, d, &cfg.signature, cfg.lambdas[j], j, map.a);
    Ok(coeffs_from_anchors(cfg, j, ds.span(), &anchors))
}

fn coeffs_from_anchors(cfg: &CheckedConfig, j: usize, l: f64, an: &Anchors) -> RationalCoeffs {
    let (alpha, beta, gamma, delta) = (cfg.alphas[j], cfg.betas[j], cfg.gammas[j], cfg.deltas[j]);
    let k = 2.0 * l / std::f64::consts::PI;
    RationalCoeffs {
        u: alpha * an.f_start,
        v: beta * an.f_start + k * alpha * an.d_start,
        w: gamma * an.f_end - k * delta * an.d_end,
        x: delta * an.f_end,
        alpha,
        beta,
        gamma,
        delta,
    }
}

fn check_derivatives(ds: &Dataset, d: &DerivativeSet) -> Result<()> {
    if d.len() != ds.len() {
        return Err(Error::LengthMismatch {
            what: "derivatives",
            expected: ds.len(),
            found: d.len(),
        });
    }
    Ok(())
}

/// `M_j(t)` for `t ∈ [t_1, t_n]`.
pub fn eval_m(coeffs: &RationalCoeffs, ds: &Dataset, t: f64) -> f64 {
    coeffs.value_at_theta(theta_of(ds, t))
}

/// One interval of the zipper IFS.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IfsMap {
    pub affine: AffineMap,
    pub coeffs: RationalCoeffs,
    pub lambda: f64,
    pub anchors: Anchors,
}

/// The assembled zipper IFS together with the data it interpolates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZipperIfs {
    dataset: Dataset,
    derivatives: DerivativeSet,
    signature: Signature,
    maps: Vec<IfsMap>,
}

/// Builds the IFS for a validated configuration.
pub fn build_ifs(ds: &Dataset, d: &DerivativeSet, cfg: &CheckedConfig) -> Result<ZipperIfs> {
    check_derivatives(ds, d)?;
    let l = ds.span();
    let maps = (0..ds.intervals())
        .map(|j| {
            let affine = affine_map(ds, j, cfg.signature.reversed(j))?;
            let lambda = cfg.lambdas[j];
            let anchors = anchors(ds, d, &cfg.signature, lambda, j, affine.a);
            Ok(IfsMap {
                affine,
                coeffs: coeffs_from_anchors(cfg, j, l, &anchors),
                lambda,
                anchors,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ZipperIfs {
        dataset: ds.clone(),
        derivatives: d.clone(),
        signature: cfg.signature.clone(),
        maps,
    })
}

impl ZipperIfs {
    pub fn dataset(&self) -> &Dataset {
        &self.dataset
    }

    pub fn derivatives(&self) -> &DerivativeSet {
        &self.derivatives
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn maps(&self) -> &[IfsMap] {
        &self.maps
    }

    /// `|λ|∞`.
    pub fn lambda_sup(&self) -> f64 {
        self.maps.iter().fold(0.0, |m, k| m.max(k.lambda.abs()))
    }

    /// Whether every scaling factor is zero (no self-referential term).
    pub fn is_classical(&self) -> bool {
        self.maps.iter().all(|m| m.lambda == 0.0)
    }

    /// `M_j(t)`.
    pub fn m(&self, j: usize, t: f64) -> f64 {
        eval_m(&self.maps[j].coeffs, &self.dataset, t)
    }

    /// `M_j'(t)`, analytic.
    pub fn m_derivative(&self, j: usize, t: f64) -> f64 {
        let chain = FRAC_PI_2 / self.dataset.span();
        self.maps[j]
            .coeffs
            .theta_derivative(theta_of(&self.dataset, t))
            * chain
    }

    /// `F_j(t, f) = λ_j f + M_j(t)`.
    pub fn vertical(&self, j: usize, t: f64, f: f64) -> f64 {
        self.maps[j].lambda * f + self.m(j, t)
    }

    /// `F_j^{(1)}(t, d) = (λ_j d + M_j'(t)) / a_j`.
    pub fn vertical_derivative(&self, j: usize, t: f64, d: f64) -> f64 {
        let map = &self.maps[j];
        (map.lambda * d + self.m_derivative(j, t)) / map.affine.a
    }

    /// Preimage `L_j^{-1}(s)` clamped to the domain within [`DOMAIN_SLACK`].
    pub fn preimage(&self, j: usize, s: f64) -> f64 {
        let t = self.maps[j].affine.invert(s);
        let (lo, hi) = (self.dataset.start(), self.dataset.end());
        debug_assert!(
            t >= lo - DOMAIN_SLACK * self.dataset.span().max(1.0)
                && t <= hi + DOMAIN_SLACK * self.dataset.span().max(1.0),
            "preimage {t} escaped [{lo}, {hi}]"
        );
        t.clamp(lo, hi)
    }
}
