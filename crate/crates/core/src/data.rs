//! Core domain types: interpolation data, zipper signature, scaling and shape
//! parameters, affine maps, knot derivatives and sampled functions.
//!
//! Every type is immutable once built and every constructor validates its
//! input, returning an [`Error`] instead of panicking on bad data.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Interpolation data `(t_i, f_i)` with strictly increasing knots.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dataset {
    knots: Vec<f64>,
    values: Vec<f64>,
}

/// Checks and wraps raw interpolation data.
pub fn validate_dataset(knots: &[f64], values: &[f64]) -> Result<Dataset> {
    Dataset::new(knots.to_vec(), values.to_vec())
}

fn check_finite(what: &'static str, xs: &[f64]) -> Result<()> {
    match xs.iter().position(|x| !x.is_finite()) {
        Some(i) => Err(Error::NonFinite { what, index: i + 1 }),
        None => Ok(()),
    }
}

impl Dataset {
    pub fn new(knots: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if knots.len() != values.len() {
            return Err(Error::LengthMismatch {
                what: "values",
                expected: knots.len(),
                found: values.len(),
            });
        }
        if knots.len() < 3 {
            return Err(Error::TooFewPoints(knots.len()));
        }
        check_finite("knots", &knots)?;
        check_finite("values", &values)?;
        if let Some(i) = knots.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingKnots { index: i + 2 });
        }
        Ok(Self { knots, values })
    }

    /// Number of data points `n`.
    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of subintervals `n - 1`.
    pub fn intervals(&self) -> usize {
        self.knots.len() - 1
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn start(&self) -> f64 {
        self.knots[0]
    }

    pub fn end(&self) -> f64 {
        self.knots[self.knots.len() - 1]
    }

    /// Domain length `l = t_n - t_1`.
    pub fn span(&self) -> f64 {
        self.end() - self.start()
    }

    /// Local mesh size `h_j` of the 0-based interval `j`.
    pub fn step(&self, j: usize) -> f64 {
        self.knots[j + 1] - self.knots[j]
    }

    /// Global mesh size `h = max h_j`.
    pub fn max_step(&self) -> f64 {
        (0..self.intervals())
            .map(|j| self.step(j))
            .fold(0.0, f64::max)
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.start() && t <= self.end()
    }

    /// 0-based interval holding `t`, using half-open intervals `[t_j, t_{j+1})`
    /// with the last one closed. Points outside the domain clamp to the
    /// nearest end interval.
    pub fn interval_of(&self, t: f64) -> usize {
        let k = self.knots.partition_point(|&x| x <= t);
        k.saturating_sub(1).min(self.intervals() - 1)
    }
}

/// Zipper signature `ε ∈ {0,1}^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Signature(Vec<u8>);

impl Signature {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(i) = bits.iter().position(|&b| b > 1) {
            return Err(Error::InvalidSignatureBit {
                index: i + 1,
                value: bits[i],
            });
        }
        Ok(Self(bits))
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn ones(len: usize) -> Self {
        Self(vec![1; len])
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether interval `j` (0-based) is traversed in reverse.
    pub fn reversed(&self, j: usize) -> bool {
        self.0[j] == 1
    }

    /// `‖ε‖∞`, 1 as soon as any interval is reversed.
    pub fn sup_norm(&self) -> f64 {
        if self.0.contains(&1) {
            1.0
        } else {
            0.0
        }
    }
}

/// Scaling factors and shape parameters, one entry per subinterval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZipperConfig {
    pub signature: Signature,
    pub lambdas: Vec<f64>,
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
    pub gammas: Vec<f64>,
    pub deltas: Vec<f64>,
}

impl<'de> Deserialize<'de> for Signature {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let bits = Vec::<u8>::deserialize(de)?;
        Signature::new(bits).map_err(serde::de::Error::custom)
    }
}

impl ZipperConfig {
    /// Builds a config with the same `α` and `δ` on every interval.
    pub fn with_uniform_ends(
        signature: Signature,
        lambdas: Vec<f64>,
        alpha: f64,
        betas: Vec<f64>,
        gammas: Vec<f64>,
        delta: f64,
    ) -> Self {
        let m = lambdas.len();
        Self {
            signature,
            lambdas,
            alphas: vec![alpha; m],
            betas,
            gammas,
            deltas: vec![delta; m],
        }
    }

    /// `|λ|∞`.
    pub fn lambda_sup(&self) -> f64 {
        self.lambdas.iter().fold(0.0, |m, l| m.max(l.abs()))
    }
}

/// A [`ZipperConfig`] that passed [`validate_config`] against a dataset.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct CheckedConfig(ZipperConfig);

impl CheckedConfig {
    pub fn config(&self) -> &ZipperConfig {
        &self.0
    }

    pub fn into_inner(self) -> ZipperConfig {
        self.0
    }
}

impl std::ops::Deref for CheckedConfig {
    type Target = ZipperConfig;

    fn deref(&self) -> &ZipperConfig {
        &self.0
    }
}

/// Validates lengths, contractivity `|λ_j| < |a_j| = h_j / l` and the sign
/// conditions on the denominator parameters.
pub fn validate_config(ds: &Dataset, cfg: ZipperConfig) -> Result<CheckedConfig> {
    let m = ds.intervals();
    let lists: [(&'static str, usize); 6] = [
        ("signature", cfg.signature.len()),
        ("lambdas", cfg.lambdas.len()),
        ("alphas", cfg.alphas.len()),
        ("betas", cfg.betas.len()),
        ("gammas", cfg.gammas.len()),
        ("deltas", cfg.deltas.len()),
    ];
    for (what, found) in lists {
        if found != m {
            return Err(Error::LengthMismatch {
                what,
                expected: m,
                found,
            });
        }
    }
    check_finite("lambdas", &cfg.lambdas)?;
    check_finite("alphas", &cfg.alphas)?;
    check_finite("betas", &cfg.betas)?;
    check_finite("gammas", &cfg.gammas)?;
    check_finite("deltas", &cfg.deltas)?;

    let l = ds.span();
    for j in 0..m {
        let bound = ds.step(j) / l;
        let lambda = cfg.lambdas[j];
        if lambda.abs() >= bound {
            return Err(Error::NonContractiveScaling {
                interval: j + 1,
                lambda,
                bound,
            });
        }
        let checks = [
            ("alpha", cfg.alphas[j], cfg.alphas[j] > 0.0),
            ("beta", cfg.betas[j], cfg.betas[j] >= 0.0),
            ("gamma", cfg.gammas[j], cfg.gammas[j] >= 0.0),
            ("delta", cfg.deltas[j], cfg.deltas[j] > 0.0),
        ];
        if let Some(&(name, value, _)) = checks.iter().find(|c| !c.2) {
            return Err(Error::NonPositiveDenominatorParam {
                interval: j + 1,
                name,
                value,
            });
        }
    }
    Ok(CheckedConfig(cfg))
}

/// Affine map `L(t) = a t + b` sending `[t_1, t_n]` onto one subinterval,
/// reversing orientation (`a < 0`) when the signature bit is set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AffineMap {
    pub a: f64,
    pub b: f64,
}

impl AffineMap {
    pub fn apply(&self, t: f64) -> f64 {
        self.a * t + self.b
    }

    pub fn invert(&self, s: f64) -> f64 {
        (s - self.b) / self.a
    }
}

/// First derivatives `d_i` at the knots.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivativeSet(Vec<f64>);

impl DerivativeSet {
    pub(crate) fn from_vec_unchecked(d: Vec<f64>) -> Self {
        Self(d)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for DerivativeSet {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Values of a function on `N` uniformly spaced points covering
/// `[start, end]`, both endpoints included.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledFunction {
    start: f64,
    end: f64,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(start: f64, end: f64, values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::GridMismatch(format!(
                "a grid needs at least 2 points, got {}",
                values.len()
            )));
        }
        if !(start < end) {
            return Err(Error::GridMismatch(format!(
                "empty grid domain [{start}, {end}]"
            )));
        }
        Ok(Self { start, end, values })
    }

    /// Samples `f` on the uniform grid with `n` points.
    pub fn from_fn(start: f64, end: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let probe = Self::new(start, end, vec![0.0; n.max(2)])?;
        let values = (0..n).map(|i| f(probe.abscissa(i))).collect();
        Self::new(start, end, values)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        self.end
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn spacing(&self) -> f64 {
        (self.end - self.start) / (self.values.len() - 1) as f64
    }

    /// Grid abscissa `i`; the last one is exactly `end`.
    pub fn abscissa(&self, i: usize) -> f64 {
        let last = self.values.len() - 1;
        if i == last {
            self.end
        } else {
            self.start + (self.end - self.start) * (i as f64 / last as f64)
        }
    }

    pub fn grid(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.values.len()).map(|i| self.abscissa(i))
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid().zip(self.values.iter().copied())
    }

    /// Piecewise-linear read of the samples, clamped to the grid domain.
    pub fn interpolate(&self, x: f64) -> f64 {
        let last = self.values.len() - 1;
        let u = ((x - self.start) / (self.end - self.start) * last as f64).clamp(0.0, last as f64);
        let k = (u.floor() as usize).min(last - 1);
        let w = u - k as f64;
        if w == 0.0 {
            return self.values[k];
        }
        self.values[k] * (1.0 - w) + self.values[k + 1] * w
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Whether `other` lives on the same grid.
    pub fn same_grid(&self, other: &SampledFunction) -> bool {
        self.values.len() == other.values.len()
            && self.start == other.start
            && self.end == other.end
    }
}
