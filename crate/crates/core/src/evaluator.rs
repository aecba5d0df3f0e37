//! Fixed-point evaluation of the zipper fractal interpolant.
//!
//! The interpolant `φ` solves `φ(L_j(t)) = λ_j φ(t) + M_j(t)`. On a uniform
//! grid over `[t_1, t_n]` this is the fixed point of the operator
//! `(Tg)(s) = λ_j ĝ(L_j^{-1}(s)) + M_j(L_j^{-1}(s))` for `s ∈ I_j`, where `ĝ`
//! is the piecewise-linear read of the grid values. `T` is a contraction with
//! factor `|λ|∞`, so plain iteration converges geometrically.

use serde::Serialize;

use crate::data::SampledFunction;
use crate::error::{Error, Result};
use crate::ifs::ZipperIfs;

/// Grid and stopping parameters of the fixed-point iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalSettings {
    pub grid_size: usize,
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for EvalSettings {
    fn default() -> Self {
        Self {
            grid_size: 1025,
            tol: 1e-12,
            max_iters: 200,
        }
    }
}

impl EvalSettings {
    pub fn validate(&self) -> Result<()> {
        if self.grid_size < 33 {
            return Err(Error::InvalidSettings(format!(
                "grid_size must be at least 33, got {}",
                self.grid_size
            )));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::InvalidSettings(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidSettings(
                "max_iters must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Outcome of [`fixed_point`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub converged: bool,
    pub iterations: usize,
    /// Sup-norm change of the last iteration.
    pub final_change: f64,
    /// Ratio of the last two sup-norm changes, when both are nonzero.
    pub contraction_estimate: Option<f64>,
    /// All scaling factors vanish, so one application of the operator is exact.
    pub classical_path: bool,
    #[serde(skip)]
    pub result: SampledFunction,
}

impl EvalReport {
    /// Turns an unconverged report into [`Error::NotConverged`].
    pub fn into_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged {
                iterations: self.iterations,
                last_change: self.final_change,
            })
        }
    }
}

/// Per-grid-point data of the operator that does not depend on the iterate.
struct Plan {
    lambda: Vec<f64>,
    preimage: Vec<f64>,
    offset: Vec<f64>,
}

impl Plan {
    fn new(ifs: &ZipperIfs, grid: &SampledFunction) -> Self {
        let ds = ifs.dataset();
        let n = grid.len();
        let mut plan = Plan {
            lambda: Vec::with_capacity(n),
            preimage: Vec::with_capacity(n),
            offset: Vec::with_capacity(n),
        };
        for s in grid.grid() {
            let j = ds.interval_of(s);
            let t = ifs.preimage(j, s);
            plan.lambda.push(ifs.maps()[j].lambda);
            plan.preimage.push(t);
            plan.offset.push(ifs.m(j, t));
        }
        plan
    }

    fn apply(&self, g: &SampledFunction) -> SampledFunction {
        let values = (0..self.offset.len())
            .map(|i| {
                let lambda = self.lambda[i];
                if lambda == 0.0 {
                    self.offset[i]
                } else {
                    lambda * g.interpolate(self.preimage[i]) + self.offset[i]
                }
            })
            .collect();
        SampledFunction::new(g.start(), g.end(), values).expect("grid already validated")
    }
}

fn check_grid(ifs: &ZipperIfs, g: &SampledFunction) -> Result<()> {
    let ds = ifs.dataset();
    if g.start() != ds.start() || g.end() != ds.end() {
        return Err(Error::GridMismatch(format!(
            "grid covers [{}, {}] but the data spans [{}, {}]",
            g.start(),
            g.end(),
            ds.start(),
            ds.end()
        )));
    }
    Ok(())
}

/// One application of the operator to `g`.
pub fn apply_operator(ifs: &ZipperIfs, g: &SampledFunction) -> Result<SampledFunction> {
    check_grid(ifs, g)?;
    Ok(Plan::new(ifs, g).apply(g))
}

/// Piecewise-linear interpolant of the data sampled on an `n`-point grid.
pub fn initial_iterate(ifs: &ZipperIfs, n: usize) -> Result<SampledFunction> {
    let ds = ifs.dataset();
    let (t, f) = (ds.knots(), ds.values());
    SampledFunction::from_fn(ds.start(), ds.end(), n, |s| {
        let j = ds.interval_of(s);
        let w = (s - t[j]) / (t[j + 1] - t[j]);
        f[j] + w * (f[j + 1] - f[j])
    })
}

/// Sup-norm distance between two functions on the same grid.
pub fn sup_distance(a: &SampledFunction, b: &SampledFunction) -> Result<f64> {
    if !a.same_grid(b) {
        return Err(Error::GridMismatch(format!(
            "{} points on [{}, {}] vs {} points on [{}, {}]",
            a.len(),
            a.start(),
            a.end(),
            b.len(),
            b.start(),
            b.end()
        )));
    }
    Ok(a.values()
        .iter()
        .zip(b.values())
        .fold(0.0, |m, (x, y)| m.max((x - y).abs())))
}

/// Iterates the operator from the piecewise-linear data interpolant until the
/// sup-norm change drops to `settings.tol`.
///
/// Hitting `max_iters` is not an error here; the report comes back with
/// `converged == false` (see [`EvalReport::into_converged`]).
pub fn fixed_point(ifs: &ZipperIfs, settings: &EvalSettings) -> Result<EvalReport> {
    settings.validate()?;
    let mut g = initial_iterate(ifs, settings.grid_size)?;
    let plan = Plan::new(ifs, &g);

    let mut previous: Option<f64> = None;
    let mut contraction_estimate = None;
    let mut change = f64::INFINITY;
    let mut iterations = 0;
    while iterations < settings.max_iters {
        let next = plan.apply(&g);
        change = sup_distance(&next, &g)?;
        iterations += 1;
        if let Some(prev) = previous.filter(|p| *p > 0.0) {
            if change > 0.0 {
                contraction_estimate = Some(change / prev);
            }
        }
        previous = Some(change);
        g = next;
        if change <= settings.tol {
            break;
        }
    }
    Ok(EvalReport {
        converged: change <= settings.tol,
        iterations,
        final_change: change,
        contraction_estimate,
        classical_path: ifs.is_classical(),
        result: g,
    })
}

/// Maximum number of functional-equation unfoldings in [`eval_at`].
const MAX_UNFOLD: usize = 64;

/// Value of the interpolant at `t`.
///
/// The functional equation is unfolded, `φ(s) = λ_j φ(L_j^{-1}(s)) + M_j(...)`,
/// until the accumulated scaling product is negligible or the preimage lands on
/// a domain end, whose value is read off the converged grid. Anything left
/// after [`MAX_UNFOLD`] steps falls back to a piecewise-linear grid read.
pub fn eval_at(ifs: &ZipperIfs, result: &SampledFunction, t: f64) -> Result<f64> {
    check_grid(ifs, result)?;
    let ds = ifs.dataset();
    if !ds.contains(t) {
        return Err(Error::OutOfDomain {
            t,
            start: ds.start(),
            end: ds.end(),
        });
    }
    let last = result.len() - 1;
    let mut scale = 1.0;
    let mut acc = 0.0;
    let mut x = t;
    for _ in 0..MAX_UNFOLD {
        if x == ds.start() {
            return Ok(acc + scale * result.values()[0]);
        }
        if x == ds.end() {
            return Ok(acc + scale * result.values()[last]);
        }
        let j = ds.interval_of(x);
        let y = ifs.preimage(j, x);
        acc += scale * ifs.m(j, y);
        scale *= ifs.maps()[j].lambda;
        x = y;
        if scale.abs() < 1e-17 {
            return Ok(acc);
        }
    }
    Ok(acc + scale * result.interpolate(x))
}

/// Closed-form evaluation `M_j(L_j^{-1}(t))`, valid only when every scaling
/// factor is zero.
pub fn classical_eval(ifs: &ZipperIfs, t: f64) -> Result<f64> {
    if let Some((j, m)) = ifs.maps().iter().enumerate().find(|(_, m)| m.lambda != 0.0) {
        return Err(Error::NotClassical {
            interval: j + 1,
            lambda: m.lambda,
        });
    }
    let ds = ifs.dataset();
    if !ds.contains(t) {
        return Err(Error::OutOfDomain {
            t,
            start: ds.start(),
            end: ds.end(),
        });
    }
    let j = ds.interval_of(t);
    Ok(ifs.m(j, ifs.preimage(j, t)))
}

/// A built IFS together with its converged grid evaluation.
#[derive(Debug, Clone)]
pub struct Interpolant {
    ifs: ZipperIfs,
    report: EvalReport,
}

impl Interpolant {
    /// Runs [`fixed_point`] and fails with [`Error::NotConverged`] if the
    /// iteration budget runs out.
    pub fn new(ifs: ZipperIfs, settings: &EvalSettings) -> Result<Self> {
        let report = fixed_point(&ifs, settings)?.into_converged()?;
        Ok(Self { ifs, report })
    }

    pub fn ifs(&self) -> &ZipperIfs {
        &self.ifs
    }

    pub fn report(&self) -> &EvalReport {
        &self.report
    }

    pub fn samples(&self) -> &SampledFunction {
        &self.report.result
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        eval_at(&self.ifs, &self.report.result, t)
    }

    /// Evaluates on a uniform probe grid with `n` points.
    pub fn sample(&self, n: usize) -> Result<SampledFunction> {
        let ds = self.ifs.dataset();
        let probe = SampledFunction::new(ds.start(), ds.end(), vec![0.0; n])?;
        let values = probe
            .grid()
            .map(|t| self.eval(t))
            .collect::<Result<Vec<_>>>()?;
        SampledFunction::new(ds.start(), ds.end(), values)
    }

    /// `max_i |φ(t_i) - f_i|`.
    pub fn knot_residual(&self) -> Result<f64> {
        let ds = self.ifs.dataset();
        ds.knots()
            .iter()
            .zip(ds.values())
            .try_fold(0.0f64, |m, (&t, &f)| Ok(m.max((self.eval(t)? - f).abs())))
    }
}
