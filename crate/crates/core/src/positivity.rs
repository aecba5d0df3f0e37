//! Positivity analysis.
//!
//! For strictly positive data the interpolant stays positive when, on every
//! interval, `0 ≤ λ_j` stays below
//! `min(|a_j|, f_{j+ε_j}/f_1, f_{j+1-ε_j}/f_n)` and the shape parameters make
//! all four numerator coefficients positive. The operator then maps
//! nonnegative functions to positive ones, so its fixed point is positive.
//!
//! [`certify`] checks these sufficient conditions; [`empirical_check`] samples
//! the converged interpolant on a dense probe grid.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::data::{Dataset, DerivativeSet, Signature};
use crate::error::{Error, Result};
use crate::evaluator::{EvalSettings, Interpolant};
use crate::ifs::{affine_map, anchors, trig_basis, ZipperIfs};

/// Default number of probe points for [`empirical_check`].
pub const DEFAULT_PROBE_SIZE: usize = 10_001;

/// Parameters closer than this to a bound are flagged as fragile.
pub const FRAGILE_MARGIN: f64 = 1e-9;

/// Strict parameter bounds guaranteeing positivity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PositivityBounds {
    pub lambda_max: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_min: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_min: Option<Vec<f64>>,
}

/// Lower bounds on `β_j` and `γ_j` for given `λ`, `α` and `δ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShapeBounds {
    pub beta_min: Vec<f64>,
    pub gamma_min: Vec<f64>,
}

fn check_positive_data(ds: &Dataset) -> Result<()> {
    match ds.values().iter().position(|&f| !(f > 0.0)) {
        Some(i) => Err(Error::NonPositiveData {
            index: i + 1,
            value: ds.values()[i],
        }),
        None => Ok(()),
    }
}

fn check_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::LengthMismatch {
            what,
            expected,
            found,
        });
    }
    Ok(())
}

/// Strict upper bounds `min(|a_j|, f_{j+ε_j}/f_1, f_{j+1-ε_j}/f_n)` on `λ_j`.
pub fn lambda_bounds(ds: &Dataset, sig: &Signature) -> Result<Vec<f64>> {
    check_positive_data(ds)?;
    check_len("signature", ds.intervals(), sig.len())?;
    let f = ds.values();
    let (f1, fn_) = (f[0], f[ds.len() - 1]);
    Ok((0..ds.intervals())
        .map(|j| {
            let (first, last) = if sig.reversed(j) {
                (j + 1, j)
            } else {
                (j, j + 1)
            };
            let slope = ds.step(j) / ds.span();
            slope.min(f[first] / f1).min(f[last] / fn_)
        })
        .collect())
}

/// Lower bounds `β_j > max(0, -2lα_j d*_start / (π f*_start))` and
/// `γ_j > max(0, 2lδ_j d*_end / (π f*_end))`.
pub fn shape_bounds(
    ds: &Dataset,
    d: &DerivativeSet,
    sig: &Signature,
    lambdas: &[f64],
    alphas: &[f64],
    deltas: &[f64],
) -> Result<ShapeBounds> {
    let m = ds.intervals();
    check_len("derivatives", ds.len(), d.len())?;
    check_len("lambdas", m, lambdas.len())?;
    check_len("alphas", m, alphas.len())?;
    check_len("deltas", m, deltas.len())?;
    let bounds = lambda_bounds(ds, sig)?;
    let k = 2.0 * ds.span() / PI;

    let mut out = ShapeBounds {
        beta_min: Vec::with_capacity(m),
        gamma_min: Vec::with_capacity(m),
    };
    for j in 0..m {
        let lambda = lambdas[j];
        if !(lambda >= 0.0 && lambda < bounds[j]) {
            return Err(Error::LambdaOutOfBounds {
                interval: j + 1,
                lambda,
                bound: bounds[j],
            });
        }
        let a = affine_map(ds, j, sig.reversed(j))?.a;
        let an = anchors(ds, d, sig, lambda, j, a);
        out.beta_min
            .push((-k * alphas[j] * an.d_start / an.f_start).max(0.0));
        out.gamma_min
            .push((k * deltas[j] * an.d_end / an.f_end).max(0.0));
    }
    Ok(out)
}

/// Per-interval outcome of [`certify`]. `interval` is 1-based.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntervalCertificate {
    pub interval: usize,
    pub lambda: f64,
    pub lambda_bound: f64,
    pub lambda_ok: bool,
    /// `[U, V, W, X]`.
    pub numerator: [f64; 4],
    pub coefficients_positive: bool,
    /// Minimum of the numerator over a 10⁴-point angle grid. Diagnostic only:
    /// it can be positive even when some coefficient is not.
    pub numerator_min: f64,
    /// Parameters within [`FRAGILE_MARGIN`] of a bound.
    pub fragile: bool,
}

/// Coefficient-sign positivity certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub certified: bool,
    pub intervals: Vec<IntervalCertificate>,
}

/// Certifies positivity when, on every interval, `0 ≤ λ_j < lambda_bound_j`
/// and `U, V, W, X > 0`. Data that is not strictly positive is never
/// certified.
pub fn certify(ifs: &ZipperIfs) -> Certificate {
    let ds = ifs.dataset();
    let bounds = lambda_bounds(ds, ifs.signature()).ok();
    let intervals: Vec<IntervalCertificate> = ifs
        .maps()
        .iter()
        .enumerate()
        .map(|(j, map)| {
            let lambda_bound = bounds.as_ref().map_or(f64::NAN, |b| b[j]);
            let lambda_ok = map.lambda >= 0.0 && map.lambda < lambda_bound;
            let numerator = map.coeffs.numerator_coeffs();
            let coefficients_positive = numerator.iter().all(|&c| c > 0.0);
            let numerator_min = (0..=10_000)
                .map(|k| {
                    let basis = trig_basis(k as f64 * FRAC_PI_2 / 10_000.0).expect("in range");
                    map.coeffs.numerator(&basis)
                })
                .fold(f64::INFINITY, f64::min);
            let fragile = (lambda_bound - map.lambda).abs() <= FRAGILE_MARGIN
                || numerator.iter().any(|c| c.abs() <= FRAGILE_MARGIN);
            IntervalCertificate {
                interval: j + 1,
                lambda: map.lambda,
                lambda_bound,
                lambda_ok,
                numerator,
                coefficients_positive,
                numerator_min,
                fragile,
            }
        })
        .collect();
    Certificate {
        certified: bounds.is_some()
            && intervals
                .iter()
                .all(|c| c.lambda_ok && c.coefficients_positive),
        intervals,
    }
}

/// Result of sampling the interpolant on a probe grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmpiricalCheck {
    pub probe_size: usize,
    pub empirical_min: f64,
    pub argmin: f64,
    pub negative_samples: usize,
    /// 1-based intervals holding at least one negative sample.
    pub violating_intervals: Vec<usize>,
}

/// Samples the converged interpolant on `probe_size` uniform points and
/// attributes negative samples to knot intervals.
pub fn empirical_check(
    ifs: &ZipperIfs,
    settings: &EvalSettings,
    probe_size: usize,
) -> Result<EmpiricalCheck> {
    let interp = Interpolant::new(ifs.clone(), settings)?;
    empirical_check_interpolant(&interp, probe_size)
}

/// [`empirical_check`] on an already converged interpolant.
pub fn empirical_check_interpolant(
    interp: &Interpolant,
    probe_size: usize,
) -> Result<EmpiricalCheck> {
    let ds = interp.ifs().dataset();
    let probe = interp.sample(probe_size)?;
    let mut check = EmpiricalCheck {
        probe_size,
        empirical_min: f64::INFINITY,
        argmin: ds.start(),
        negative_samples: 0,
        violating_intervals: Vec::new(),
    };
    let mut flagged = vec![false; ds.intervals()];
    for (t, v) in probe.points() {
        if v < check.empirical_min {
            check.empirical_min = v;
            check.argmin = t;
        }
        if v < 0.0 {
            check.negative_samples += 1;
            flagged[ds.interval_of(t)] = true;
        }
    }
    check.violating_intervals = (0..flagged.len())
        .filter(|&j| flagged[j])
        .map(|j| j + 1)
        .collect();
    Ok(check)
}

/// Certificate and empirical check combined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PositivityReport {
    pub certified: bool,
    pub empirical_min: f64,
    pub violating_intervals: Vec<usize>,
    pub certificate: Certificate,
    pub empirical: EmpiricalCheck,
}

impl PositivityReport {
    /// Certified and positive on every probe point.
    pub fn positive(&self) -> bool {
        self.certified && self.empirical_min > 0.0
    }
}

pub fn positivity_report(
    ifs: &ZipperIfs,
    settings: &EvalSettings,
    probe_size: usize,
) -> Result<PositivityReport> {
    let certificate = certify(ifs);
    let empirical = empirical_check(ifs, settings, probe_size)?;
    Ok(PositivityReport {
        certified: certificate.certified,
        empirical_min: empirical.empirical_min,
        violating_intervals: empirical.violating_intervals.clone(),
        certificate,
        empirical,
    })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::data::{validate_config, validate_dataset, ZipperConfig};
    use crate::derivatives::{amm_derivatives, set_derivatives};
    use crate::ifs::build_ifs;

    fn reference_data() -> Dataset {
        validate_dataset(
            &[1.0, 3.0, 8.0, 10.0, 11.0, 12.0, 16.0],
            &[14.0, 2.0, 0.8, 0.65, 0.75, 0.7, 0.69],
        )
        .unwrap()
    }

    const ROW_B_LAMBDAS: [f64; 6] = [0.1323, 0.0201, 0.0261, 0.0454, 0.0426, 0.049];

    #[test]
    fn reference_data_lambda_bounds_reversed() {
        let b = lambda_bounds(&reference_data(), &Signature::ones(6)).unwrap();
        let expected = [
            2.0 / 15.0,
            0.8 / 14.0,
            0.65 / 14.0,
            0.75 / 14.0,
            0.7 / 14.0,
            0.69 / 14.0,
        ];
        for (got, want) in b.iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn reference_data_lambda_bounds_forward() {
        // Direct evaluation with the unreversed index roles.
        let b = lambda_bounds(&reference_data(), &Signature::zeros(6)).unwrap();
        let expected = [
            0.13333333333333333333,
            0.14285714285714285714,
            0.057142857142857142857,
            0.046428571428571428571,
            0.053571428571428571429,
            0.05,
        ];
        for (got, want) in b.iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn constant_data_bounds_are_slopes() {
        let ds = validate_dataset(&[0.0, 1.0, 3.0, 3.5], &[4.0; 4]).unwrap();
        let b = lambda_bounds(&ds, &Signature::new(vec![1, 0, 1]).unwrap()).unwrap();
        assert_eq!(b, vec![1.0 / 3.5, 2.0 / 3.5, 0.5 / 3.5]);
    }

    #[test]
    fn huge_first_value_dominates() {
        let ds = validate_dataset(&[0.0, 1.0, 2.0, 3.0], &[1e6, 1.0, 1.0, 1.0]).unwrap();
        let b = lambda_bounds(&ds, &Signature::zeros(3)).unwrap();
        assert_eq!(b[0], 1.0 / 3.0);
        assert!((b[1] - 1e-6).abs() < 1e-20 && (b[2] - 1e-6).abs() < 1e-20);
    }

    #[test]
    fn non_positive_data_rejected() {
        let ds = validate_dataset(&[0.0, 1.0, 2.0], &[1.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            lambda_bounds(&ds, &Signature::zeros(2)),
            Err(Error::NonPositiveData { index: 2, .. })
        ));
    }

    #[test]
    fn fig1b_shape_bounds() {
        // 40-digit evaluation of the closed forms with exact AMM derivatives.
        let ds = reference_data();
        let sb = shape_bounds(
            &ds,
            &amm_derivatives(&ds),
            &Signature::ones(6),
            &ROW_B_LAMBDAS,
            &[0.5; 6],
            &[1.0; 6],
        )
        .unwrap();
        assert_eq!(sb.beta_min, vec![0.0; 6]);
        let gamma = [
            0.69668387524493701863,
            6.9750222924274987385,
            0.18755869961408213775,
            0.0,
            0.0,
            0.12987496316823588073,
        ];
        for (got, want) in sb.gamma_min.iter().zip(gamma) {
            assert!((got - want).abs() <= 1e-13 * (1.0 + want));
        }
    }

    #[test]
    fn shape_bounds_reject_out_of_range_lambda() {
        let ds = reference_data();
        let mut lambdas = ROW_B_LAMBDAS;
        lambdas[1] = 0.2419;
        assert!(matches!(
            shape_bounds(
                &ds,
                &amm_derivatives(&ds),
                &Signature::ones(6),
                &lambdas,
                &[0.5; 6],
                &[1.0; 6]
            ),
            Err(Error::LambdaOutOfBounds { interval: 2, .. })
        ));
        lambdas[1] = -0.01;
        assert!(shape_bounds(
            &ds,
            &amm_derivatives(&ds),
            &Signature::ones(6),
            &lambdas,
            &[0.5; 6],
            &[1.0; 6]
        )
        .is_err());
    }

    #[test]
    fn sign_of_slopes_zeroes_bounds() {
        // Increasing data with forward maps: d*_start ≥ 0 and, with λ = 0,
        // d*_end > 0, so only γ gets a positive bound.
        let ds = validate_dataset(&[0.0, 1.0, 2.0, 3.0], &[1.0, 2.0, 3.0, 4.0]).unwrap();
        let d = set_derivatives(&ds, &[1.0; 4]).unwrap();
        let sb = shape_bounds(
            &ds,
            &d,
            &Signature::zeros(3),
            &[0.0; 3],
            &[1.0; 3],
            &[1.0; 3],
        )
        .unwrap();
        assert_eq!(sb.beta_min, vec![0.0; 3]);
        assert!(sb.gamma_min.iter().all(|&g| g > 0.0));
        // Decreasing data flips the roles.
        let ds = validate_dataset(&[0.0, 1.0, 2.0, 3.0], &[4.0, 3.0, 2.0, 1.0]).unwrap();
        let d = set_derivatives(&ds, &[-1.0; 4]).unwrap();
        let sb = shape_bounds(
            &ds,
            &d,
            &Signature::zeros(3),
            &[0.0; 3],
            &[1.0; 3],
            &[1.0; 3],
        )
        .unwrap();
        assert_eq!(sb.gamma_min, vec![0.0; 3]);
        assert!(sb.beta_min.iter().all(|&b| b > 0.0));
    }

    #[test]
    fn bounds_grow_with_alpha_and_delta() {
        let ds = reference_data();
        let d = amm_derivatives(&ds);
        let sig = Signature::new(vec![0, 1, 0, 1, 0, 1]).unwrap();
        let lambdas = [0.01; 6];
        let lo = shape_bounds(&ds, &d, &sig, &lambdas, &[0.5; 6], &[0.5; 6]).unwrap();
        let hi = shape_bounds(&ds, &d, &sig, &lambdas, &[1.5; 6], &[1.5; 6]).unwrap();
        for j in 0..6 {
            assert!(hi.beta_min[j] >= lo.beta_min[j]);
            assert!(hi.gamma_min[j] >= lo.gamma_min[j]);
        }
    }

    #[test]
    fn classical_positive_config_is_certified() {
        let ds = reference_data();
        let d = amm_derivatives(&ds);
        let sig = Signature::zeros(6);
        let sb = shape_bounds(&ds, &d, &sig, &[0.0; 6], &[1.0; 6], &[1.0; 6]).unwrap();
        let cfg = validate_config(
            &ds,
            ZipperConfig {
                signature: sig,
                lambdas: vec![0.0; 6],
                alphas: vec![1.0; 6],
                betas: sb.beta_min.iter().map(|b| b * 1.01 + 0.1).collect(),
                gammas: sb.gamma_min.iter().map(|g| g * 1.01 + 0.1).collect(),
                deltas: vec![1.0; 6],
            },
        )
        .unwrap();
        let ifs = build_ifs(&ds, &d, &cfg).unwrap();
        let report = positivity_report(&ifs, &EvalSettings::default(), 2001).unwrap();
        assert!(report.certified && report.empirical_min > 0.0, "{report:?}");
    }

    #[test]
    fn constant_data_minimum_is_the_constant() {
        let ds = validate_dataset(&[0.0, 2.0, 3.0, 7.0], &[1.5; 4]).unwrap();
        let d = set_derivatives(&ds, &[0.0; 4]).unwrap();
        let cfg = validate_config(
            &ds,
            ZipperConfig::with_uniform_ends(
                Signature::new(vec![1, 1, 0]).unwrap(),
                vec![0.0; 3],
                1.0,
                vec![1.0; 3],
                vec![1.0; 3],
                1.0,
            ),
        )
        .unwrap();
        let ifs = build_ifs(&ds, &d, &cfg).unwrap();
        let report = positivity_report(&ifs, &EvalSettings::default(), 1001).unwrap();
        assert!(report.certified);
        assert!((report.empirical_min - 1.5).abs() <= 1.5e-9);
    }
}
