//! Rational cubic trigonometric zipper fractal interpolation.
//!
//! Build a [`ZipperIfs`] from data, a zipper signature, scaling factors and
//! shape parameters; evaluate its attractor as the fixed point of the
//! associated operator; certify positivity; and bound the approximation error
//! against a smooth generating function.
//!
//! ```
//! use zipfrac::{build_ifs, amm_derivatives, validate_config, validate_dataset, Interpolant};
//! use zipfrac::{EvalSettings, Signature, ZipperConfig};
//!
//! let ds = validate_dataset(&[0.0, 1.0, 2.5, 4.0], &[1.0, 3.0, 2.0, 2.5])?;
//! let cfg = validate_config(
//!     &ds,
//!     ZipperConfig::with_uniform_ends(
//!         Signature::new(vec![0, 1, 0])?,
//!         vec![0.1, 0.2, 0.15],
//!         1.0,
//!         vec![2.0; 3],
//!         vec![2.0; 3],
//!         1.0,
//!     ),
//! )?;
//! let ifs = build_ifs(&ds, &amm_derivatives(&ds), &cfg)?;
//! let phi = Interpolant::new(ifs, &EvalSettings::default())?;
//! assert!((phi.eval(2.5)? - 2.0).abs() < 1e-8);
//! # Ok::<(), zipfrac::Error>(())
//! ```

// Negated float comparisons are deliberate: they reject NaN too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod data;
pub mod derivatives;
pub mod error;
pub mod error_bound;
pub mod evaluator;
pub mod fixtures;
pub mod ifs;
pub mod output;
pub mod positivity;

pub use data::{
    validate_config, validate_dataset, AffineMap, CheckedConfig, Dataset, DerivativeSet,
    SampledFunction, Signature, ZipperConfig,
};
pub use derivatives::{amm_derivatives, set_derivatives};
pub use error::{Error, Result};
pub use error_bound::{bound_report, measured_gap, ErrorBoundInputs, ErrorBoundReport};
pub use evaluator::{
    apply_operator, classical_eval, eval_at, fixed_point, EvalReport, EvalSettings, Interpolant,
};
pub use ifs::{
    affine_map, build_ifs, eval_m, rational_coeffs, trig_basis, RationalCoeffs, TrigBasis,
    ZipperIfs,
};
pub use positivity::{
    certify, empirical_check, lambda_bounds, positivity_report, shape_bounds, Certificate,
    EmpiricalCheck, PositivityBounds, PositivityReport, ShapeBounds,
};
