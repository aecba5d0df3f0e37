//! JSON run configuration.
//!
//! ```json
//! {
//!   "data": { "knots": [1, 3, 8], "values": [14, 2, 0.8] },
//!   "derivatives": null,
//!   "signature": [1, 1],
//!   "lambdas": [0.1, 0.02],
//!   "alphas": 0.5,
//!   "betas": [0.5, 3.0],
//!   "gammas": [0.5, 0.5],
//!   "deltas": 1.0,
//!   "eval": { "grid_size": 1025, "tol": 1e-12, "max_iters": 200 },
//!   "outputs": { "csv": "out.csv", "json": "out.report.json", "svg": "out.svg" }
//! }
//! ```
//!
//! Shape parameters accept a scalar, broadcast to every interval, or one value
//! per interval. Missing `derivatives` means arithmetic-mean estimates.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::data::{
    validate_config, CheckedConfig, Dataset, DerivativeSet, Signature, ZipperConfig,
};
use crate::derivatives::{amm_derivatives, set_derivatives};
use crate::error::{Error, Result};
use crate::evaluator::EvalSettings;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataSection {
    pub knots: Vec<f64>,
    pub values: Vec<f64>,
}

/// A scalar broadcast to every interval, or an explicit list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamSpec {
    Scalar(f64),
    List(Vec<f64>),
}

impl ParamSpec {
    pub fn expand(&self, len: usize) -> Vec<f64> {
        match self {
            ParamSpec::Scalar(v) => vec![*v; len],
            ParamSpec::List(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalSection {
    pub grid_size: Option<usize>,
    pub tol: Option<f64>,
    pub max_iters: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub data: DataSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivatives: Option<Vec<f64>>,
    pub signature: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<ParamSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphas: Option<ParamSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betas: Option<ParamSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gammas: Option<ParamSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deltas: Option<ParamSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval: Option<EvalSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outputs: Option<OutputSection>,
}

/// Command-line overrides of the `eval` section.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EvalOverrides {
    pub grid_size: Option<usize>,
    pub tol: Option<f64>,
    pub max_iters: Option<usize>,
}

fn config_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Config {
        path: path.into(),
        message: message.into(),
    }
}

/// Field path of the config entry a validation error points at.
fn field_of(err: &Error) -> Option<String> {
    Some(match err {
        Error::NonIncreasingKnots { index } => format!("data.knots[{}]", index - 1),
        Error::NonFinite { what, index } => match *what {
            "knots" | "values" => format!("data.{what}[{}]", index - 1),
            other => format!("{other}[{}]", index - 1),
        },
        Error::TooFewPoints(_) => "data.knots".into(),
        Error::LengthMismatch { what, .. } => match *what {
            "values" => "data.values".into(),
            other => other.to_string(),
        },
        Error::InvalidSignatureBit { index, .. } => format!("signature[{}]", index - 1),
        Error::NonContractiveScaling { interval, .. }
        | Error::LambdaOutOfBounds { interval, .. } => {
            format!("lambdas[{}]", interval - 1)
        }
        Error::NonPositiveDenominatorParam { interval, name, .. } => {
            format!("{name}s[{}]", interval - 1)
        }
        Error::NonPositiveData { index, .. } => format!("data.values[{}]", index - 1),
        Error::InvalidSettings(_) => "eval".into(),
        _ => return None,
    })
}

/// Attaches the offending field path to a validation error.
pub fn locate(err: Error) -> Error {
    match field_of(&err) {
        Some(path) => config_error(path, err.to_string()),
        None => err,
    }
}

impl RunConfig {
    /// Parses JSON, reporting the failing field path and line/column.
    pub fn from_json(text: &str) -> Result<Self> {
        let mut de = serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let path = e.path().to_string();
            config_error(
                if path == "." { "<root>".into() } else { path },
                e.into_inner().to_string(),
            )
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Config {
                path: field,
                message,
            } => config_error(format!("{}: {field}", path.display()), message),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn dataset(&self) -> Result<Dataset> {
        Dataset::new(self.data.knots.clone(), self.data.values.clone()).map_err(locate)
    }

    pub fn signature(&self) -> Result<Signature> {
        Signature::new(self.signature.clone()).map_err(locate)
    }

    pub fn derivatives(&self, ds: &Dataset) -> Result<DerivativeSet> {
        match &self.derivatives {
            Some(d) => set_derivatives(ds, d).map_err(locate),
            None => Ok(amm_derivatives(ds)),
        }
    }

    fn param(&self, name: &'static str, spec: &Option<ParamSpec>, len: usize) -> Result<Vec<f64>> {
        spec.as_ref()
            .map(|s| s.expand(len))
            .ok_or_else(|| config_error(name, "missing field"))
    }

    pub fn lambdas(&self, len: usize) -> Result<Option<Vec<f64>>> {
        Ok(self.lambdas.as_ref().map(|s| s.expand(len)))
    }

    /// Full zipper configuration, validated against the dataset.
    pub fn zipper(&self, ds: &Dataset) -> Result<CheckedConfig> {
        let m = ds.intervals();
        let cfg = ZipperConfig {
            signature: self.signature()?,
            lambdas: self.param("lambdas", &self.lambdas, m)?,
            alphas: self.param("alphas", &self.alphas, m)?,
            betas: self.param("betas", &self.betas, m)?,
            gammas: self.param("gammas", &self.gammas, m)?,
            deltas: self.param("deltas", &self.deltas, m)?,
        };
        validate_config(ds, cfg).map_err(locate)
    }

    pub fn alphas(&self, len: usize) -> Result<Vec<f64>> {
        self.param("alphas", &self.alphas, len)
    }

    pub fn deltas(&self, len: usize) -> Result<Vec<f64>> {
        self.param("deltas", &self.deltas, len)
    }

    pub fn settings(&self, overrides: &EvalOverrides) -> Result<EvalSettings> {
        let base = EvalSettings::default();
        let section = self.eval.unwrap_or(EvalSection {
            grid_size: None,
            tol: None,
            max_iters: None,
        });
        let settings = EvalSettings {
            grid_size: overrides
                .grid_size
                .or(section.grid_size)
                .unwrap_or(base.grid_size),
            tol: overrides.tol.or(section.tol).unwrap_or(base.tol),
            max_iters: overrides
                .max_iters
                .or(section.max_iters)
                .unwrap_or(base.max_iters),
        };
        settings.validate().map_err(locate)?;
        Ok(settings)
    }
}
