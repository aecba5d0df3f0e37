//! Reference dataset and the six reference panels.
//!
//! Every panel uses `α_j = 0.5` and `δ_j = 1` on all intervals.

use crate::config::{DataSection, ParamSpec, RunConfig};

pub const REFERENCE_KNOTS: [f64; 7] = [1.0, 3.0, 8.0, 10.0, 11.0, 12.0, 16.0];
pub const REFERENCE_VALUES: [f64; 7] = [14.0, 2.0, 0.8, 0.65, 0.75, 0.7, 0.69];

pub const PANEL_ALPHA: f64 = 0.5;
pub const PANEL_DELTA: f64 = 1.0;

/// One reference parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Panel {
    pub name: &'static str,
    pub description: &'static str,
    pub lambdas: [f64; 6],
    pub betas: [f64; 6],
    pub gammas: [f64; 6],
    pub signature: [u8; 6],
}

const BETA_DE: [f64; 6] = [0.5028, 3.56, 6.5, 12.5, 22.5, 0.5];
const GAMMA_DE: [f64; 6] = [0.5, 5.5, 53.0, 0.5221, 0.5, 0.5];

pub const PANELS: [Panel; 6] = [
    Panel {
        name: "fig1a",
        description: "parameters chosen without positivity constraints",
        lambdas: [0.1323, 0.2419, 0.0561, 0.0454, 0.0526, 0.149],
        betas: [0.5028, 1.1853, 0.5, 0.5, 0.5, 3.9649],
        gammas: [0.5, 0.5, 0.5868, 0.5221, 0.5, 0.5],
        signature: [1; 6],
    },
    Panel {
        name: "fig1b",
        description: "positivity-preserving reference",
        lambdas: [0.1323, 0.0201, 0.0261, 0.0454, 0.0426, 0.049],
        betas: [0.5028, 172.6956, 6.5, 0.5, 22.5, 0.5],
        gammas: [0.5, 5.5, 0.53, 0.5221, 0.5, 0.5],
        signature: [1; 6],
    },
    Panel {
        name: "fig1c",
        description: "perturbed scaling factors",
        lambdas: [0.1323, 0.0201, 0.04, 0.0454, 0.0001, 0.033],
        betas: [0.5028, 172.6956, 6.5, 0.5, 22.5, 0.5],
        gammas: [0.5, 5.5, 0.53, 0.5221, 0.5, 0.5],
        signature: [1; 6],
    },
    Panel {
        name: "fig1d",
        description: "perturbed scaling factors and shape parameters",
        lambdas: [0.1323, 0.0201, 0.0261, 0.0454, 0.0426, 0.049],
        betas: BETA_DE,
        gammas: GAMMA_DE,
        signature: [1; 6],
    },
    Panel {
        name: "fig1e",
        description: "classical interpolant, forward signature",
        lambdas: [0.0; 6],
        betas: BETA_DE,
        gammas: GAMMA_DE,
        signature: [0; 6],
    },
    Panel {
        name: "fig1f",
        description: "classical interpolant, reversed signature",
        lambdas: [0.0; 6],
        betas: BETA_DE,
        gammas: GAMMA_DE,
        signature: [1; 6],
    },
];

/// Looks a panel up by name (`"fig1a"` .. `"fig1f"`, or just `"a"` .. `"f"`).
pub fn panel(name: &str) -> Option<&'static Panel> {
    PANELS
        .iter()
        .find(|p| p.name == name || p.name.strip_prefix("fig1") == Some(name))
}

impl Panel {
    /// Run configuration with AMM derivatives and default evaluation settings.
    pub fn config(&self) -> RunConfig {
        RunConfig {
            data: DataSection {
                knots: REFERENCE_KNOTS.to_vec(),
                values: REFERENCE_VALUES.to_vec(),
            },
            derivatives: None,
            signature: self.signature.to_vec(),
            lambdas: Some(ParamSpec::List(self.lambdas.to_vec())),
            alphas: Some(ParamSpec::Scalar(PANEL_ALPHA)),
            betas: Some(ParamSpec::List(self.betas.to_vec())),
            gammas: Some(ParamSpec::List(self.gammas.to_vec())),
            deltas: Some(ParamSpec::Scalar(PANEL_DELTA)),
            eval: None,
            outputs: None,
        }
    }
}
