//! `zipfrac` command-line front end.
//!
//! ```text
//! zipfrac interpolate <config>   grid CSV, JSON report and optional SVG
//! zipfrac bounds <config>        positivity bounds as JSON
//! zipfrac check <config>         positivity certificate and probe minimum
//! zipfrac demo [--outdir D]      the six reference panels as CSV + SVG
//! ```
//!
//! Relative output paths resolve against `--outdir`, then `ZIPFRAC_OUTDIR`,
//! then the working directory.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::config::{locate, EvalOverrides, RunConfig};
use crate::error::{Error, Result};
use crate::evaluator::{fixed_point, EvalReport, Interpolant};
use crate::fixtures::PANELS;
use crate::ifs::build_ifs;
use crate::output::{write_csv, write_json, write_svg};
use crate::positivity::{
    lambda_bounds, positivity_report, shape_bounds, PositivityReport, DEFAULT_PROBE_SIZE,
    FRAGILE_MARGIN,
};

/// Exit status when a positivity check fails.
pub const EXIT_NOT_POSITIVE: i32 = 1;
/// Exit status on any error.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "zipfrac",
    version,
    about = "Zipper fractal interpolation with positivity analysis"
)]
pub struct Cli {
    /// Grid size of the fixed-point evaluation.
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    /// Sup-norm stopping tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Iteration budget.
    #[arg(long = "max-iters", global = true)]
    pub max_iters: Option<usize>,
    /// Root directory for relative output paths.
    #[arg(long, global = true, env = "ZIPFRAC_OUTDIR")]
    pub outdir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the interpolant and write its samples.
    Interpolate { config: PathBuf },
    /// Print positivity bounds on the scaling factors and shape parameters.
    Bounds { config: PathBuf },
    /// Certify positivity and sample the interpolant on a probe grid.
    Check {
        config: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PROBE_SIZE)]
        probe: usize,
    },
    /// Write the six reference panels.
    Demo,
}

impl Cli {
    pub fn overrides(&self) -> EvalOverrides {
        EvalOverrides {
            grid_size: self.grid,
            tol: self.tol,
            max_iters: self.max_iters,
        }
    }

    fn out_root(&self) -> PathBuf {
        self.outdir.clone().unwrap_or_else(|| PathBuf::from("."))
    }
}

/// JSON report of `interpolate`.
#[derive(Debug, Clone, Serialize)]
pub struct InterpolateSummary {
    #[serde(flatten)]
    pub report: EvalReport,
    pub grid_size: usize,
    pub tol: f64,
    pub lambda_sup: f64,
    pub knot_residual: f64,
    pub min: f64,
    pub max: f64,
    pub files: Vec<PathBuf>,
}

fn resolve(root: &Path, p: &Path) -> PathBuf {
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        root.join(p)
    }
}

/// Evaluates a configuration and writes the requested files. Without an
/// `outputs` section, `<stem>.csv` and `<stem>.report.json` are written.
pub fn interpolate(
    cfg: &RunConfig,
    stem: &str,
    out_root: &Path,
    overrides: &EvalOverrides,
) -> Result<InterpolateSummary> {
    let ds = cfg.dataset()?;
    let d = cfg.derivatives(&ds)?;
    let zc = cfg.zipper(&ds)?;
    let settings = cfg.settings(overrides)?;
    let ifs = build_ifs(&ds, &d, &zc).map_err(locate)?;
    let interp = Interpolant::new(ifs, &settings)?;

    let outputs = cfg.outputs.clone().unwrap_or_default();
    let csv = resolve(
        out_root,
        &outputs.csv.unwrap_or_else(|| format!("{stem}.csv").into()),
    );
    let json = resolve(
        out_root,
        &outputs
            .json
            .unwrap_or_else(|| format!("{stem}.report.json").into()),
    );
    let svg = outputs.svg.map(|p| resolve(out_root, &p));

    write_csv(&csv, interp.samples())?;
    let mut files = vec![csv];
    if let Some(svg) = svg {
        write_svg(&svg, interp.samples(), &ds, stem)?;
        files.push(svg);
    }
    files.push(json.clone());
    let summary = InterpolateSummary {
        report: interp.report().clone(),
        grid_size: settings.grid_size,
        tol: settings.tol,
        lambda_sup: interp.ifs().lambda_sup(),
        knot_residual: interp.knot_residual()?,
        min: interp.samples().min(),
        max: interp.samples().max(),
        files,
    };
    write_json(&json, &summary)?;
    Ok(summary)
}

/// JSON report of `bounds`.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub lambda_max: Vec<f64>,
    /// `lambda_max` rounded to 4 decimals.
    pub lambda_max_display: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_min: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_min: Option<Vec<f64>>,
    pub warnings: Vec<String>,
}

/// Positivity bounds for a configuration. Shape bounds are added when the
/// configuration carries scaling factors inside the `λ` bounds.
pub fn bounds(cfg: &RunConfig) -> Result<BoundsReport> {
    let ds = cfg.dataset()?;
    let sig = cfg.signature()?;
    let lambda_max = lambda_bounds(&ds, &sig).map_err(locate)?;
    let mut report = BoundsReport {
        lambda_max_display: lambda_max.iter().map(|b| format!("{b:.4}")).collect(),
        lambda_max,
        beta_min: None,
        gamma_min: None,
        warnings: Vec::new(),
    };
    let m = ds.intervals();
    let Some(lambdas) = cfg.lambdas(m)? else {
        return Ok(report);
    };
    for (j, (&l, &b)) in lambdas.iter().zip(&report.lambda_max).enumerate() {
        if (b - l).abs() <= FRAGILE_MARGIN {
            report.warnings.push(format!(
                "lambdas[{j}] = {l} is within {FRAGILE_MARGIN:e} of its bound {b}"
            ));
        }
    }
    let d = cfg.derivatives(&ds)?;
    match shape_bounds(&ds, &d, &sig, &lambdas, &cfg.alphas(m)?, &cfg.deltas(m)?) {
        Ok(sb) => {
            let given = [
                ("betas", &cfg.betas, &sb.beta_min),
                ("gammas", &cfg.gammas, &sb.gamma_min),
            ];
            for (name, spec, mins) in given {
                let Some(spec) = spec else { continue };
                for (j, (v, lo)) in spec.expand(m).iter().zip(mins.iter()).enumerate() {
                    if v <= lo {
                        report.warnings.push(format!(
                            "{name}[{j}] = {v} does not exceed its lower bound {lo}"
                        ));
                    } else if v - lo <= FRAGILE_MARGIN {
                        report.warnings.push(format!(
                            "{name}[{j}] = {v} is within {FRAGILE_MARGIN:e} of its bound {lo}"
                        ));
                    }
                }
            }
            report.beta_min = Some(sb.beta_min);
            report.gamma_min = Some(sb.gamma_min);
        }
        Err(e @ Error::LambdaOutOfBounds { .. }) => {
            report.warnings.push(format!("no shape bounds: {e}"));
        }
        Err(e) => return Err(locate(e)),
    }
    Ok(report)
}

/// Positivity certificate plus probe-grid check.
pub fn check(cfg: &RunConfig, overrides: &EvalOverrides, probe: usize) -> Result<PositivityReport> {
    let ds = cfg.dataset()?;
    let d = cfg.derivatives(&ds)?;
    let zc = cfg.zipper(&ds)?;
    let settings = cfg.settings(overrides)?;
    let ifs = build_ifs(&ds, &d, &zc)?;
    positivity_report(&ifs, &settings, probe)
}

#[derive(Debug, Clone, Serialize)]
pub struct PanelSummary {
    pub name: String,
    pub converged: bool,
    pub iterations: usize,
    pub min: f64,
    pub csv: PathBuf,
    pub svg: PathBuf,
}

/// Writes `<panel>.csv` and `<panel>.svg` for every reference panel.
pub fn demo(outdir: &Path, overrides: &EvalOverrides) -> Result<Vec<PanelSummary>> {
    PANELS
        .iter()
        .map(|panel| {
            let cfg = panel.config();
            let ds = cfg.dataset()?;
            let ifs = build_ifs(&ds, &cfg.derivatives(&ds)?, &cfg.zipper(&ds)?)?;
            let report = fixed_point(&ifs, &cfg.settings(overrides)?)?.into_converged()?;
            let csv = outdir.join(format!("{}.csv", panel.name));
            let svg = outdir.join(format!("{}.svg", panel.name));
            write_csv(&csv, &report.result)?;
            write_svg(
                &svg,
                &report.result,
                &ds,
                &format!("{}: {}", panel.name, panel.description),
            )?;
            Ok(PanelSummary {
                name: panel.name.to_string(),
                converged: report.converged,
                iterations: report.iterations,
                min: report.result.min(),
                csv,
                svg,
            })
        })
        .collect()
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    writeln!(out, "{text}").map_err(|e| Error::io("<stdout>", e))
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let overrides = cli.overrides();
    match &cli.command {
        Command::Interpolate { config } => {
            let cfg = RunConfig::load(config)?;
            let stem = config
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "zipfrac".into());
            let summary = interpolate(&cfg, &stem, &cli.out_root(), &overrides)?;
            print_json(out, &summary)?;
            Ok(0)
        }
        Command::Bounds { config } => {
            let report = bounds(&RunConfig::load(config)?)?;
            for w in &report.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            print_json(out, &report)?;
            Ok(0)
        }
        Command::Check { config, probe } => {
            let report = check(&RunConfig::load(config)?, &overrides, *probe)?;
            for c in report.certificate.intervals.iter().filter(|c| c.fragile) {
                let _ = writeln!(
                    err,
                    "warning: interval {} sits within {FRAGILE_MARGIN:e} of a positivity bound",
                    c.interval
                );
            }
            print_json(out, &report)?;
            Ok(if report.positive() {
                0
            } else {
                EXIT_NOT_POSITIVE
            })
        }
        Command::Demo => {
            let panels = demo(&cli.out_root(), &overrides)?;
            print_json(out, &panels)?;
            Ok(0)
        }
    }
}
