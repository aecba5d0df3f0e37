// Drive the engine from a JSON run configuration, the same format the
// command-line tool reads, and write CSV, SVG and a JSON report.

use zipfrac::cli::interpolate;
use zipfrac::config::{EvalOverrides, RunConfig};

const CONFIG: &str = r#"{
    "data": { "knots": [0, 1, 2.5, 4, 6], "values": [1.0, 3.0, 2.0, 2.5, 1.2] },
    "signature": [0, 1, 0, 1],
    "lambdas": [0.05, 0.1, 0.08, 0.1],
    "alphas": 1,
    "betas": 2,
    "gammas": [2, 2, 3, 2],
    "deltas": 1,
    "eval": { "grid_size": 513 },
    "outputs": { "csv": "custom.csv", "svg": "custom.svg", "json": "custom.report.json" }
}"#;

pub fn run_example() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = RunConfig::from_json(CONFIG).unwrap();
    let summary = interpolate(&cfg, "custom", dir.path(), &EvalOverrides::default()).unwrap();
    println!(
        "converged in {} iterations, knot residual {:.1e}, range [{:.3}, {:.3}]",
        summary.report.iterations, summary.knot_residual, summary.min, summary.max
    );
    for f in &summary.files {
        println!("wrote {}", f.file_name().unwrap().to_string_lossy());
        assert!(f.exists());
    }

    let broken = CONFIG.replace(
        "\"lambdas\": [0.05, 0.1, 0.08, 0.1]",
        "\"lambdas\": [0.05, 0.9, 0.08, 0.1]",
    );
    let cfg = RunConfig::from_json(&broken).unwrap();
    let err = interpolate(&cfg, "custom", dir.path(), &EvalOverrides::default()).unwrap_err();
    println!("rejected: {err}");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
