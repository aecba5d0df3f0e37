// With every scaling factor zero the attractor is the rational cubic
// trigonometric spline itself. The fixed-point iteration recovers it in one
// step and matches the closed form.

use zipfrac::fixtures::panel;
use zipfrac::{build_ifs, classical_eval, fixed_point, EvalSettings};

pub fn run_example() {
    for name in ["fig1e", "fig1f"] {
        let cfg = panel(name).unwrap().config();
        let ds = cfg.dataset().unwrap();
        let ifs = build_ifs(
            &ds,
            &cfg.derivatives(&ds).unwrap(),
            &cfg.zipper(&ds).unwrap(),
        )
        .unwrap();
        let report = fixed_point(&ifs, &EvalSettings::default()).unwrap();
        let gap = report
            .result
            .points()
            .map(|(t, v)| (v - classical_eval(&ifs, t).unwrap()).abs())
            .fold(0.0, f64::max);
        println!(
            "{name}: classical_path={} iterations={} max |grid - closed form| = {gap:.2e}",
            report.classical_path, report.iterations
        );
        assert!(gap <= 1e-10);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
