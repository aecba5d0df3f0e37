// Coefficient-sign certificate plus a dense probe, for the unconstrained
// and the positivity-tuned parameter sets.

use zipfrac::fixtures::panel;
use zipfrac::{build_ifs, positivity_report, EvalSettings};

pub fn run_example() {
    for name in ["fig1a", "fig1b"] {
        let cfg = panel(name).unwrap().config();
        let ds = cfg.dataset().unwrap();
        let ifs = build_ifs(
            &ds,
            &cfg.derivatives(&ds).unwrap(),
            &cfg.zipper(&ds).unwrap(),
        )
        .unwrap();
        let report = positivity_report(&ifs, &EvalSettings::default(), 10_001).unwrap();
        println!(
            "{name}: certified={} empirical_min={:.4} at t={:.3}, negative intervals {:?}",
            report.certified,
            report.empirical_min,
            report.empirical.argmin,
            report.violating_intervals
        );
        for c in report
            .certificate
            .intervals
            .iter()
            .filter(|c| !c.lambda_ok || !c.coefficients_positive)
        {
            println!(
                "  interval {}: lambda {} vs bound {:.4}, U V W X = {:?}",
                c.interval, c.lambda, c.lambda_bound, c.numerator
            );
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
