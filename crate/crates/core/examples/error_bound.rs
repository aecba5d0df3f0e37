// A-priori error bound against a known smooth function, next to the measured
// error of the computed interpolant.

use std::f64::consts::PI;

use zipfrac::{
    bound_report, build_ifs, lambda_bounds, measured_gap, set_derivatives, validate_config,
    validate_dataset, ErrorBoundInputs, EvalSettings, Interpolant, SampledFunction, Signature,
    ZipperConfig,
};

pub fn run_example() {
    let psi = |t: f64| 2.0 + t.sin();
    let knots: Vec<f64> = (0..7).map(|i| i as f64 * PI / 3.0).collect();
    let values: Vec<f64> = knots.iter().map(|&t| psi(t)).collect();
    let ds = validate_dataset(&knots, &values).unwrap();
    let d = set_derivatives(&ds, &knots.iter().map(|t| t.cos()).collect::<Vec<_>>()).unwrap();
    let sig = Signature::new(vec![1, 0, 1, 0, 1, 0]).unwrap();
    let lambdas: Vec<f64> = lambda_bounds(&ds, &sig)
        .unwrap()
        .iter()
        .map(|b| 0.25 * b)
        .collect();
    let cfg = validate_config(
        &ds,
        ZipperConfig::with_uniform_ends(sig, lambdas, 1.0, vec![2.0; 6], vec![2.0; 6], 1.0),
    )
    .unwrap();

    let inputs = ErrorBoundInputs {
        psi_sup: Some(3.0),
        psi3_sup: Some(1.0),
        c: 10.0,
        denominator_ratio: 1.0,
    };
    let bound = bound_report(&ds, &d, &cfg, &inputs).unwrap();
    let phi =
        Interpolant::new(build_ifs(&ds, &d, &cfg).unwrap(), &EvalSettings::default()).unwrap();
    let probe = phi.sample(10_000).unwrap();
    let exact = SampledFunction::from_fn(ds.start(), ds.end(), 10_000, psi).unwrap();
    let measured = measured_gap(&probe, &exact).unwrap();

    println!("zipper term  {:.4}", bound.zipper_term);
    println!("spline term  {:.4}", bound.spline_term.unwrap());
    println!("fractal term {:.4}", bound.fractal_term);
    println!(
        "total bound  {:.4}  measured {measured:.4}",
        bound.total.unwrap()
    );
    assert!(bound.total.unwrap() >= measured);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
