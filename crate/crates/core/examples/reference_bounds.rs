// Positivity bounds on the scaling factors and shape parameters for the
// reference dataset, under both all-forward and all-reversed signatures.

use zipfrac::fixtures::{panel, REFERENCE_KNOTS, REFERENCE_VALUES};
use zipfrac::{amm_derivatives, lambda_bounds, shape_bounds, validate_dataset, Signature};

pub fn run_example() {
    let ds = validate_dataset(&REFERENCE_KNOTS, &REFERENCE_VALUES).unwrap();

    let reversed = lambda_bounds(&ds, &Signature::ones(6)).unwrap();
    let forward = lambda_bounds(&ds, &Signature::zeros(6)).unwrap();
    println!("interval  lambda_max (reversed)  lambda_max (forward)");
    for (j, (r, f)) in reversed.iter().zip(&forward).enumerate() {
        println!("{:>8}  {r:>21.4}  {f:>20.4}", j + 1);
    }
    assert_ne!(reversed, forward);

    let row = panel("fig1b").unwrap();
    let sb = shape_bounds(
        &ds,
        &amm_derivatives(&ds),
        &Signature::ones(6),
        &row.lambdas,
        &[0.5; 6],
        &[1.0; 6],
    )
    .unwrap();
    println!("\nshape bounds for the fig1b scaling factors:");
    for j in 0..6 {
        println!(
            "  interval {}: beta > {:.4} (given {}), gamma > {:.4} (given {})",
            j + 1,
            sb.beta_min[j],
            row.betas[j],
            sb.gamma_min[j],
            row.gammas[j]
        );
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
