// Arithmetic-mean derivative estimates next to the chord slopes they blend.

use zipfrac::derivatives::chord_slopes;
use zipfrac::fixtures::{REFERENCE_KNOTS, REFERENCE_VALUES};
use zipfrac::{amm_derivatives, validate_dataset};

pub fn run_example() {
    let ds = validate_dataset(&REFERENCE_KNOTS, &REFERENCE_VALUES).unwrap();
    let slopes = chord_slopes(&ds);
    let d = amm_derivatives(&ds);
    for (i, (&t, &dv)) in ds.knots().iter().zip(d.values()).enumerate() {
        let around = match i {
            0 => format!("{:>10.6}", slopes[0]),
            i if i == slopes.len() => format!("{:>10.6}", slopes[i - 1]),
            i => format!("{:>10.6} {:>10.6}", slopes[i - 1], slopes[i]),
        };
        println!("t = {t:>4}  d = {dv:>10.6}   chords: {around}");
    }

    // Affine data is reproduced exactly.
    let line = validate_dataset(&[0.0, 0.3, 1.7, 2.0, 5.0], &[1.0, 1.6, 4.4, 5.0, 11.0]).unwrap();
    for &dv in amm_derivatives(&line).values() {
        assert!((dv - 2.0).abs() < 1e-12);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
