// The operator whose fixed point is the interpolant shrinks sup-norm
// distances by at most `|λ|∞`. Watch the iterates converge geometrically.

use zipfrac::evaluator::{initial_iterate, sup_distance};
use zipfrac::fixtures::panel;
use zipfrac::{apply_operator, build_ifs, SampledFunction};

pub fn run_example() {
    let cfg = panel("fig1a").unwrap().config();
    let ds = cfg.dataset().unwrap();
    let ifs = build_ifs(
        &ds,
        &cfg.derivatives(&ds).unwrap(),
        &cfg.zipper(&ds).unwrap(),
    )
    .unwrap();
    let lam = ifs.lambda_sup();

    let g = initial_iterate(&ifs, 513).unwrap();
    let h = SampledFunction::from_fn(ds.start(), ds.end(), 513, |t| 5.0 * (t / 2.0).cos()).unwrap();
    let ratio = sup_distance(
        &apply_operator(&ifs, &g).unwrap(),
        &apply_operator(&ifs, &h).unwrap(),
    )
    .unwrap()
        / sup_distance(&g, &h).unwrap();
    println!("|λ|∞ = {lam}, observed contraction ratio = {ratio:.6}");
    assert!(ratio <= lam + 1e-9);

    let mut cur = g;
    for k in 1..=8 {
        let next = apply_operator(&ifs, &cur).unwrap();
        println!(
            "iteration {k}: change {:.3e}",
            sup_distance(&cur, &next).unwrap()
        );
        cur = next;
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
