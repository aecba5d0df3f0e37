// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use zipfrac::cli::bounds;
use zipfrac::derivatives::chord_slopes;
use zipfrac::fixtures::{panel, PANELS, REFERENCE_KNOTS, REFERENCE_VALUES};
use zipfrac::{
    affine_map, amm_derivatives, apply_operator, bound_report, build_ifs, classical_eval,
    fixed_point, lambda_bounds, measured_gap, positivity_report, rational_coeffs, set_derivatives,
    shape_bounds, validate_config, validate_dataset, Dataset, DerivativeSet, ErrorBoundInputs,
    EvalSettings, Interpolant, SampledFunction, Signature, ZipperConfig, ZipperIfs,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("took {elapsed:?}, limit {limit:?}"),
    )
}

fn panel_ifs(name: &str) -> ZipperIfs {
    let cfg = panel(name).unwrap().config();
    let ds = cfg.dataset().unwrap();
    build_ifs(
        &ds,
        &cfg.derivatives(&ds).unwrap(),
        &cfg.zipper(&ds).unwrap(),
    )
    .unwrap()
}

fn random_dataset(rng: &mut StdRng) -> Dataset {
    let n = rng.gen_range(4..=9);
    let mut t = rng.gen_range(-5.0..5.0);
    let mut knots = Vec::with_capacity(n);
    for _ in 0..n {
        knots.push(t);
        t += rng.gen_range(0.2..3.0);
    }
    let values: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..20.0)).collect();
    validate_dataset(&knots, &values).unwrap()
}

fn random_signature(rng: &mut StdRng, m: usize) -> Signature {
    Signature::new((0..m).map(|_| rng.gen_range(0..=1u8)).collect()).unwrap()
}

/// Draws every parameter strictly inside the positivity bounds.
fn random_positive_config(rng: &mut StdRng, ds: &Dataset, d: &DerivativeSet) -> ZipperConfig {
    let m = ds.intervals();
    let signature = random_signature(rng, m);
    let lambdas: Vec<f64> = lambda_bounds(ds, &signature)
        .unwrap()
        .iter()
        .map(|b| rng.gen_range(0.0..=0.99) * b)
        .collect();
    let alphas: Vec<f64> = (0..m).map(|_| rng.gen_range(0.01..=2.0)).collect();
    let deltas: Vec<f64> = (0..m).map(|_| rng.gen_range(0.01..=2.0)).collect();
    let sb = shape_bounds(ds, d, &signature, &lambdas, &alphas, &deltas).unwrap();
    let above = |lo: f64, rng: &mut StdRng| 1.01 * lo + rng.gen_range(1e-3..2.0);
    let betas = sb.beta_min.iter().map(|&lo| above(lo, rng)).collect();
    let gammas = sb.gamma_min.iter().map(|&lo| above(lo, rng)).collect();
    ZipperConfig {
        signature,
        lambdas,
        alphas,
        betas,
        gammas,
        deltas,
    }
}

fn criterion_1() -> Outcome {
    const LISTED: [f64; 6] = [0.1333, 0.0571, 0.0464, 0.0536, 0.05, 0.0492];
    const PRINTED: [&str; 6] = ["0.1333", "0.0571", "0.0464", "0.0535", "0.0500", "0.0492"];
    let cfg = panel("fig1a").unwrap().config();
    let start = Instant::now();
    let report = bounds(&cfg).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for (j, (&b, &want)) in report.lambda_max.iter().zip(&LISTED).enumerate() {
        ensure(
            (b - want).abs() <= 1e-4,
            format!("interval {}: {b} vs {want}", j + 1),
        )?;
    }
    let truncated: Vec<String> = report
        .lambda_max
        .iter()
        .map(|b| format!("{:.4}", (b * 1e4 + 1e-9).floor() / 1e4))
        .collect();
    ensure(truncated == PRINTED, format!("truncated {truncated:?}"))?;
    within(elapsed, Duration::from_millis(100))?;
    Ok(format!(
        "display {:?} in {elapsed:?}",
        report.lambda_max_display
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for p in &PANELS {
        let phi = Interpolant::new(panel_ifs(p.name), &EvalSettings::default())
            .map_err(|e| e.to_string())?;
        let r = phi.knot_residual().unwrap();
        ensure(r <= 1e-8, format!("{}: knot residual {r:e}", p.name))?;
        worst = worst.max(r);
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("worst knot residual {worst:.1e} in {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    let settings = EvalSettings::default();
    let b = positivity_report(&panel_ifs("fig1b"), &settings, 10_001).unwrap();
    let phi = Interpolant::new(panel_ifs("fig1a"), &settings).unwrap();
    let probe = phi.sample(10_001).unwrap();
    let stray: Vec<f64> = probe
        .points()
        .filter(|&(t, v)| v < 0.0 && !((3.0..=8.0).contains(&t) || (12.0..=16.0).contains(&t)))
        .map(|(t, _)| t)
        .collect();
    let a_min = probe.min();
    let summary = format!(
        "fig1b certified={} empirical_min={:.4}; fig1a empirical_min={a_min:.4}, {} negatives outside [3,8]u[12,16]",
        b.certified,
        b.empirical_min,
        stray.len()
    );
    let failing: Vec<String> = b
        .certificate
        .intervals
        .iter()
        .filter(|c| !c.lambda_ok || !c.coefficients_positive)
        .map(|c| format!("interval {} U,V,W,X={:?}", c.interval, c.numerator))
        .collect();
    ensure(
        b.certified,
        format!("{summary}; fig1b uncertified on {}", failing.join(", ")),
    )?;
    ensure(
        b.empirical_min > 0.0 && a_min < 0.0 && stray.is_empty(),
        summary.clone(),
    )?;
    Ok(summary)
}

fn criterion_4() -> Outcome {
    let mut worst = 0.0f64;
    for name in ["fig1e", "fig1f"] {
        let ifs = panel_ifs(name);
        let r = fixed_point(&ifs, &EvalSettings::default())
            .unwrap()
            .into_converged()
            .unwrap();
        for (t, v) in r.result.points() {
            worst = worst.max((v - classical_eval(&ifs, t).unwrap()).abs());
        }
    }
    ensure(worst <= 1e-10, format!("sup difference {worst:e}"))?;
    Ok(format!("sup difference {worst:.1e}"))
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut worst_slack = f64::INFINITY;
    for _ in 0..10 {
        let ds = random_dataset(&mut rng);
        let d = amm_derivatives(&ds);
        let m = ds.intervals();
        let signature = random_signature(&mut rng, m);
        let lambdas: Vec<f64> = (0..m)
            .map(|j| rng.gen_range(-0.99..0.99) * ds.step(j) / ds.span())
            .collect();
        let cfg = validate_config(
            &ds,
            ZipperConfig {
                signature,
                lambdas,
                alphas: (0..m).map(|_| rng.gen_range(0.1..2.0)).collect(),
                betas: (0..m).map(|_| rng.gen_range(0.1..5.0)).collect(),
                gammas: (0..m).map(|_| rng.gen_range(0.1..5.0)).collect(),
                deltas: (0..m).map(|_| rng.gen_range(0.1..2.0)).collect(),
            },
        )
        .map_err(|e| e.to_string())?;
        let ifs = build_ifs(&ds, &d, &cfg).unwrap();
        let lam = ifs.lambda_sup();
        let grid = 257;
        for _ in 0..50 {
            let mut draw = || {
                SampledFunction::new(
                    ds.start(),
                    ds.end(),
                    (0..grid).map(|_| rng.gen_range(-50.0..50.0)).collect(),
                )
                .unwrap()
            };
            let (g, h) = (draw(), draw());
            let num = measured_gap(
                &apply_operator(&ifs, &g).unwrap(),
                &apply_operator(&ifs, &h).unwrap(),
            )
            .unwrap();
            let ratio = num / measured_gap(&g, &h).unwrap();
            ensure(
                ratio <= lam + 1e-9,
                format!("ratio {ratio} exceeds |λ|∞ = {lam}"),
            )?;
            worst_slack = worst_slack.min(lam - ratio);
        }
    }
    Ok(format!(
        "500 pairs, smallest slack |λ|∞ - ratio = {worst_slack:.2e}"
    ))
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let start = Instant::now();
    let mut lowest = f64::INFINITY;
    for k in 0..100 {
        let ds = random_dataset(&mut rng);
        let d = amm_derivatives(&ds);
        let cfg = validate_config(&ds, random_positive_config(&mut rng, &ds, &d))
            .map_err(|e| e.to_string())?;
        let ifs = build_ifs(&ds, &d, &cfg).unwrap();
        let r =
            positivity_report(&ifs, &EvalSettings::default(), 10_001).map_err(|e| e.to_string())?;
        ensure(
            r.positive(),
            format!(
                "draw {k}: certified={} min={}",
                r.certified, r.empirical_min
            ),
        )?;
        lowest = lowest.min(r.empirical_min);
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "100 draws certified, lowest probe value {lowest:.3e}, {elapsed:?}"
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut cases = vec![(
        validate_dataset(&REFERENCE_KNOTS, &REFERENCE_VALUES).unwrap(),
        Signature::ones(6),
    )];
    for _ in 0..20 {
        let ds = random_dataset(&mut rng);
        let sig = random_signature(&mut rng, ds.intervals());
        cases.push((ds, sig));
    }
    let mut checked = 0;
    for (ds, sig) in &cases {
        let d = amm_derivatives(ds);
        let m = ds.intervals();
        let bounds = lambda_bounds(ds, sig).unwrap();
        for j in 0..m {
            let a = affine_map(ds, j, sig.reversed(j)).unwrap().a.abs();
            if bounds[j] >= a {
                continue;
            }
            let coeffs = |lambda: f64| {
                let mut lambdas = vec![0.0; m];
                lambdas[j] = lambda;
                let cfg = validate_config(
                    ds,
                    ZipperConfig::with_uniform_ends(
                        sig.clone(),
                        lambdas,
                        1.0,
                        vec![1.0; m],
                        vec![1.0; m],
                        1.0,
                    ),
                )
                .unwrap();
                rational_coeffs(ds, &d, &cfg, j).unwrap()
            };
            let below = coeffs(bounds[j] - 1e-9);
            let above = coeffs(bounds[j] + 1e-9);
            ensure(
                below.u > 0.0 && below.x > 0.0,
                format!("interval {}: U or X not positive below bound", j + 1),
            )?;
            ensure(
                above.u < 0.0 || above.x < 0.0,
                format!("interval {}: no sign flip above bound", j + 1),
            )?;
            checked += 1;
        }
    }
    ensure(checked > 0, "no interval with bound below |a_j|")?;
    Ok(format!("{checked} intervals flip sign across the bound"))
}

fn criterion_8() -> Outcome {
    let psi = |t: f64| 2.0 + t.sin();
    let knots: Vec<f64> = (0..7).map(|i| i as f64 * PI / 3.0).collect();
    let values: Vec<f64> = knots.iter().map(|&t| psi(t)).collect();
    let ds = validate_dataset(&knots, &values).unwrap();
    let d = set_derivatives(&ds, &knots.iter().map(|t| t.cos()).collect::<Vec<_>>()).unwrap();
    let inputs = ErrorBoundInputs {
        psi_sup: Some(3.0),
        psi3_sup: Some(1.0),
        c: 10.0,
        denominator_ratio: 1.0,
    };
    let probe = 10_000;
    let exact = SampledFunction::from_fn(ds.start(), ds.end(), probe, psi).unwrap();
    let signatures = [
        vec![0u8; 6],
        vec![1; 6],
        vec![1, 0, 1, 0, 1, 0],
        vec![0, 0, 1, 1, 0, 1],
    ];
    let sweep: Vec<(usize, f64)> = (0..3)
        .flat_map(|s| [0.0, 0.25, 0.9].map(|f| (s, f)))
        .chain([(3, 0.9)])
        .collect();
    let mut tightest = f64::INFINITY;
    for (s, frac) in sweep {
        let sig = Signature::new(signatures[s].clone()).unwrap();
        let lambdas: Vec<f64> = lambda_bounds(&ds, &sig)
            .unwrap()
            .iter()
            .map(|b| frac * b)
            .collect();
        let build = |sig: Signature| {
            validate_config(
                &ds,
                ZipperConfig::with_uniform_ends(
                    sig,
                    lambdas.clone(),
                    1.0,
                    vec![2.0; 6],
                    vec![2.0; 6],
                    1.0,
                ),
            )
            .unwrap()
        };
        let cfg = build(sig.clone());
        let plain = build(Signature::zeros(6));
        let report = bound_report(&ds, &d, &cfg, &inputs).unwrap();
        let sample = |cfg| {
            Interpolant::new(build_ifs(&ds, &d, cfg).unwrap(), &EvalSettings::default())
                .unwrap()
                .sample(probe)
                .unwrap()
        };
        let (zipped, unzipped) = (sample(&cfg), sample(&plain));
        let total = report.total.unwrap();
        let err = measured_gap(&zipped, &exact).unwrap();
        let zip_gap = measured_gap(&zipped, &unzipped).unwrap();
        let label = format!("signature {:?}, λ = {frac}·bound", sig.bits());
        ensure(
            total >= err,
            format!("{label}: total {total} < measured {err}"),
        )?;
        ensure(
            report.zipper_term >= zip_gap,
            format!(
                "{label}: zipper term {} < measured {zip_gap}",
                report.zipper_term
            ),
        )?;
        tightest = tightest.min(total / err);
    }
    Ok(format!(
        "10 configs, smallest bound/measured ratio {tightest:.1}"
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    for k in 0..100 {
        let ds = random_dataset(&mut rng);
        let (slope, shift) = (rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let affine: Vec<f64> = ds.knots().iter().map(|t| slope * t + shift).collect();
        let line = validate_dataset(ds.knots(), &affine).unwrap();
        for &dv in amm_derivatives(&line).values() {
            ensure(
                (dv - slope).abs() <= 1e-12,
                format!("dataset {k}: {dv} vs slope {slope}"),
            )?;
        }
        let d = amm_derivatives(&ds);
        let s = chord_slopes(&ds);
        for i in 1..ds.len() - 1 {
            let (lo, hi) = (s[i - 1].min(s[i]), s[i - 1].max(s[i]));
            let v = d.values()[i];
            ensure(
                v >= lo - 1e-12 && v <= hi + 1e-12,
                format!("dataset {k}, knot {}: {v} outside [{lo}, {hi}]", i + 1),
            )?;
        }
    }
    Ok("100 datasets".into())
}

fn criterion_10() -> Outcome {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for dir in &dirs {
        let out = Command::new(env!("CARGO_BIN_EXE_zipfrac"))
            .args(["demo", "--outdir"])
            .arg(dir.path())
            .output()
            .unwrap();
        ensure(
            out.status.success(),
            String::from_utf8_lossy(&out.stderr).to_string(),
        )?;
    }
    let read = |dir: &Path, name: &str| std::fs::read(dir.join(format!("{name}.csv"))).unwrap();
    for p in &PANELS {
        ensure(
            read(dirs[0].path(), p.name) == read(dirs[1].path(), p.name),
            format!("{}.csv differs between runs", p.name),
        )?;
    }
    Ok("six CSV files byte-identical across two runs".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("lambda bounds on the reference data", criterion_1),
        ("interpolation at the knots", criterion_2),
        ("positivity of fig1b against fig1a", criterion_3),
        ("classical limit", criterion_4),
        ("contraction of the operator", criterion_5),
        ("random configurations inside the bounds", criterion_6),
        ("sharpness of the lambda bound", criterion_7),
        ("error bound validity", criterion_8),
        ("derivative estimates", criterion_9),
        ("determinism of demo output", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
