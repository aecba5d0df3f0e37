// Render the six reference panels to CSV and SVG.
//
// Pass a directory to keep the files; otherwise they go to a temporary
// directory that is removed on exit.

use zipfrac::cli::demo;
use zipfrac::config::EvalOverrides;

pub fn run_example() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = std::env::args()
        .nth(1)
        .filter(|a| !a.starts_with('-'))
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| tmp.path().to_path_buf());
    for p in demo(&dir, &EvalOverrides::default()).unwrap() {
        println!(
            "{}: {} iterations, min {:>8.4}  -> {}",
            p.name,
            p.iterations,
            p.min,
            p.svg.display()
        );
        assert!(p.converged && p.iterations <= 60);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
