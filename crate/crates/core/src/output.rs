//! CSV, SVG and JSON emitters.
//!
//! CSV files have a `t,value` header and one row per grid point, each number
//! printed with 17 significant digits so a read-back is bit-exact.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::data::{Dataset, SampledFunction};
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "t,value";

/// Renders samples as CSV text.
pub fn to_csv(samples: &SampledFunction) -> String {
    let mut out = String::with_capacity(48 * samples.len());
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (t, v) in samples.points() {
        writeln!(out, "{t:.16e},{v:.16e}").expect("writing to a String");
    }
    out
}

/// Parses CSV produced by [`to_csv`] back into `(t, value)` pairs.
pub fn parse_csv(text: &str) -> Result<Vec<(f64, f64)>> {
    let bad = |line: usize, msg: &str| Error::Config {
        path: format!("csv line {line}"),
        message: msg.to_string(),
    };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == CSV_HEADER => {}
        _ => return Err(bad(1, "missing `t,value` header")),
    }
    lines
        .map(|(i, line)| {
            let (t, v) = line
                .split_once(',')
                .ok_or_else(|| bad(i + 1, "expected two columns"))?;
            let t = t.parse().map_err(|_| bad(i + 1, "bad abscissa"))?;
            let v = v.parse().map_err(|_| bad(i + 1, "bad value"))?;
            Ok((t, v))
        })
        .collect()
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn write_csv(path: &Path, samples: &SampledFunction) -> Result<()> {
    write_text(path, &to_csv(samples))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    write_text(path, &text)
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;

/// Self-contained SVG plot: the curve as one polyline, knots as circles and
/// sub-zero stretches filled red. The view box covers the data bounding box
/// plus 5% margins.
pub fn to_svg(samples: &SampledFunction, data: &Dataset, title: &str) -> String {
    let (mut y_lo, mut y_hi) = (samples.min(), samples.max());
    for &f in data.values() {
        y_lo = y_lo.min(f);
        y_hi = y_hi.max(f);
    }
    if y_hi - y_lo < 1e-12 {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    let (x_lo, x_hi) = (samples.start(), samples.end());
    let (mx, my) = (0.05 * (x_hi - x_lo), 0.05 * (y_hi - y_lo));
    let (x0, x1, y0, y1) = (x_lo - mx, x_hi + mx, y_lo - my, y_hi + my);
    let px = |x: f64| (x - x0) / (x1 - x0) * WIDTH;
    let py = |y: f64| (y1 - y) / (y1 - y0) * HEIGHT;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}">"#
    );
    let _ = writeln!(svg, "<title>{}</title>", escape(title));
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    if y0 < 0.0 && y1 > 0.0 {
        let z = py(0.0);
        let _ = writeln!(
            svg,
            r##"<line x1="0" y1="{z:.3}" x2="{WIDTH}" y2="{z:.3}" stroke="#888" stroke-dasharray="4 4"/>"##
        );
    }

    // Sub-zero stretches.
    let pts: Vec<(f64, f64)> = samples.points().collect();
    let mut i = 0;
    while i < pts.len() {
        if pts[i].1 >= 0.0 {
            i += 1;
            continue;
        }
        let start = i;
        while i < pts.len() && pts[i].1 < 0.0 {
            i += 1;
        }
        let run = &pts[start..i];
        let mut poly = format!("{:.3},{:.3}", px(run[0].0), py(0.0));
        for &(t, v) in run {
            let _ = write!(poly, " {:.3},{:.3}", px(t), py(v));
        }
        let _ = write!(poly, " {:.3},{:.3}", px(run[run.len() - 1].0), py(0.0));
        let _ = writeln!(
            svg,
            r#"<polygon points="{poly}" fill="red" fill-opacity="0.4"/>"#
        );
    }

    let mut line = String::with_capacity(20 * pts.len());
    for (k, &(t, v)) in pts.iter().enumerate() {
        if k > 0 {
            line.push(' ');
        }
        let _ = write!(line, "{:.3},{:.3}", px(t), py(v));
    }
    let _ = writeln!(
        svg,
        r#"<polyline points="{line}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#
    );
    for (&t, &f) in data.knots().iter().zip(data.values()) {
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.3}" cy="{:.3}" r="4" fill="black"/>"#,
            px(t),
            py(f)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub fn write_svg(
    path: &Path,
    samples: &SampledFunction,
    data: &Dataset,
    title: &str,
) -> Result<()> {
    write_text(path, &to_svg(samples, data, title))
}
