//! Atomic file output and the SVG cloud plot.

use crate::Failure;
use renormkit::codes::{bound_curve, BoundKind, CodeEnsemble};
use std::io::Write;
use std::path::Path;

/// Writes every file or none: all contents are staged in temporaries
/// next to their targets before the first rename.
pub fn write_all(files: &[(&Path, String)]) -> Result<(), Failure> {
    let io = |p: &Path, e: std::io::Error| Failure::Io(format!("{}: {e}", p.display()));
    let mut staged = Vec::new();
    for (path, contents) in files {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io(path, e))?;
        tmp.write_all(contents.as_bytes()).map_err(|e| io(path, e))?;
        staged.push((tmp, *path));
    }
    for (tmp, path) in staged {
        tmp.persist(path).map_err(|e| io(path, e.error))?;
    }
    Ok(())
}

pub fn stamp(what: &str) -> String {
    format!("renormkit {} {what}", renormkit::VERSION)
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 60.0;

fn to_px(delta: f64, rate: f64) -> (f64, f64) {
    let x = MARGIN + delta * (WIDTH - 2.0 * MARGIN);
    let y = HEIGHT - MARGIN - rate * (HEIGHT - 2.0 * MARGIN);
    (x, y)
}

/// Scatter of code points `(δ, R)` over the three bound curves.
pub fn cloud_svg(ensemble: &CodeEnsemble) -> String {
    use renormkit::rational::to_f64;
    let q = ensemble.q();
    let mut s = String::new();
    s.push_str(&format!("<!-- {} -->\n", ensemble.stamp().trim_start_matches("# ")));
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" width=\"{WIDTH}\" height=\"{HEIGHT}\">\n"
    ));
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    let (x0, y0) = to_px(0.0, 0.0);
    let (x1, y1) = to_px(1.0, 1.0);
    s.push_str(&format!(
        "<path d=\"M{x0:.2},{y1:.2} L{x0:.2},{y0:.2} L{x1:.2},{y0:.2}\" fill=\"none\" stroke=\"black\"/>\n"
    ));
    s.push_str(&format!("<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">δ</text>\n", (x0 + x1) / 2.0, y0 + 40.0));
    s.push_str(&format!("<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">R</text>\n", x0 - 40.0, (y0 + y1) / 2.0));
    for (kind, color) in BoundKind::ALL.into_iter().zip(["#d62728", "#2ca02c", "#1f77b4"]) {
        let points: Vec<String> = (0..=200)
            .map(|i| {
                let d = i as f64 / 200.0;
                let (x, y) = to_px(d, bound_curve(kind, q, d).expect("δ in range"));
                format!("{x:.2},{y:.2}")
            })
            .collect();
        s.push_str(&format!(
            "<polyline class=\"{}\" points=\"{}\" fill=\"none\" stroke=\"{color}\"/>\n",
            kind.name(),
            points.join(" ")
        ));
    }
    for e in ensemble.entries() {
        let (x, y) = to_px(to_f64(&e.params.delta), to_f64(&e.params.rate));
        s.push_str(&format!("<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2\" fill=\"black\" fill-opacity=\"0.3\"/>\n"));
    }
    s.push_str("</svg>\n");
    s
}
