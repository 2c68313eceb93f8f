//! Plain SVG 1.1: host edges solid, added edges dashed, red and blue
//! vertex discs.

use std::fmt::Write;

use crate::error::{invalid, Result};
use crate::graph::{Edge, ParityColoring};

const SIZE: f64 = 800.0;
const PAD: f64 = 0.05;

/// Draws `edges` and the optional augmentation `added` at `coords`. Output
/// depends only on the arguments.
pub fn render_svg(
    coords: &[[f64; 2]],
    edges: &[Edge],
    col: &ParityColoring,
    added: Option<&[Edge]>,
) -> Result<String> {
    let n = coords.len();
    if col.len() != n {
        return invalid(format!("{} colors for {n} vertices", col.len()));
    }
    let all = edges.iter().chain(added.unwrap_or(&[]));
    if let Some(e) = all.clone().find(|e| e.0 >= n || e.1 >= n) {
        return invalid(format!("edge {e:?} out of range"));
    }
    if coords.iter().flatten().any(|c| !c.is_finite()) {
        return invalid("non-finite coordinate");
    }
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for c in coords {
        for k in 0..2 {
            lo[k] = lo[k].min(c[k]);
            hi[k] = hi[k].max(c[k]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12);
    let scale = SIZE * (1.0 - 2.0 * PAD) / span;
    let map = |c: [f64; 2]| -> (f64, f64) {
        (
            SIZE * PAD + (c[0] - lo[0]) * scale,
            SIZE * PAD + (hi[1] - c[1]) * scale,
        )
    };
    let r = (SIZE / (4.0 * (n.max(1) as f64).sqrt())).clamp(1.0, 8.0);
    let stroke = r / 3.0;
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let line = |s: &mut String, e: &Edge| {
        let (a, b) = (map(coords[e.0]), map(coords[e.1]));
        let _ = writeln!(
            s,
            "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\"/>",
            a.0, a.1, b.0, b.1
        );
    };
    let _ = writeln!(
        s,
        "<g stroke=\"black\" stroke-width=\"{stroke:.3}\" class=\"host\">"
    );
    for e in edges {
        line(&mut s, e);
    }
    s.push_str("</g>\n");
    if let Some(h) = added {
        let _ = writeln!(
            s,
            "<g stroke=\"#555555\" stroke-width=\"{stroke:.3}\" stroke-dasharray=\"{:.3} {:.3}\" class=\"added\">",
            3.0 * stroke,
            2.0 * stroke
        );
        for e in h {
            line(&mut s, e);
        }
        s.push_str("</g>\n");
    }
    let _ = writeln!(
        s,
        "<g stroke=\"black\" stroke-width=\"{:.3}\">",
        stroke / 2.0
    );
    for (v, &c) in coords.iter().enumerate() {
        let (x, y) = map(c);
        let fill = if col.is_red(v) { "#d62728" } else { "#1f77b4" };
        let _ = writeln!(
            s,
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{r:.3}\" fill=\"{fill}\"/>"
        );
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}
