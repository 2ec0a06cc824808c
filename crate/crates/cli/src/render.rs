//! SVG pictures of a torsion pair on the Auslander–Reiten quiver.
//!
//! The vertex of the arc `(i, j)` sits in row `j - i - 1` (the level) and
//! column `i + j`, so the AR translation moves two columns to the left. Rows
//! 1 to `n + 1` are drawn for `i = 0..=n`, which is one period plus a
//! repeated column. Vertices of the finite half are boxed, and each wing is
//! outlined by two dotted lines running from its top down to just below
//! level 1.

use std::fmt::Write;

use tube_torsion::torsion::decompose;
use tube_torsion::{Arc, TorsionPair};

const MARGIN: i64 = 24;
const ROW: i64 = 36;
const FONT: i64 = 12;

struct Layout {
    n: i64,
    col: i64,
}

impl Layout {
    fn x(&self, column: i64) -> i64 {
        MARGIN + (column - 2) * self.col
    }

    fn y(&self, level: i64) -> i64 {
        MARGIN + (self.n + 1 - level) * ROW
    }

    fn label(&self, a: &Arc) -> String {
        let (i, j) = (a.start().rem_euclid(self.n), a.end().rem_euclid(self.n));
        if self.n <= 10 {
            format!("{i}{j}")
        } else {
            format!("{i},{j}")
        }
    }
}

/// A byte-stable SVG document for `pair`.
pub fn render_svg(pair: &TorsionPair) -> String {
    let half = pair.finite_half();
    let n = half.rank() as i64;
    let layout = Layout {
        n,
        col: if n <= 10 { 14 } else { 26 },
    };
    let width = layout.x(3 * n + 2) + MARGIN;
    let height = layout.y(0) + MARGIN;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r#"<title>torsion pair in the cluster tube of rank {n}, {} half finite</title>"#,
        pair.finite_side().as_str()
    );
    let _ = writeln!(svg, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);

    // wings first so that labels are drawn on top
    let _ = writeln!(svg, r#"<g stroke="black" stroke-width="1" stroke-dasharray="2,3" fill="none">"#);
    if let Ok(w) = decompose(half) {
        for (lo, hi) in w.spans() {
            let g = hi - lo;
            if g < 2 {
                continue;
            }
            for shift in [-n, 0, n] {
                let c = lo + shift;
                let apex = 2 * c + g;
                if apex < g || apex > 2 * n + g {
                    continue;
                }
                let (ax, ay) = (layout.x(apex), layout.y(g - 1));
                for foot in [2 * c + 1, 2 * (c + g) - 1] {
                    let _ = writeln!(
                        svg,
                        r#"<line x1="{ax}" y1="{ay}" x2="{}" y2="{}"/>"#,
                        layout.x(foot),
                        layout.y(0)
                    );
                }
            }
        }
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<g font-family="monospace" font-size="{FONT}" text-anchor="middle" dominant-baseline="central">"#
    );
    for level in (1..=n + 1).rev() {
        for i in 0..=n {
            let a = Arc::new(i, i + level + 1).expect("levels start at 1");
            let (x, y) = (layout.x(a.start() + a.end()), layout.y(level));
            let label = layout.label(&a);
            if half.contains_arc(&a) {
                let w = FONT * (label.len() as i64 + 1) * 3 / 5;
                let _ = writeln!(
                    svg,
                    r#"<rect x="{}" y="{}" width="{w}" height="{}" fill="none" stroke="black"/>"#,
                    x - w / 2,
                    y - FONT * 3 / 4,
                    FONT * 3 / 2
                );
            }
            let _ = writeln!(svg, r#"<text x="{x}" y="{y}">{label}</text>"#);
        }
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    svg
}
