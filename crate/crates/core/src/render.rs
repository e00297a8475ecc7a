//! SVG drawings of instances and matchings.

use std::fmt::Write;

use crate::instance::Instance;
use crate::io::float_points;
use crate::model::{Color, Matching, MatchingGeometry, Pair};
use crate::scalar::to_f64;

const BLUE: &str = "#1f5fbf";
const RED: &str = "#c8281e";

/// Renders the points of `inst`, the pairs of `matching` and, for doubly
/// collinear instances, the two supporting lines. The `witness` pair is drawn
/// thicker and dashed. The y axis points up.
pub fn render_svg(inst: &Instance, matching: Option<&Matching>, witness: Option<Pair>) -> String {
    let pts = float_points(inst);
    let mut xs: Vec<f64> = pts.iter().map(|p| p.0).collect();
    let mut ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
    if let Instance::DoublyCollinear(_) = inst {
        xs.push(0.0);
        ys.push(0.0);
    }
    let (x0, x1) = bounds(&xs);
    let (y0, y1) = bounds(&ys);
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let (w, h) = ((x1 - x0).max(span * 0.05), (y1 - y0).max(span * 0.05));
    let (mx, my) = (w * 0.05, h * 0.05);
    let (vx, vy, vw, vh) = (x0 - mx, -y1 - my, w + 2.0 * mx, h + 2.0 * my);
    let radius = span * 0.012;
    let stroke = span * 0.004;

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="640" height="{}">"#,
        f(vx),
        f(vy),
        f(vw),
        f(vh),
        ((640.0 * vh / vw).round() as i64).max(1)
    )
    .unwrap();

    if let Instance::DoublyCollinear(d) = inst {
        for (dir, color, coords) in [(d.dir_red(), RED, d.red()), (d.dir_blue(), BLUE, d.blue())] {
            let (ux, uy) = (to_f64(&dir[0]), to_f64(&dir[1]));
            let lo = coords.iter().map(to_f64).fold(0.0f64, f64::min) - span * 0.05;
            let hi = coords.iter().map(to_f64).fold(0.0f64, f64::max) + span * 0.05;
            writeln!(
                s,
                r#"<line class="support" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-opacity="0.35" stroke-width="{}"/>"#,
                f(lo * ux),
                f(-lo * uy),
                f(hi * ux),
                f(-hi * uy),
                f(stroke)
            )
            .unwrap();
        }
    }

    if let Some(m) = matching {
        for &(a, b) in m.pairs() {
            let is_witness = witness.is_some_and(|(p, q)| (p.min(q), p.max(q)) == (a.min(b), a.max(b)));
            let (class, color, width, extra) = if is_witness {
                ("witness", "#e08a00", stroke * 2.5, format!(r#" stroke-dasharray="{} {}""#, f(stroke * 6.0), f(stroke * 3.0)))
            } else {
                ("edge", "#333333", stroke, String::new())
            };
            writeln!(
                s,
                r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="{}"{extra}/>"#,
                f(pts[a].0),
                f(-pts[a].1),
                f(pts[b].0),
                f(-pts[b].1),
                f(width)
            )
            .unwrap();
        }
    }

    for (i, p) in pts.iter().enumerate() {
        let fill = match inst.color(i) {
            Some(Color::Blue) => BLUE,
            Some(Color::Red) => RED,
            None => "#000000",
        };
        writeln!(s, r#"<circle cx="{}" cy="{}" r="{}" fill="{fill}"><title>{i}</title></circle>"#, f(p.0), f(-p.1), f(radius))
            .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

fn bounds(v: &[f64]) -> (f64, f64) {
    v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

// Fixed precision keeps output byte-stable; negative zero is normalized.
fn f(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".into()
    } else {
        s
    }
}
