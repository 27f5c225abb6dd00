//! Minimal SVG 1.1 writer for closed curves in the complex plane.

use std::fmt::Write as _;

use num_complex::Complex64;

pub const SIZE: f64 = 800.0;
pub const MARGIN: f64 = 0.05;

/// Maps plane coordinates to the canvas with one scale for both axes, so
/// shapes keep their proportions. The bounding box always contains 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    scale: f64,
    cx: f64,
    cy: f64,
}

impl Frame {
    pub fn fit(points: &[Complex64]) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for p in points {
            x0 = x0.min(p.re);
            x1 = x1.max(p.re);
            y0 = y0.min(p.im);
            y1 = y1.max(p.im);
        }
        let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        Self {
            scale: SIZE * (1.0 - 2.0 * MARGIN) / span,
            cx: 0.5 * (x0 + x1),
            cy: 0.5 * (y0 + y1),
        }
    }

    /// Canvas coordinates; `y` grows downward.
    pub fn map(&self, w: Complex64) -> (f64, f64) {
        (
            SIZE / 2.0 + (w.re - self.cx) * self.scale,
            SIZE / 2.0 - (w.im - self.cy) * self.scale,
        )
    }
}

/// One 800 x 800 document: axes through `w = 0` and the curve as a polyline.
pub fn curve_document(points: &[Complex64], title: &str) -> String {
    let frame = Frame::fit(points);
    let (ox, oy) = frame.map(Complex64::new(0.0, 0.0));
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"<g stroke="#888" stroke-width="1"><line x1="0" y1="{oy:.3}" x2="{SIZE}" y2="{oy:.3}"/><line x1="{ox:.3}" y1="0" x2="{ox:.3}" y2="{SIZE}"/></g>"##
    );
    let mut pts = String::with_capacity(points.len() * 20);
    for (i, &w) in points.iter().enumerate() {
        let (x, y) = frame.map(w);
        if i > 0 {
            pts.push(' ');
        }
        let _ = write!(pts, "{x:.3},{y:.3}");
    }
    let _ = writeln!(out, r#"<polyline fill="none" stroke="black" stroke-width="1.5" points="{pts}"/>"#);
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Reads back the polyline of a document written by [`curve_document`].
pub fn polyline_points(doc: &str) -> Option<Vec<(f64, f64)>> {
    let start = doc.find("<polyline")?;
    let attr = &doc[start..];
    let from = attr.find("points=\"")? + "points=\"".len();
    let to = from + attr[from..].find('"')?;
    attr[from..to]
        .split(' ')
        .map(|pair| {
            let (x, y) = pair.split_once(',')?;
            Some((x.parse().ok()?, y.parse().ok()?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_keeps_margin_and_origin() {
        let pts = [Complex64::new(1.0, -1.0), Complex64::new(3.0, 2.0)];
        let f = Frame::fit(&pts);
        let all = [pts[0], pts[1], Complex64::new(0.0, 0.0)];
        let lo = SIZE * MARGIN - 1e-9;
        let hi = SIZE * (1.0 - MARGIN) + 1e-9;
        for w in all {
            let (x, y) = f.map(w);
            assert!((lo..=hi).contains(&x) && (lo..=hi).contains(&y), "{w}: {x},{y}");
        }
        // The longer side (x from 0 to 3) fills the frame exactly.
        assert!((f.map(Complex64::new(3.0, 0.0)).0 - f.map(Complex64::new(0.0, 0.0)).0 - SIZE * 0.9).abs() < 1e-9);
    }

    #[test]
    fn document_shape() {
        let pts: Vec<Complex64> = (0..5).map(|k| Complex64::from_polar(1.0, k as f64)).collect();
        let doc = curve_document(&pts, "a < b");
        assert!(doc.contains(r#"width="800" height="800""#));
        assert!(doc.contains("a &lt; b"));
        assert_eq!(polyline_points(&doc).unwrap().len(), 5);
        assert_eq!(doc.matches("<line").count(), 2);
    }
}
