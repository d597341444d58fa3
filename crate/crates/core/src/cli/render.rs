use std::fmt::Write;

use crate::klein::{CayleyKleinTable, MeasureKind};
use crate::types::Vec2;

/// Shortest decimal that parses back to `v`; exponent form outside
/// `[1e-5, 1e16)`, and zero without a sign.
pub(super) fn num(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 {
        "0".to_string()
    } else if (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub(super) fn point(p: Vec2) -> String {
    format!("{},{}", num(p.x), num(p.y))
}

/// `x,y` header then one point per LF-terminated row.
pub(super) fn csv(points: impl Iterator<Item = Vec2>) -> String {
    let mut s = String::from("x,y\n");
    for p in points {
        s.push_str(&point(p));
        s.push('\n');
    }
    s
}

/// Standalone SVG 1.1 document with one stroke-only polyline per branch.
/// The y axis points up; the view box is the bounding box grown by 5% on
/// every side.
pub(super) fn svg(branches: &[Vec<Vec2>], closed: bool) -> String {
    let mut lo = Vec2::xy(f64::INFINITY, f64::INFINITY);
    let mut hi = Vec2::xy(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in branches.iter().flatten() {
        lo = Vec2::xy(lo.x.min(p.x), lo.y.min(p.y));
        hi = Vec2::xy(hi.x.max(p.x), hi.y.max(p.y));
    }
    if !lo.x.is_finite() {
        lo = Vec2::ZERO;
        hi = Vec2::ZERO;
    }
    // a flat extent would give a zero-size view box
    let w = if hi.x > lo.x { hi.x - lo.x } else { 1.0 };
    let h = if hi.y > lo.y { hi.y - lo.y } else { 1.0 };
    let (px, py) = (0.05 * w, 0.05 * h);

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        num(lo.x - px),
        num(-hi.y - py),
        num(w + 2.0 * px),
        num(h + 2.0 * py)
    );
    for branch in branches.iter().filter(|b| !b.is_empty()) {
        s.push_str("  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" points=\"");
        let mut first = true;
        let closing = if closed { branch.first() } else { None };
        for p in branch.iter().chain(closing) {
            if !first {
                s.push(' ');
            }
            first = false;
            s.push_str(&point(Vec2::xy(p.x, -p.y)));
        }
        s.push_str("\"/>\n");
    }
    s.push_str("</svg>\n");
    s
}

/// Plain-text grid: rows by angle measure, columns by length measure.
pub(super) fn table(t: &CayleyKleinTable) -> String {
    let corner = "";
    let headers: Vec<String> = MeasureKind::ALL.iter().map(|m| format!("length: {m}")).collect();
    let rows: Vec<(String, Vec<&str>)> = MeasureKind::ALL
        .iter()
        .map(|&angle| {
            let names = MeasureKind::ALL
                .iter()
                .map(|&length| t.cell(angle, length).english)
                .collect();
            (format!("angle: {angle}"), names)
        })
        .collect();
    let first = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..3)
        .map(|c| {
            rows.iter()
                .map(|r| r.1[c].len())
                .chain(std::iter::once(headers[c].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut s = String::new();
    let _ = write!(s, "{corner:first$}");
    for (hd, w) in headers.iter().zip(&widths) {
        let _ = write!(s, " | {hd:w$}");
    }
    s = s.trim_end().to_string();
    s.push('\n');
    for (label, names) in &rows {
        let mut line = format!("{label:first$}");
        for (n, w) in names.iter().zip(&widths) {
            let _ = write!(line, " | {n:w$}");
        }
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}
