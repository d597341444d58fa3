//! Lines, circles and polygons, and the properties the isometry groups keep.

use std::f64::consts::TAU;

use crate::error::{GeometryError, Result};
use crate::metric::{distance, interval};
use crate::transforms::{apply, Isometry};
use crate::types::{approx_eq, GeometryKind, Tolerance, Vec2};

/// Rapidity window sampled along each Minkowski circle branch.
pub const HYPERBOLA_WINDOW: f64 = 2.0;

/// A line of the plane. Vertical lines get their own variant because they
/// have no slope, and because Galilean circles are made of them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Line {
    /// `y = slope·x + intercept`.
    Sloped { slope: f64, intercept: f64 },
    /// `x = x0`.
    Vertical { x0: f64 },
}

impl Line {
    pub fn sloped(slope: f64, intercept: f64) -> Result<Line> {
        if slope.is_finite() && intercept.is_finite() {
            Ok(Line::Sloped { slope, intercept })
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    pub fn vertical(x0: f64) -> Result<Line> {
        if x0.is_finite() {
            Ok(Line::Vertical { x0 })
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    /// The line through `a` and `b`.
    pub fn through(a: Vec2, b: Vec2, tol: Tolerance) -> Result<Line> {
        line_from(a, b - a, tol)
    }

    pub fn slope(&self) -> Result<f64> {
        match *self {
            Line::Sloped { slope, .. } => Ok(slope),
            Line::Vertical { .. } => Err(GeometryError::VerticalLine),
        }
    }

    /// A point of the line and a direction vector along it.
    pub fn point_and_direction(&self) -> (Vec2, Vec2) {
        match *self {
            Line::Sloped { slope, intercept } => (Vec2::xy(0.0, intercept), Vec2::xy(1.0, slope)),
            Line::Vertical { x0 } => (Vec2::xy(x0, 0.0), Vec2::xy(0.0, 1.0)),
        }
    }

    pub fn contains(&self, p: Vec2, tol: Tolerance) -> bool {
        match *self {
            Line::Sloped { slope, intercept } => {
                let y = slope * p.x + intercept;
                approx_eq(p.y, y, tol)
            }
            Line::Vertical { x0 } => approx_eq(p.x, x0, tol),
        }
    }
}

fn line_from(p: Vec2, dir: Vec2, tol: Tolerance) -> Result<Line> {
    let len = dir.max_abs();
    if len <= tol.bound(p.max_abs()) {
        return Err(GeometryError::CoincidentPoints);
    }
    if dir.x.abs() <= tol.bound(len) {
        return Ok(Line::Vertical { x0: p.x });
    }
    let slope = dir.y / dir.x;
    Ok(Line::Sloped {
        slope,
        intercept: p.y - slope * p.x,
    })
}

/// Galilean slope difference `λ₂ − λ₁` of two non-vertical lines.
pub fn angle_between_lines(l1: &Line, l2: &Line) -> Result<f64> {
    Ok(crate::metric::angle_lines_galilean(l1.slope()?, l2.slope()?).value())
}

/// Image of a line under an isometry. Any of the three groups maps lines to
/// lines; a Galilean boost by `u` sends slope `λ` to `λ − u` and keeps
/// vertical lines vertical.
pub fn transform_line(g: &Isometry, l: &Line) -> Line {
    let (p, dir) = l.point_and_direction();
    let p2 = apply(g, p);
    let dir2 = g.linear * dir;
    let tol = Tolerance::default();
    if dir2.x.abs() <= tol.bound(dir2.max_abs()) {
        return Line::Vertical { x0: p2.x };
    }
    let m = &g.linear;
    let slope = match *l {
        // (a21 + a22·λ) / (a11 + a12·λ); a shear gives λ − u exactly
        Line::Sloped { slope, .. } => (m.a21 + m.a22 * slope) / (m.a11 + m.a12 * slope),
        Line::Vertical { .. } => dir2.y / dir2.x,
    };
    Line::Sloped {
        slope,
        intercept: p2.y - slope * p2.x,
    }
}

pub fn parallel(l1: &Line, l2: &Line, tol: Tolerance) -> bool {
    match (l1, l2) {
        (Line::Vertical { .. }, Line::Vertical { .. }) => true,
        (Line::Sloped { slope: a, .. }, Line::Sloped { slope: b, .. }) => approx_eq(*a, *b, tol),
        _ => false,
    }
}

/// Whether `c` lies on the line through `a` and `b` (or all three coincide).
pub fn collinear(a: Vec2, b: Vec2, c: Vec2, tol: Tolerance) -> bool {
    let (ab, ac) = (b - a, c - a);
    let scale = ab.x.hypot(ab.y) * ac.x.hypot(ac.y);
    ab.wedge(ac).abs() <= tol.bound(scale)
}

/// Ratio `AB / CD` of directed lengths of two segments on a common line.
pub fn collinear_ratio(a: Vec2, b: Vec2, c: Vec2, d: Vec2, tol: Tolerance) -> Result<f64> {
    let scale = [a, b, c, d].iter().map(|p| p.max_abs()).fold(0.0, f64::max);
    let dir = d - c;
    if dir.max_abs() <= tol.bound(scale) {
        return Err(GeometryError::DegenerateDenominator);
    }
    let len = dir.x.hypot(dir.y);
    // distance of A and B from the line CD
    for p in [a, b] {
        if (p - c).wedge(dir).abs() / len > tol.bound(scale) {
            return Err(GeometryError::NotCollinear);
        }
    }
    let ab = b - a;
    Ok((ab.x * dir.x + ab.y * dir.y) / (len * len))
}

/// Set of points at constant absolute distance `radius` from `center`.
///
/// Euclidean: the usual circle. Galilean: the two vertical lines
/// `x = center.x ± radius`. Minkowski: the four branches of
/// `|Δx² − Δy²| = radius²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub kind: GeometryKind,
    pub center: Vec2,
    pub radius: f64,
}

impl Circle {
    pub fn new(kind: GeometryKind, center: Vec2, radius: f64) -> Result<Circle> {
        if !(radius >= 0.0 && radius.is_finite()) {
            return Err(GeometryError::DegenerateRadius(radius));
        }
        if !center.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        Ok(Circle {
            kind,
            center,
            radius,
        })
    }

    /// Whether `p` is at absolute distance `radius` from the center.
    pub fn contains(&self, p: Vec2, tol: Tolerance) -> bool {
        match self.kind {
            GeometryKind::Minkowski => {
                let q = interval(p - self.center).abs();
                let r2 = self.radius * self.radius;
                let d = p - self.center;
                (q - r2).abs() <= tol.bound(d.x * d.x + d.y * d.y + r2)
            }
            kind => approx_eq(distance(kind, self.center, p).abs(), self.radius, tol),
        }
    }
}

/// Samples of the circle grouped by connected branch: one for Euclidean
/// circles, two vertical lines for Galilean ones, four hyperbola arcs for
/// Minkowski ones. `n` points in total.
pub fn circle_branches(c: &Circle, n: usize) -> Result<Vec<Vec<Vec2>>> {
    if n < 2 {
        return Err(GeometryError::TooFewSamples { min: 2, got: n });
    }
    if c.radius <= 0.0 && c.kind != GeometryKind::Euclidean {
        return Err(GeometryError::DegenerateRadius(c.radius));
    }
    let (cx, cy, r) = (c.center.x, c.center.y, c.radius);
    let branches = match c.kind {
        GeometryKind::Euclidean => {
            let pts = (0..n)
                .map(|i| {
                    let (s, co) = (TAU * i as f64 / n as f64).sin_cos();
                    Vec2::xy(cx + r * co, cy + r * s)
                })
                .collect();
            vec![pts]
        }
        GeometryKind::Galilean => split(n, 2)
            .into_iter()
            .zip([1.0, -1.0])
            .map(|(k, side)| {
                grid(k, -r, r)
                    .map(|t| Vec2::xy(cx + side * r, cy + t))
                    .collect()
            })
            .collect(),
        GeometryKind::Minkowski => {
            type Branch = fn(f64, f64) -> (f64, f64);
            let shapes: [Branch; 4] = [
                |ch, sh| (ch, sh),
                |ch, sh| (-ch, sh),
                |ch, sh| (sh, ch),
                |ch, sh| (sh, -ch),
            ];
            split(n, 4)
                .into_iter()
                .zip(shapes)
                .map(|(k, shape)| {
                    grid(k, -HYPERBOLA_WINDOW, HYPERBOLA_WINDOW)
                        .map(|t| {
                            let (dx, dy) = shape(t.cosh(), t.sinh());
                            Vec2::xy(cx + r * dx, cy + r * dy)
                        })
                        .collect()
                })
                .collect()
        }
    };
    Ok(branches)
}

/// `n ≥ 2` points of the circle; see [`circle_branches`] for the layout.
pub fn circle_locus(c: &Circle, n: usize) -> Result<Vec<Vec2>> {
    Ok(circle_branches(c, n)?.into_iter().flatten().collect())
}

/// `n` split as evenly as possible into `parts`, earlier parts first.
fn split(n: usize, parts: usize) -> Vec<usize> {
    (0..parts).map(|i| n / parts + usize::from(i < n % parts)).collect()
}

/// `k` evenly spaced values covering `[lo, hi]`; a single value sits in the middle.
fn grid(k: usize, lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    (0..k).map(move |i| {
        if k == 1 {
            0.5 * (lo + hi)
        } else {
            lo + (hi - lo) * i as f64 / (k - 1) as f64
        }
    })
}

/// Every point of the mid-parallel `x = center.x` is a center of a Galilean
/// circle.
pub fn is_center(c: &Circle, p: Vec2, tol: Tolerance) -> Result<bool> {
    if c.kind != GeometryKind::Galilean {
        return Err(GeometryError::WrongGeometry {
            expected: GeometryKind::Galilean,
            got: c.kind,
        });
    }
    Ok(approx_eq(p.x, c.center.x, tol))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Vec2>,
}

impl Polygon {
    pub fn new(vertices: Vec<Vec2>) -> Result<Polygon> {
        if vertices.len() < 3 {
            return Err(GeometryError::TooFewVertices(vertices.len()));
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn transformed(&self, g: &Isometry) -> Polygon {
        Polygon {
            vertices: self.vertices.iter().map(|&p| apply(g, p)).collect(),
        }
    }

    /// Shoelace sum taken relative to the first vertex, positive for
    /// counter-clockwise order.
    fn signed_area(&self) -> f64 {
        let o = self.vertices[0];
        let rel: Vec<Vec2> = self.vertices.iter().map(|&p| p - o).collect();
        0.5 * rel
            .windows(2)
            .map(|w| w[0].wedge(w[1]))
            .sum::<f64>()
    }
}

pub fn area(p: &Polygon) -> f64 {
    p.signed_area().abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{galilean_boost, lorentz_boost_rapidity, rotation, Rapidity};
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn v(x: f64, y: f64) -> Vec2 {
        Vec2::xy(x, y)
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn euclidean_locus_starts_at_angle_zero() {
        let c = Circle::new(GeometryKind::Euclidean, Vec2::ZERO, 1.0).unwrap();
        let pts = circle_locus(&c, 4).unwrap();
        assert_eq!(pts.len(), 4);
        assert_eq!(pts[0], v(1.0, 0.0));
        assert!(pts.iter().all(|&p| c.contains(p, tol())));
    }

    #[test]
    fn galilean_locus_is_two_vertical_lines() {
        let c = Circle::new(GeometryKind::Galilean, Vec2::ZERO, 2.0).unwrap();
        let pts = circle_locus(&c, 9).unwrap();
        assert_eq!(pts.len(), 9);
        assert!(pts.iter().all(|p| p.x == 2.0 || p.x == -2.0));
        assert!(pts.iter().all(|p| p.y >= -2.0 && p.y <= 2.0));
        assert_eq!(circle_branches(&c, 9).unwrap()[0].len(), 5);
    }

    #[test]
    fn minkowski_locus_on_hyperbolas() {
        let c = Circle::new(GeometryKind::Minkowski, Vec2::ZERO, 1.0).unwrap();
        let pts = circle_locus(&c, 40).unwrap();
        assert_eq!(pts.len(), 40);
        for p in pts {
            assert!(((p.x * p.x - p.y * p.y).abs() - 1.0).abs() < 1e-12 * (1.0 + p.x * p.x));
        }
        assert_eq!(circle_branches(&c, 2).unwrap().iter().filter(|b| b.is_empty()).count(), 2);
    }

    #[test]
    fn locus_errors() {
        let c = Circle::new(GeometryKind::Galilean, Vec2::ZERO, 0.0).unwrap();
        assert_eq!(circle_locus(&c, 8), Err(GeometryError::DegenerateRadius(0.0)));
        let c = Circle::new(GeometryKind::Euclidean, Vec2::ZERO, 0.0).unwrap();
        assert_eq!(circle_locus(&c, 3).unwrap(), vec![Vec2::ZERO; 3]);
        assert!(matches!(circle_locus(&c, 1), Err(GeometryError::TooFewSamples { .. })));
        assert!(Circle::new(GeometryKind::Euclidean, Vec2::ZERO, -1.0).is_err());
    }

    #[test]
    fn galilean_centers() {
        let c = Circle::new(GeometryKind::Galilean, Vec2::ZERO, 2.0).unwrap();
        assert!(is_center(&c, v(0.0, 17.0), tol()).unwrap());
        assert!(!is_center(&c, v(0.5, 0.0), tol()).unwrap());
        assert!(is_center(&c, c.center, tol()).unwrap());
        let e = Circle::new(GeometryKind::Euclidean, Vec2::ZERO, 2.0).unwrap();
        assert!(matches!(is_center(&e, Vec2::ZERO, tol()), Err(GeometryError::WrongGeometry { .. })));
        // every center sees the locus at absolute distance r
        for y in [-5.0, 0.0, 3.5] {
            let moved = Circle { center: v(0.0, y), ..c };
            assert!(circle_locus(&c, 10).unwrap().iter().all(|&p| moved.contains(p, tol())));
        }
    }

    #[test]
    fn line_images() {
        let l = Line::sloped(3.0, 1.0).unwrap();
        assert_eq!(transform_line(&galilean_boost(1.0), &l).slope().unwrap(), 2.0);
        let id = crate::transforms::Isometry::identity(GeometryKind::Euclidean);
        assert_eq!(transform_line(&id, &l), l);
        let x_axis = Line::sloped(0.0, 0.0).unwrap();
        match transform_line(&rotation(FRAC_PI_2), &x_axis) {
            Line::Vertical { x0 } => assert!(x0.abs() < 1e-15),
            other => panic!("expected vertical, got {other:?}"),
        }
        let vert = Line::vertical(2.0).unwrap();
        assert_eq!(transform_line(&galilean_boost(4.0), &vert), vert);
        assert_eq!(vert.slope(), Err(GeometryError::VerticalLine));
    }

    #[test]
    fn line_through_points() {
        assert_eq!(
            Line::through(v(0.0, 1.0), v(2.0, 5.0), tol()).unwrap(),
            Line::Sloped { slope: 2.0, intercept: 1.0 }
        );
        assert_eq!(Line::through(v(3.0, 1.0), v(3.0, 5.0), tol()).unwrap(), Line::Vertical { x0: 3.0 });
        assert_eq!(Line::through(v(3.0, 1.0), v(3.0, 1.0), tol()), Err(GeometryError::CoincidentPoints));
    }

    #[test]
    fn parallel_examples() {
        let (a, b) = (Line::vertical(0.0).unwrap(), Line::vertical(3.0).unwrap());
        assert!(parallel(&a, &b, tol()));
        let s1 = Line::sloped(2.0, 0.0).unwrap();
        let s2 = Line::sloped(2.0 + 1e-15, 4.0).unwrap();
        assert!(parallel(&s1, &s2, tol()));
        assert!(!parallel(&s1, &a, tol()));
    }

    #[test]
    fn ratio_examples() {
        let o = Vec2::ZERO;
        assert_eq!(collinear_ratio(o, v(2.0, 0.0), o, v(1.0, 0.0), tol()).unwrap(), 2.0);
        assert_eq!(collinear_ratio(o, o, o, v(1.0, 0.0), tol()).unwrap(), 0.0);
        assert_eq!(collinear_ratio(v(3.0, 0.0), v(1.0, 0.0), o, v(1.0, 0.0), tol()).unwrap(), -2.0);
        assert_eq!(
            collinear_ratio(o, v(1.0, 1.0), o, v(1.0, 0.0), tol()),
            Err(GeometryError::NotCollinear)
        );
        assert_eq!(
            collinear_ratio(o, v(1.0, 0.0), v(2.0, 0.0), v(2.0, 0.0), tol()),
            Err(GeometryError::DegenerateDenominator)
        );
    }

    #[test]
    fn area_examples() {
        let tri = Polygon::new(vec![v(0.0, 0.0), v(1.0, 0.0), v(0.0, 1.0)]).unwrap();
        assert_eq!(area(&tri), 0.5);
        let flat = Polygon::new(vec![v(0.0, 0.0), v(1.0, 1.0), v(2.0, 2.0)]).unwrap();
        assert_eq!(area(&flat), 0.0);
        let cw = Polygon::new(vec![v(0.0, 0.0), v(0.0, 2.0), v(2.0, 2.0), v(2.0, 0.0)]).unwrap();
        assert_eq!(area(&cw), 4.0);
        assert_eq!(Polygon::new(vec![v(0.0, 0.0); 2]), Err(GeometryError::TooFewVertices(2)));
    }

    fn vec2() -> impl Strategy<Value = Vec2> {
        (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(x, y)| Vec2::xy(x, y))
    }

    fn any_isometry() -> impl Strategy<Value = Isometry> {
        (0usize..3, -2.0f64..2.0, vec2()).prop_map(|(k, p, t)| {
            match k {
                0 => rotation(p),
                1 => galilean_boost(p),
                _ => lorentz_boost_rapidity(Rapidity(p)),
            }
            .then_translate(t)
        })
    }

    proptest! {
        #[test]
        fn collinearity_preserved(g in any_isometry(), a in vec2(), b in vec2(), s in -3.0f64..3.0) {
            let c = a + (b - a).scale(s);
            let (ga, gb, gc) = (apply(&g, a), apply(&g, b), apply(&g, c));
            let loose = Tolerance::new(1e-9, 1e-9).unwrap();
            prop_assert!(collinear(ga, gb, gc, loose));
        }

        #[test]
        fn galilean_parallelism_and_angle(u in -5.0f64..5.0, t in vec2(), l1 in -5.0f64..5.0,
                                          l2 in -5.0f64..5.0, b1 in -5.0f64..5.0, b2 in -5.0f64..5.0) {
            let g = galilean_boost(u).then_translate(t);
            let (a, b) = (Line::sloped(l1, b1).unwrap(), Line::sloped(l1, b2).unwrap());
            prop_assert!(parallel(&transform_line(&g, &a), &transform_line(&g, &b), tol()));
            let c = Line::sloped(l2, b2).unwrap();
            let before = angle_between_lines(&a, &c).unwrap();
            let after = angle_between_lines(&transform_line(&g, &a), &transform_line(&g, &c)).unwrap();
            prop_assert!((before - after).abs() <= 1e-12 * (1.0 + u.abs()));
        }

        #[test]
        fn ratio_preserved_by_galilean_isometries(u in -5.0f64..5.0, t in vec2(), p in vec2(),
                                                  dir in vec2(), s in prop::array::uniform4(-3.0f64..3.0)) {
            prop_assume!(dir.max_abs() > 0.1 && (s[3] - s[2]).abs() > 0.1);
            let pt = |k: f64| p + dir.scale(k);
            let (a, b, c, d) = (pt(s[0]), pt(s[1]), pt(s[2]), pt(s[3]));
            let r = collinear_ratio(a, b, c, d, tol()).unwrap();
            let g = galilean_boost(u).then_translate(t);
            let img = |q| apply(&g, q);
            let r2 = collinear_ratio(img(a), img(b), img(c), img(d), tol()).unwrap();
            prop_assert!((r - r2).abs() <= 1e-9 * (1.0 + r.abs()));
        }

        #[test]
        fn unimodular_maps_keep_area(g in any_isometry(), pts in prop::collection::vec(vec2(), 3..7)) {
            let poly = Polygon::new(pts).unwrap();
            let a = area(&poly);
            let a2 = area(&poly.transformed(&g));
            let scale = poly.vertices().iter().map(|p| p.max_abs()).fold(1.0, f64::max);
            prop_assert!((a - a2).abs() <= 1e-9 * scale * scale);
        }
    }
}
