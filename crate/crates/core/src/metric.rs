//! Inner products, norms, distances and angles of the three geometries.
//!
//! Everything derives from the signed inner product `x₁x₂ + ε·y₁y₂`, where
//! `ε` is `+1` (Euclidean), `0` (Galilean) or `−1` (Minkowski).

use crate::error::{GeometryError, Result};
use crate::types::{approx_eq, CausalClass, GeometryKind, Tolerance, Vec2};

/// An angle value. Radians in `[0, π]` for Euclidean vectors, a nonnegative
/// rapidity for Minkowski vectors, a signed slope difference for Galilean lines.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(pub f64);

impl Angle {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// `x₁x₂ + ε·y₁y₂`.
pub fn inner(kind: GeometryKind, a: Vec2, b: Vec2) -> f64 {
    a.x * b.x + kind.epsilon() * (a.y * b.y)
}

/// `x² − y²` evaluated as `(x − y)(x + y)`.
pub(crate) fn interval(v: Vec2) -> f64 {
    (v.x - v.y) * (v.x + v.y)
}

pub fn norm(kind: GeometryKind, a: Vec2) -> f64 {
    match kind {
        GeometryKind::Euclidean => a.x.hypot(a.y),
        GeometryKind::Galilean => a.x.abs(),
        GeometryKind::Minkowski => match classify(a, Tolerance::default()) {
            Err(_) | Ok(CausalClass::Lightlike) => 0.0,
            Ok(_) => interval(a).abs().sqrt(),
        },
    }
}

/// Causal class of a nonzero vector. The light cone is a band of half-width
/// `abs + rel·(x² + y²)` around `x² = y²`.
pub fn classify(a: Vec2, tol: Tolerance) -> Result<CausalClass> {
    if a.x == 0.0 && a.y == 0.0 {
        return Err(GeometryError::ZeroVector);
    }
    let q = a.x * a.x - a.y * a.y;
    let band = tol.abs + tol.rel * (a.x * a.x + a.y * a.y);
    Ok(if q.abs() <= band {
        CausalClass::Lightlike
    } else if q > 0.0 {
        CausalClass::Spacelike
    } else {
        CausalClass::Timelike
    })
}

/// Distance from `a` to `b`.
///
/// The Galilean value is signed: `x_b − x_a`, so swapping the points flips
/// the sign. Use [`abs_distance`] for a nonnegative value.
pub fn distance(kind: GeometryKind, a: Vec2, b: Vec2) -> f64 {
    let d = b - a;
    match kind {
        GeometryKind::Euclidean => d.x.hypot(d.y),
        GeometryKind::Galilean => b.x - a.x,
        GeometryKind::Minkowski => interval(d).abs().sqrt(),
    }
}

pub fn abs_distance(kind: GeometryKind, a: Vec2, b: Vec2) -> f64 {
    distance(kind, a, b).abs()
}

/// Galilean special distance `y_b − y_a`, defined only when the ordinary
/// distance vanishes.
pub fn special_distance(a: Vec2, b: Vec2, tol: Tolerance) -> Result<f64> {
    if !approx_eq(a.x, b.x, tol) {
        return Err(GeometryError::NotOnVerticalLine { dx: b.x - a.x });
    }
    Ok(b.y - a.y)
}

/// Galilean points coincide only when both the distance and the special
/// distance vanish; the other geometries compare coordinates.
pub fn points_coincide(kind: GeometryKind, a: Vec2, b: Vec2, tol: Tolerance) -> bool {
    match kind {
        GeometryKind::Galilean => match special_distance(a, b, tol) {
            Ok(_) => approx_eq(a.y, b.y, tol),
            Err(_) => false,
        },
        _ => a.approx_eq(b, tol),
    }
}

/// Angle between two vectors.
///
/// Euclidean: `arccos(a·b / ‖a‖‖b‖)` with the ratio clamped to `[−1, 1]`.
/// Minkowski: `arccosh(|a·b| / ‖a‖‖b‖)` for two vectors of the same causal
/// class, evaluated as `asinh(|a∧b| / ‖a‖‖b‖)`. The two agree because
/// `(a·b)² − (a∧b)² = (x₁² − y₁²)(x₂² − y₂²)`, and the `asinh` form keeps
/// full precision for small angles where `arccosh` loses half the digits.
pub fn angle_vectors(kind: GeometryKind, a: Vec2, b: Vec2, tol: Tolerance) -> Result<Angle> {
    match kind {
        GeometryKind::Euclidean => {
            let na = norm(kind, a);
            let nb = norm(kind, b);
            if na == 0.0 || nb == 0.0 {
                return Err(GeometryError::DegenerateVector);
            }
            let ratio = (inner(kind, a, b) / (na * nb)).clamp(-1.0, 1.0);
            Ok(Angle(ratio.acos()))
        }
        GeometryKind::Minkowski => {
            let ca = classify(a, tol).map_err(|_| GeometryError::DegenerateVector)?;
            let cb = classify(b, tol).map_err(|_| GeometryError::DegenerateVector)?;
            if ca == CausalClass::Lightlike || cb == CausalClass::Lightlike {
                return Err(GeometryError::DegenerateVector);
            }
            if ca != cb {
                return Err(GeometryError::MixedCausalClass(ca, cb));
            }
            let scale = (interval(a) * interval(b)).sqrt();
            Ok(Angle((a.wedge(b).abs() / scale).asinh()))
        }
        GeometryKind::Galilean => Err(GeometryError::UnsupportedGeometry(kind)),
    }
}

/// Galilean angle between lines of slopes `lambda1` and `lambda2`: `λ₂ − λ₁`.
pub fn angle_lines_galilean(lambda1: f64, lambda2: f64) -> Angle {
    Angle(lambda2 - lambda1)
}

/// `⟨a, b⟩ ≈ 0`, with the zero test scaled by the operands' magnitudes.
pub fn perpendicular(kind: GeometryKind, a: Vec2, b: Vec2, tol: Tolerance) -> bool {
    let scale = a.x.abs() * b.x.abs() + kind.epsilon().abs() * a.y.abs() * b.y.abs();
    inner(kind, a, b).abs() <= tol.bound(scale)
}
