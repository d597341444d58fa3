//! Value types shared by every geometry: vectors, 2×2 matrices, the geometry
//! selector and the comparison tolerance.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{GeometryError, Result};

/// A vector (or point) of the plane.
///
/// In the Galilean and Minkowski readings `x` is the time-like coordinate and
/// `y` the spatial one.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    /// Checked constructor; rejects NaN and infinities.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Vec2 { x, y })
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    /// Unchecked constructor for literals and internal arithmetic.
    pub const fn xy(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn scale(self, s: f64) -> Self {
        Vec2::xy(self.x * s, self.y * s)
    }

    /// Largest absolute coordinate.
    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    /// `x₁y₂ − y₁x₂`, the signed area of the parallelogram on `self` and `other`.
    pub fn wedge(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn approx_eq(self, other: Vec2, tol: Tolerance) -> bool {
        approx_eq(self.x, other.x, tol) && approx_eq(self.y, other.y, tol)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::xy(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::xy(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::xy(-self.x, -self.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// Which of the three implemented plane geometries is in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeometryKind {
    Euclidean,
    Galilean,
    Minkowski,
}

impl GeometryKind {
    pub const ALL: [GeometryKind; 3] = [
        GeometryKind::Euclidean,
        GeometryKind::Galilean,
        GeometryKind::Minkowski,
    ];

    /// The sign ε of the `y₁y₂` term in the inner product.
    pub const fn epsilon(self) -> f64 {
        match self {
            GeometryKind::Euclidean => 1.0,
            GeometryKind::Galilean => 0.0,
            GeometryKind::Minkowski => -1.0,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            GeometryKind::Euclidean => "euclidean",
            GeometryKind::Galilean => "galilean",
            GeometryKind::Minkowski => "minkowski",
        }
    }
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GeometryKind {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" => Ok(GeometryKind::Euclidean),
            "galilean" | "galileo" => Ok(GeometryKind::Galilean),
            "minkowski" => Ok(GeometryKind::Minkowski),
            other => Err(GeometryError::UnknownGeometry(other.to_string())),
        }
    }
}

/// Row-major 2×2 matrix acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::from_rows([1.0, 0.0], [0.0, 1.0]);

    pub const fn from_rows(r1: [f64; 2], r2: [f64; 2]) -> Self {
        Mat2 {
            a11: r1[0],
            a12: r1[1],
            a21: r2[0],
            a22: r2[1],
        }
    }

    /// Checked constructor; rejects non-finite entries.
    pub fn new(r1: [f64; 2], r2: [f64; 2]) -> Result<Self> {
        let m = Mat2::from_rows(r1, r2);
        if m.entries().iter().all(|v| v.is_finite()) {
            Ok(m)
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn mul_vec(&self, v: Vec2) -> Vec2 {
        Vec2::xy(
            self.a11 * v.x + self.a12 * v.y,
            self.a21 * v.x + self.a22 * v.y,
        )
    }

    /// Inverse, or `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        Some(Mat2::from_rows(
            [self.a22 / det, -self.a12 / det],
            [-self.a21 / det, self.a11 / det],
        ))
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Mat2, tol: Tolerance) -> bool {
        self.entries()
            .iter()
            .zip(other.entries())
            .all(|(&a, b)| approx_eq(a, b, tol))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::from_rows(
            [
                self.a11 * rhs.a11 + self.a12 * rhs.a21,
                self.a11 * rhs.a12 + self.a12 * rhs.a22,
            ],
            [
                self.a21 * rhs.a11 + self.a22 * rhs.a21,
                self.a21 * rhs.a12 + self.a22 * rhs.a22,
            ],
        )
    }
}

impl Mul<Vec2> for Mat2 {
    type Output = Vec2;
    fn mul(self, rhs: Vec2) -> Vec2 {
        self.mul_vec(rhs)
    }
}

/// Mixed relative/absolute comparison tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        rel: 1e-9,
        abs: 1e-12,
    };

    pub fn new(rel: f64, abs: f64) -> Result<Self> {
        if rel > 0.0 && abs > 0.0 && rel.is_finite() && abs.is_finite() {
            Ok(Tolerance { rel, abs })
        } else {
            Err(GeometryError::InvalidTolerance { rel, abs })
        }
    }

    /// Keeps the default absolute floor and replaces the relative part.
    pub fn with_rel(rel: f64) -> Result<Self> {
        Tolerance::new(rel, Tolerance::DEFAULT.abs)
    }

    /// Admissible error for quantities of magnitude `scale`.
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale.abs()
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// `|a − b| ≤ abs + rel·max(|a|, |b|)`.
pub fn approx_eq(a: f64, b: f64, tol: Tolerance) -> bool {
    (a - b).abs() <= tol.abs + tol.rel * a.abs().max(b.abs())
}

/// `|a| ≤ abs + rel·|scale|`; the zero test for a value computed from
/// quantities of magnitude `scale`.
pub fn approx_zero(a: f64, scale: f64, tol: Tolerance) -> bool {
    a.abs() <= tol.bound(scale)
}

/// Causal character of a nonzero Minkowski vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalClass {
    Spacelike,
    Timelike,
    Lightlike,
}

impl CausalClass {
    pub const fn name(self) -> &'static str {
        match self {
            CausalClass::Spacelike => "spacelike",
            CausalClass::Timelike => "timelike",
            CausalClass::Lightlike => "lightlike",
        }
    }
}

impl fmt::Display for CausalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approx_eq_examples() {
        let tol = Tolerance::default();
        assert!(approx_eq(1.0, 1.0, tol));
        assert!(approx_eq(1.0, 1.0 + 1e-15, tol));
        assert!(!approx_eq(1.0, 1.1, tol));
    }

    #[test]
    fn epsilon_mapping() {
        assert_eq!(GeometryKind::Euclidean.epsilon(), 1.0);
        assert_eq!(GeometryKind::Galilean.epsilon(), 0.0);
        assert_eq!(GeometryKind::Minkowski.epsilon(), -1.0);
        for k in GeometryKind::ALL {
            assert_eq!(k.epsilon().to_bits(), k.epsilon().to_bits());
        }
    }

    #[test]
    fn constructors_reject_non_finite() {
        assert!(Vec2::new(f64::NAN, 0.0).is_err());
        assert!(Vec2::new(0.0, f64::INFINITY).is_err());
        assert!(Vec2::new(1.0, 2.0).is_ok());
        assert!(Mat2::new([1.0, f64::NAN], [0.0, 1.0]).is_err());
        assert!(Tolerance::new(0.0, 1e-12).is_err());
        assert!(Tolerance::new(1e-9, -1.0).is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("Minkowski".parse::<GeometryKind>().unwrap(), GeometryKind::Minkowski);
        assert!("spherical".parse::<GeometryKind>().is_err());
    }

    #[test]
    fn matrix_inverse() {
        let m = Mat2::from_rows([2.0, 1.0], [1.0, 1.0]);
        let inv = m.inverse().unwrap();
        assert!((m * inv).approx_eq(&Mat2::IDENTITY, Tolerance::default()));
        assert!(Mat2::from_rows([1.0, 2.0], [2.0, 4.0]).inverse().is_none());
    }

    proptest::proptest! {
        #[test]
        fn approx_eq_reflexive_symmetric(a in -1e6f64..1e6, b in -1e6f64..1e6) {
            let tol = Tolerance::default();
            proptest::prop_assert!(approx_eq(a, a, tol));
            proptest::prop_assert_eq!(approx_eq(a, b, tol), approx_eq(b, a, tol));
        }
    }
}
