//! Isometry groups of the three geometries.
//!
//! Each isometry is an affine map `p ↦ L·p + t` whose linear part `L` is a
//! rotation (Euclidean), a shear (Galilean) or a hyperbolic rotation
//! (Minkowski). The linear parts preserve the quadratic form `x² + ε·y²`.
//!
//! The velocity form of a Lorentz boost has off-diagonal entries `−γu`, while
//! the hyperbolic form has `+sinh θ`. The two describe the same matrix when
//! `θ = −artanh(u)`.

use crate::error::{GeometryError, Result};
use crate::types::{approx_eq, GeometryKind, Mat2, Tolerance, Vec2};

/// Hyperbolic angle of a Lorentz boost.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Rapidity(pub f64);

impl Rapidity {
    /// Rapidity of the boost with velocity `u` in the velocity form.
    pub fn from_velocity(u: f64) -> Result<Self> {
        check_subluminal(u)?;
        Ok(Rapidity(-u.atanh()))
    }

    /// Velocity `u = −tanh θ` of the matching velocity-form boost.
    pub fn velocity(self) -> f64 {
        -self.0.tanh()
    }
}

fn check_subluminal(u: f64) -> Result<()> {
    if u.is_finite() && u.abs() < 1.0 {
        Ok(())
    } else {
        Err(GeometryError::SuperluminalVelocity(u.abs()))
    }
}

/// An element of the isometry group of one geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    pub linear: Mat2,
    pub translation: Vec2,
    pub kind: GeometryKind,
}

impl Isometry {
    pub fn identity(kind: GeometryKind) -> Self {
        Isometry {
            linear: Mat2::IDENTITY,
            translation: Vec2::ZERO,
            kind,
        }
    }

    /// Applies `self`, then translates by `t`.
    pub fn then_translate(self, t: Vec2) -> Self {
        Isometry {
            translation: self.translation + t,
            ..self
        }
    }

    pub fn apply(&self, p: Vec2) -> Vec2 {
        apply(self, p)
    }

    /// The group parameter read back off the linear part: the rotation angle,
    /// the Galilean velocity `u`, or the rapidity `θ`.
    pub fn parameter(&self) -> f64 {
        let m = &self.linear;
        match self.kind {
            GeometryKind::Euclidean => m.a21.atan2(m.a11),
            GeometryKind::Galilean => -m.a21,
            GeometryKind::Minkowski => m.a21.asinh(),
        }
    }

    /// Whether the linear part is unimodular and preserves `x² + ε·y²` on a
    /// fixed set of probe vectors.
    pub fn is_valid(&self, tol: Tolerance) -> bool {
        const PROBES: [Vec2; 4] = [
            Vec2::xy(1.0, 0.0),
            Vec2::xy(0.0, 1.0),
            Vec2::xy(1.0, 1.0),
            Vec2::xy(2.0, -3.0),
        ];
        let kind = self.kind;
        let scale = self
            .linear
            .entries()
            .iter()
            .map(|e| e * e)
            .sum::<f64>()
            .max(1.0);
        approx_eq(self.linear.det(), 1.0, tol)
            && PROBES.iter().all(|&v| {
                let q = invariant_form(kind, v);
                let q2 = invariant_form(kind, self.linear * v);
                (q - q2).abs() <= tol.bound(scale * (1.0 + q.abs()))
            })
    }

    pub fn approx_eq(&self, other: &Isometry, tol: Tolerance) -> bool {
        self.kind == other.kind
            && self.linear.approx_eq(&other.linear, tol)
            && self.translation.approx_eq(other.translation, tol)
    }
}

/// Rotation by `theta` radians about the origin.
pub fn rotation(theta: f64) -> Isometry {
    let (s, c) = theta.sin_cos();
    Isometry {
        linear: Mat2::from_rows([c, -s], [s, c]),
        translation: Vec2::ZERO,
        kind: GeometryKind::Euclidean,
    }
}

/// Galilean boost `x' = x, y' = y − u·x`.
pub fn galilean_boost(u: f64) -> Isometry {
    Isometry {
        linear: Mat2::from_rows([1.0, 0.0], [-u, 1.0]),
        translation: Vec2::ZERO,
        kind: GeometryKind::Galilean,
    }
}

/// Lorentz boost with velocity `u`, `|u| < 1`:
/// `x' = γ(x − u·y), y' = γ(y − u·x)`.
pub fn lorentz_boost_velocity(u: f64) -> Result<Isometry> {
    check_subluminal(u)?;
    let gamma = 1.0 / (1.0 - u * u).sqrt();
    let off = -gamma * u;
    Ok(Isometry {
        linear: Mat2::from_rows([gamma, off], [off, gamma]),
        translation: Vec2::ZERO,
        kind: GeometryKind::Minkowski,
    })
}

/// Lorentz boost as the hyperbolic rotation `[[cosh θ, sinh θ], [sinh θ, cosh θ]]`.
pub fn lorentz_boost_rapidity(theta: Rapidity) -> Isometry {
    let (c, s) = (theta.0.cosh(), theta.0.sinh());
    Isometry {
        linear: Mat2::from_rows([c, s], [s, c]),
        translation: Vec2::ZERO,
        kind: GeometryKind::Minkowski,
    }
}

pub fn translate(t: Vec2, kind: GeometryKind) -> Isometry {
    Isometry {
        linear: Mat2::IDENTITY,
        translation: t,
        kind,
    }
}

/// `g ∘ h`: applies `h` first, then `g`.
pub fn compose(g: &Isometry, h: &Isometry) -> Result<Isometry> {
    if g.kind != h.kind {
        return Err(GeometryError::KindMismatch(g.kind, h.kind));
    }
    Ok(Isometry {
        linear: g.linear * h.linear,
        translation: g.linear * h.translation + g.translation,
        kind: g.kind,
    })
}

pub fn inverse(g: &Isometry) -> Isometry {
    // every constructor yields det = 1, so the adjugate is the inverse
    let m = &g.linear;
    let det = m.det();
    let linear = Mat2::from_rows([m.a22 / det, -m.a12 / det], [-m.a21 / det, m.a11 / det]);
    Isometry {
        linear,
        translation: -(linear * g.translation),
        kind: g.kind,
    }
}

pub fn apply(g: &Isometry, p: Vec2) -> Vec2 {
    g.linear * p + g.translation
}

/// The quadratic form `x² + ε·y²` preserved by the linear parts of `kind`.
pub fn invariant_form(kind: GeometryKind, v: Vec2) -> f64 {
    v.x * v.x + kind.epsilon() * (v.y * v.y)
}
