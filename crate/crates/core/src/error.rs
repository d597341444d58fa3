use thiserror::Error;

use crate::types::GeometryKind;

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;

/// Domain errors raised by the geometry kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("tolerance must be finite and strictly positive (rel = {rel}, abs = {abs})")]
    InvalidTolerance { rel: f64, abs: f64 },
    #[error("unknown geometry `{0}` (expected euclidean, galilean or minkowski)")]
    UnknownGeometry(String),
    #[error("the zero vector has no causal class")]
    ZeroVector,
    #[error("special distance needs points on a common vertical line (x differs by {dx})")]
    NotOnVerticalLine { dx: f64 },
    #[error("angle needs non-degenerate operands (zero or lightlike vector)")]
    DegenerateVector,
    #[error("no real angle between a {0} and a {1} vector")]
    MixedCausalClass(crate::types::CausalClass, crate::types::CausalClass),
    #[error("vector angles are not defined in {0} geometry")]
    UnsupportedGeometry(GeometryKind),
    #[error("boost velocity |u| = {0} must be below the speed of light 1")]
    SuperluminalVelocity(f64),
    #[error("cannot combine a {0} element with a {1} element")]
    KindMismatch(GeometryKind, GeometryKind),
    #[error("figure needs at least 2 points, got {0}")]
    DegenerateFigure(usize),
    #[error("congruence search handles segments and triangles only, got {0} points")]
    UnsupportedFigure(usize),
    #[error("figures have different point counts ({0} vs {1})")]
    PointCountMismatch(usize, usize),
    #[error("a vertical line has no slope")]
    VerticalLine,
    #[error("radius {0} is not allowed here")]
    DegenerateRadius(f64),
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("operation only applies to {expected} figures, got {got}")]
    WrongGeometry {
        expected: GeometryKind,
        got: GeometryKind,
    },
    #[error("points are not collinear")]
    NotCollinear,
    #[error("reference segment has zero length")]
    DegenerateDenominator,
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("the two points coincide")]
    CoincidentPoints,
}
