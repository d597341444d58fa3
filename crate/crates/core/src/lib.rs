//! Euclidean, Galilean and Minkowski plane geometry behind one signed inner
//! product `⟨a, b⟩ = x₁x₂ + ε·y₁y₂` with `ε ∈ {+1, 0, −1}`.
//!
//! * [`types`]: vectors, matrices, the geometry selector and tolerances.
//! * [`metric`]: inner products, norms, distances, angles, causal classes.
//! * [`transforms`]: rotations, Galilean shears, Lorentz boosts, translations.
//! * [`klein`]: geometries as group actions, congruence, the Cayley–Klein table.
//! * [`figures`]: lines, circles and polygons and what the groups preserve.
//! * [`cli`]: the `ckgeom` command-line front-end.

pub mod cli;
pub mod error;
pub mod figures;
pub mod klein;
pub mod metric;
pub mod transforms;
pub mod types;

pub use error::{GeometryError, Result};
pub use types::{approx_eq, CausalClass, GeometryKind, Mat2, Tolerance, Vec2};
