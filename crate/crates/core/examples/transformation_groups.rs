//! The three one-parameter motion groups: composition adds parameters,
//! and each group preserves its quadratic form.

use std::error::Error;

use cayley_klein::transforms::{
    compose, galilean_boost, inverse, invariant_form, lorentz_boost_rapidity, rotation, translate, Isometry,
    Rapidity,
};
use cayley_klein::{GeometryKind, Tolerance, Vec2};

fn family(kind: GeometryKind, p: f64) -> Isometry {
    match kind {
        GeometryKind::Euclidean => rotation(p),
        GeometryKind::Galilean => galilean_boost(p),
        GeometryKind::Minkowski => lorentz_boost_rapidity(Rapidity(p)),
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let v = Vec2::xy(3.0, -1.25);
    for kind in GeometryKind::ALL {
        let (a, b) = (0.4, 0.9);
        let g = compose(&family(kind, a), &family(kind, b))?;
        let moved = g.apply(v);
        println!(
            "{kind}: params {a} + {b} -> {:.12}; q(v) = {} -> {:.12}",
            g.parameter(),
            invariant_form(kind, v),
            invariant_form(kind, moved),
        );

        let motion = compose(&translate(Vec2::xy(1.0, 2.0), kind), &g)?;
        let back = compose(&inverse(&motion), &motion)?;
        println!(
            "  inverse undoes the motion: {}",
            back.approx_eq(&Isometry::identity(kind), Tolerance::default())
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
