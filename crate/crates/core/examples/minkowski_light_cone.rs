//! Causal classes, the light cone, and rapidity as the angle between
//! timelike directions.

use std::error::Error;

use cayley_klein::metric::{angle_vectors, classify, norm, perpendicular};
use cayley_klein::transforms::{lorentz_boost_velocity, Rapidity};
use cayley_klein::{GeometryKind, Tolerance, Vec2};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let tol = Tolerance::default();
    let mink = GeometryKind::Minkowski;

    for v in [Vec2::xy(3.0, 1.0), Vec2::xy(1.0, 3.0), Vec2::xy(2.0, -2.0)] {
        println!("({v}) is {} with norm {}", classify(v, tol)?, norm(mink, v));
    }
    let light = Vec2::xy(1.0, 1.0);
    println!("light ray perpendicular to itself: {}", perpendicular(mink, light, light, tol));

    let u = 0.6;
    let boost = lorentz_boost_velocity(u)?;
    let rest = Vec2::xy(0.0, 1.0);
    let moved = boost.linear * rest;
    let theta = Rapidity::from_velocity(u)?;
    println!("boost u = {u}: matrix {:?}", boost.linear.entries());
    println!(
        "angle between ({rest}) and ({moved}) = {}, |rapidity| = {}",
        angle_vectors(mink, rest, moved, tol)?.value(),
        theta.0.abs(),
    );

    match angle_vectors(mink, rest, Vec2::xy(1.0, 0.0), tol) {
        Err(e) => println!("timelike vs spacelike: {e}"),
        Ok(a) => println!("unexpected angle {}", a.value()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
