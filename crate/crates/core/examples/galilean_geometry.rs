//! Signed distances, special distances on a vertical line, and slope angles
//! under Galilean boosts.

use std::error::Error;

use cayley_klein::figures::{area, transform_line, Line, Polygon};
use cayley_klein::metric::{angle_lines_galilean, distance, special_distance};
use cayley_klein::transforms::galilean_boost;
use cayley_klein::{GeometryKind, Tolerance, Vec2};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let tol = Tolerance::default();
    let gal = GeometryKind::Galilean;
    let (a, b) = (Vec2::xy(1.0, 5.0), Vec2::xy(4.0, -2.0));
    println!("d(A,B) = {}, d(B,A) = {}", distance(gal, a, b), distance(gal, b, a));

    let (p, q) = (Vec2::xy(2.0, 1.0), Vec2::xy(2.0, 6.0));
    println!("P, Q on x = 2: d = {}, special distance = {}", distance(gal, p, q), special_distance(p, q, tol)?);
    if let Err(e) = special_distance(a, b, tol) {
        println!("A, B: {e}");
    }

    let boost = galilean_boost(1.5).then_translate(Vec2::xy(0.5, -1.0));
    let (l1, l2) = (Line::sloped(0.5, 1.0)?, Line::sloped(2.0, -3.0)?);
    let (m1, m2) = (transform_line(&boost, &l1), transform_line(&boost, &l2));
    println!(
        "slopes {} and {} become {} and {}; angle stays {}",
        l1.slope()?,
        l2.slope()?,
        m1.slope()?,
        m2.slope()?,
        angle_lines_galilean(m1.slope()?, m2.slope()?).value(),
    );

    let square = Polygon::new(vec![Vec2::xy(0.0, 0.0), Vec2::xy(2.0, 0.0), Vec2::xy(2.0, 2.0), Vec2::xy(0.0, 2.0)])?;
    println!("area {} -> {}", area(&square), area(&square.transformed(&boost)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
