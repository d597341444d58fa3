//! One inner product, three planes: distances and norms side by side.

use std::error::Error;

use cayley_klein::metric::{abs_distance, distance, inner, norm};
use cayley_klein::{GeometryKind, Vec2};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = Vec2::new(1.0, 2.0)?;
    let b = Vec2::new(4.0, 6.0)?;

    println!("a = ({a}), b = ({b})");
    for kind in GeometryKind::ALL {
        println!(
            "{:>9}: eps = {:+}  <a,b> = {:6}  |b| = {:.4}  d(a,b) = {:.4}  |d| = {:.4}",
            kind.name(),
            kind.epsilon(),
            inner(kind, a, b),
            norm(kind, b),
            distance(kind, a, b),
            abs_distance(kind, a, b),
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
