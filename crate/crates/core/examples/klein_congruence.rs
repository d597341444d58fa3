//! Figures are congruent when some motion of the geometry maps one onto the
//! other. Finds the witness and prints the classification table.

use std::error::Error;

use cayley_klein::klein::{
    cayley_klein_table, congruence_invariants, find_congruence, implemented_kind, Figure, KleinGeometry,
    MeasureKind,
};
use cayley_klein::transforms::{galilean_boost, lorentz_boost_rapidity, rotation, Isometry, Rapidity};
use cayley_klein::{GeometryKind, Tolerance, Vec2};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let tol = Tolerance::default();
    let tri = Figure::triangle(Vec2::xy(0.0, 0.0), Vec2::xy(3.0, 1.0), Vec2::xy(1.0, 2.5));

    for kind in GeometryKind::ALL {
        let geom = KleinGeometry::new(kind);
        let g: Isometry = match kind {
            GeometryKind::Euclidean => rotation(0.7),
            GeometryKind::Galilean => galilean_boost(-1.2),
            GeometryKind::Minkowski => lorentz_boost_rapidity(Rapidity(0.5)),
        }
        .then_translate(Vec2::xy(2.0, -1.0));
        let image = tri.transformed(&g);
        println!("{kind} invariants: {:?}", congruence_invariants(&geom, &tri)?);
        match find_congruence(&geom, &tri, &image, tol)? {
            Some(w) => println!("  witness parameter {:.6} (used {:.6})", w.parameter(), g.parameter()),
            None => println!("  no witness"),
        }
    }

    let mink = KleinGeometry::new(GeometryKind::Minkowski);
    let space = Figure::segment(Vec2::xy(0.0, 0.0), Vec2::xy(2.0, 1.0));
    let time = Figure::segment(Vec2::xy(0.0, 0.0), Vec2::xy(1.0, 2.0));
    println!("spacelike vs timelike segment: {:?}", find_congruence(&mink, &space, &time, tol)?);

    let table = cayley_klein_table();
    for angle in MeasureKind::ALL {
        let row: Vec<String> = MeasureKind::ALL
            .iter()
            .map(|&length| {
                let cell = table.cell(angle, length);
                match implemented_kind(length, angle) {
                    Some(_) => format!("[{}]", cell.english),
                    None => cell.english.to_string(),
                }
            })
            .collect();
        println!("{angle:>10} angle: {}", row.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
