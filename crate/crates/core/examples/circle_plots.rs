//! Writes the unit circle of each geometry as SVG through the command-line
//! front end. Pass a directory to keep the files; by default they go to the
//! system temp directory.

use std::error::Error;
use std::path::PathBuf;

use cayley_klein::figures::{circle_branches, is_center, Circle};
use cayley_klein::{cli, GeometryKind, Tolerance, Vec2};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    plot_into(std::env::temp_dir())
}

fn plot_into(dir: PathBuf) -> Result<(), Box<dyn Error>> {
    for kind in GeometryKind::ALL {
        let circle = Circle::new(kind, Vec2::ZERO, 1.0)?;
        let branches = circle_branches(&circle, 64)?;
        println!("{kind}: {} branch(es)", branches.len());

        let mut svg = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(
            ["ckgeom", "--geometry", kind.name(), "circle", "0,0", "1", "--samples", "64", "--format", "svg"],
            &mut svg,
            &mut err,
        );
        if code != cli::EXIT_OK {
            return Err(String::from_utf8_lossy(&err).into_owned().into());
        }
        let path = dir.join(format!("circle_{}.svg", kind.name()));
        std::fs::write(&path, &svg)?;
        println!("  wrote {}", path.display());
    }

    let gal = Circle::new(GeometryKind::Galilean, Vec2::xy(1.0, 0.0), 2.0)?;
    let tol = Tolerance::default();
    println!(
        "Galilean circle centers: (1,100) {}, (1.5,0) {}",
        is_center(&gal, Vec2::xy(1.0, 100.0), tol)?,
        is_center(&gal, Vec2::xy(1.5, 0.0), tol)?,
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(dir) => plot_into(PathBuf::from(dir)),
        None => run_example(),
    }
}
