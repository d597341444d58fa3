//! The `ckgeom` command line.
//!
//! Exit codes: 0 success, 1 a `check` property failed, 2 usage or parse
//! error, 3 domain error (the message names the violated precondition).

mod check;
mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::GeometryError;
use crate::figures::{circle_branches, Circle};
use crate::klein::{cayley_klein_table, MeasureKind};
use crate::metric::{angle_lines_galilean, angle_vectors, classify, distance, special_distance};
use crate::transforms::{
    compose, galilean_boost, lorentz_boost_rapidity, lorentz_boost_velocity, rotation, translate,
    Isometry, Rapidity,
};
use crate::types::{GeometryKind, Tolerance, Vec2};

pub use check::{run_checks, PropertyResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Svg,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeometryArg {
    Euclidean,
    Galilean,
    Minkowski,
}

impl From<GeometryArg> for GeometryKind {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Euclidean => GeometryKind::Euclidean,
            GeometryArg::Galilean => GeometryKind::Galilean,
            GeometryArg::Minkowski => GeometryKind::Minkowski,
        }
    }
}

/// Euclidean, Galilean and Minkowski plane geometry.
///
/// Points are written `x,y` without spaces. In Galilean and Minkowski
/// geometry `x` is the time coordinate and `y` the space coordinate.
#[derive(Debug, Parser)]
#[command(name = "ckgeom", version)]
struct Args {
    /// Geometry used by distance, angle, circle and bare translations
    #[arg(long, global = true, value_enum, default_value = "euclidean")]
    geometry: GeometryArg,

    /// Relative comparison tolerance (absolute floor stays at 1e-12)
    #[arg(long = "tol", global = true, env = "CKGEOM_TOL", default_value_t = 1e-9, value_parser = parse_rel_tol)]
    tol: f64,

    /// Number of random samples per property (check) or locus points (circle)
    #[arg(long, global = true, default_value_t = 256, value_parser = clap::value_parser!(u32).range(2..))]
    samples: u32,

    /// Seed of the random generator used by check
    #[arg(long, global = true, env = "CKGEOM_SEED", default_value_t = 0)]
    seed: u64,

    /// Output format; csv applies to circle and transform, svg to circle only
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance from A to B (Galilean: signed, plus the special distance when defined)
    Distance {
        #[arg(value_parser = parse_point, allow_hyphen_values = true)]
        a: Vec2,
        #[arg(value_parser = parse_point, allow_hyphen_values = true)]
        b: Vec2,
    },
    /// Angle between two vectors; in Galilean geometry between two lines given by their slopes
    Angle {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Causal class (spacelike, timelike, lightlike) of a nonzero vector
    Classify {
        #[arg(value_parser = parse_point, allow_hyphen_values = true)]
        v: Vec2,
    },
    /// Apply a transform to points.
    ///
    /// SPEC is one of rot:THETA, gal:U, lor:U (|U| < 1), rap:THETA or trans:TX,TY,
    /// chained with '+' where the leftmost element is applied last.
    /// A chain may only mix elements of one geometry; trans takes the
    /// geometry of its neighbours, or --geometry when it stands alone.
    Transform {
        #[arg(allow_hyphen_values = true)]
        spec: String,
        #[arg(value_parser = parse_point, allow_hyphen_values = true, required = true)]
        points: Vec<Vec2>,
    },
    /// Run the seeded randomized invariance report; exit 1 if any property fails
    Check,
    /// Sample a circle: a Euclidean circle, a Galilean pair of vertical lines, or
    /// a Minkowski hyperbola quartet drawn over the rapidity window [-2, 2]
    Circle {
        #[arg(value_parser = parse_point, allow_hyphen_values = true)]
        center: Vec2,
        #[arg(allow_hyphen_values = true)]
        radius: f64,
    },
    /// The nine Cayley-Klein plane geometries
    Table,
}

fn parse_rel_tol(s: &str) -> Result<f64, String> {
    let rel: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Tolerance::with_rel(rel).map(|t| t.rel).map_err(|e| e.to_string())
}

/// Parses a point literal `x,y`.
pub fn parse_point(s: &str) -> Result<Vec2, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a point `x,y`, got `{s}`"))?;
    let num = |t: &str| {
        t.parse::<f64>()
            .map_err(|_| format!("bad coordinate `{t}` in `{s}`"))
    };
    Vec2::new(num(x)?, num(y)?).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(GeometryError),
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::Domain(e)
    }
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliConfig {
    pub geometry: GeometryKind,
    pub tolerance: Tolerance,
    pub samples: usize,
    pub seed: u64,
    pub output_format: OutputFormat,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            geometry: GeometryKind::Euclidean,
            tolerance: Tolerance::default(),
            samples: 256,
            seed: 0,
            output_format: OutputFormat::Text,
        }
    }
}

/// Runs the command line `argv` (program name first), writing to `out` and
/// `err`, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let config = CliConfig {
        geometry: args.geometry.into(),
        tolerance: Tolerance::with_rel(args.tol).expect("validated by parser"),
        samples: args.samples as usize,
        seed: args.seed,
        output_format: args.format,
    };
    let result = match args.command {
        Command::Distance { a, b } => cmd_distance(&config, a, b),
        Command::Angle { a, b } => cmd_angle(&config, &a, &b),
        Command::Classify { v } => cmd_classify(&config, v),
        Command::Transform { spec, points } => cmd_transform(&config, &spec, &points),
        Command::Check => cmd_check(&config),
        Command::Circle { center, radius } => cmd_circle(&config, center, radius),
        Command::Table => cmd_table(&config),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

type Rendered = Result<(String, i32), CliError>;

fn ok(text: String) -> Rendered {
    Ok((text, EXIT_OK))
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn require_format(config: &CliConfig, allowed: &[OutputFormat], cmd: &str) -> Result<(), CliError> {
    if allowed.contains(&config.output_format) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "`{cmd}` does not support --format {:?}",
            config.output_format
        )))
    }
}

fn cmd_distance(config: &CliConfig, a: Vec2, b: Vec2) -> Rendered {
    use OutputFormat::*;
    require_format(config, &[Text, Json], "distance")?;
    let kind = config.geometry;
    let d = distance(kind, a, b);
    let special = match kind {
        GeometryKind::Galilean => special_distance(a, b, config.tolerance).ok(),
        _ => None,
    };
    Ok(match config.output_format {
        Json => {
            let mut result = json!({ "distance": d });
            if let Some(s) = special {
                result["special_distance"] = json!(s);
            }
            (json_line(json!({ "geometry": kind.name(), "result": result })), EXIT_OK)
        }
        _ => {
            let mut text = format!("{}\n", render::num(d));
            if let Some(s) = special {
                text.push_str(&format!("special distance: {}\n", render::num(s)));
            }
            (text, EXIT_OK)
        }
    })
}

fn cmd_angle(config: &CliConfig, a: &str, b: &str) -> Rendered {
    use OutputFormat::*;
    require_format(config, &[Text, Json], "angle")?;
    let kind = config.geometry;
    let value = match kind {
        GeometryKind::Galilean => {
            let slope = |s: &str| {
                s.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| CliError::Usage(format!("expected a line slope, got `{s}`")))
            };
            angle_lines_galilean(slope(a)?, slope(b)?)
        }
        _ => {
            let a = parse_point(a).map_err(CliError::Usage)?;
            let b = parse_point(b).map_err(CliError::Usage)?;
            angle_vectors(kind, a, b, config.tolerance)?
        }
    };
    render_scalar(config, json!(value.value()), render::num(value.value()))
}

fn cmd_classify(config: &CliConfig, v: Vec2) -> Rendered {
    use OutputFormat::*;
    require_format(config, &[Text, Json], "classify")?;
    let class = classify(v, config.tolerance)?;
    render_scalar(config, json!(class.name()), class.name().to_string())
}

fn render_scalar(config: &CliConfig, value: serde_json::Value, text: String) -> Rendered {
    match config.output_format {
        OutputFormat::Json => ok(json_line(
            json!({ "geometry": config.geometry.name(), "result": value }),
        )),
        _ => ok(format!("{text}\n")),
    }
}

/// Why a transform chain was rejected.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecError {
    /// The text is not a valid chain.
    Malformed(String),
    /// The chain is well formed but names an element outside its group.
    Domain(GeometryError),
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Malformed(msg) => CliError::Usage(msg),
            SpecError::Domain(e) => CliError::Domain(e),
        }
    }
}

/// Parses a transform chain such as `rot:0.5+trans:1,2`; the leftmost
/// element is applied last.
pub fn parse_transform(spec: &str, default_kind: GeometryKind) -> Result<Isometry, SpecError> {
    // split on '+' only where a new element starts, so `1e+3` survives
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, c) in spec.char_indices() {
        if c == '+' && spec[i + 1..].starts_with(|n: char| n.is_ascii_alphabetic()) {
            parts.push(&spec[start..i]);
            start = i + 1;
        }
    }
    parts.push(&spec[start..]);

    enum Element {
        Linear(Isometry),
        Shift(Vec2),
    }
    let mut elements = Vec::new();
    for part in parts {
        let (name, arg) = part
            .split_once(':')
            .ok_or_else(|| SpecError::Malformed(format!("transform `{part}` lacks `name:value`")))?;
        let scalar = || {
            arg.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| SpecError::Malformed(format!("bad parameter `{arg}` in `{part}`")))
        };
        elements.push(match name {
            "rot" => Element::Linear(rotation(scalar()?)),
            "gal" => Element::Linear(galilean_boost(scalar()?)),
            "lor" => Element::Linear(lorentz_boost_velocity(scalar()?).map_err(SpecError::Domain)?),
            "rap" => Element::Linear(lorentz_boost_rapidity(Rapidity(scalar()?))),
            "trans" => Element::Shift(parse_point(arg).map_err(SpecError::Malformed)?),
            other => {
                return Err(SpecError::Malformed(format!(
                    "unknown transform `{other}` (rot, gal, lor, rap, trans)"
                )))
            }
        });
    }
    let kind = elements
        .iter()
        .find_map(|e| match e {
            Element::Linear(g) => Some(g.kind),
            Element::Shift(_) => None,
        })
        .unwrap_or(default_kind);
    elements.into_iter().try_fold(Isometry::identity(kind), |chain, e| {
        let g = match e {
            Element::Linear(g) => g,
            Element::Shift(t) => translate(t, kind),
        };
        compose(&chain, &g).map_err(SpecError::Domain)
    })
}

fn cmd_transform(config: &CliConfig, spec: &str, points: &[Vec2]) -> Rendered {
    use OutputFormat::*;
    require_format(config, &[Text, Csv, Json], "transform")?;
    let g = parse_transform(spec, config.geometry)?;
    let images: Vec<Vec2> = points.iter().map(|&p| g.apply(p)).collect();
    render_points(config, &[images])
}

fn render_points(config: &CliConfig, branches: &[Vec<Vec2>]) -> Rendered {
    let all = || branches.iter().flatten();
    let text = match config.output_format {
        OutputFormat::Text => all().map(|&p| render::point(p) + "\n").collect(),
        OutputFormat::Csv => render::csv(all().copied()),
        OutputFormat::Svg => render::svg(branches, config.geometry == GeometryKind::Euclidean),
        OutputFormat::Json => {
            let pts: Vec<[f64; 2]> = all().map(|p| [p.x, p.y]).collect();
            json_line(json!({ "geometry": config.geometry.name(), "points": pts }))
        }
    };
    ok(text)
}

fn cmd_check(config: &CliConfig) -> Rendered {
    use OutputFormat::*;
    require_format(config, &[Text, Json], "check")?;
    let report = run_checks(config.samples, config.seed, config.tolerance);
    let all_pass = report.iter().all(|r| r.pass);
    let code = if all_pass { EXIT_OK } else { EXIT_PROPERTY_FAILURE };
    let text = match config.output_format {
        Json => {
            let rows: Vec<_> = report
                .iter()
                .map(|r| json!({ "property": r.name, "pass": r.pass, "max_err": r.max_err, "bound": r.bound }))
                .collect();
            json_line(json!({ "geometry": "all", "seed": config.seed, "samples": config.samples, "result": rows }))
        }
        _ => {
            let mut text = format!("seed {} samples {}\n", config.seed, config.samples);
            for r in &report {
                text.push_str(&format!(
                    "{} {:<28} max_err={:.3e} bound={:.3e}\n",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.max_err,
                    r.bound
                ));
            }
            text.push_str(if all_pass { "all properties hold\n" } else { "some properties failed\n" });
            text
        }
    };
    Ok((text, code))
}

fn cmd_circle(config: &CliConfig, center: Vec2, radius: f64) -> Rendered {
    let circle = Circle::new(config.geometry, center, radius)?;
    let branches = circle_branches(&circle, config.samples)?;
    render_points(config, &branches)
}

fn cmd_table(config: &CliConfig) -> Rendered {
    use OutputFormat::*;
    require_format(config, &[Text, Json], "table")?;
    let table = cayley_klein_table();
    match config.output_format {
        Json => {
            let english: Vec<Vec<&str>> = table
                .grid()
                .iter()
                .map(|row| row.iter().map(|c| c.english).collect())
                .collect();
            let greek: Vec<Vec<&str>> = table
                .grid()
                .iter()
                .map(|row| row.iter().map(|c| c.greek).collect())
                .collect();
            let axes: Vec<&str> = MeasureKind::ALL.iter().map(|m| m.name()).collect();
            ok(json_line(json!({
                "geometry": config.geometry.name(),
                "rows": "angle",
                "columns": "length",
                "measures": axes,
                "table": english,
                "greek": greek,
            })))
        }
        _ => ok(render::table(&table)),
    }
}
