//! A geometry in Klein's sense: a group acting on the plane, and the figure
//! properties that survive the action.

use std::fmt;

use crate::error::{GeometryError, Result};
use crate::metric::{classify, distance, interval};
use crate::transforms::{apply, Isometry, Rapidity};
use crate::transforms::{galilean_boost, lorentz_boost_rapidity, rotation};
use crate::types::{GeometryKind, Tolerance, Vec2};

/// The pair (isometry group of `kind`, the plane).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KleinGeometry {
    pub kind: GeometryKind,
}

impl KleinGeometry {
    pub const fn new(kind: GeometryKind) -> Self {
        KleinGeometry { kind }
    }

    pub fn identity(&self) -> Isometry {
        Isometry::identity(self.kind)
    }

    /// The action of `g` on `p`.
    pub fn act(&self, g: &Isometry, p: Vec2) -> Result<Vec2> {
        act(self, g, p)
    }
}

impl From<GeometryKind> for KleinGeometry {
    fn from(kind: GeometryKind) -> Self {
        KleinGeometry { kind }
    }
}

/// An ordered list of points: a segment, a triangle, a polyline.
#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    points: Vec<Vec2>,
}

impl Figure {
    pub fn new(points: Vec<Vec2>) -> Result<Self> {
        if points.is_empty() {
            return Err(GeometryError::DegenerateFigure(0));
        }
        Ok(Figure { points })
    }

    pub fn segment(a: Vec2, b: Vec2) -> Self {
        Figure { points: vec![a, b] }
    }

    pub fn triangle(a: Vec2, b: Vec2, c: Vec2) -> Self {
        Figure {
            points: vec![a, b, c],
        }
    }

    pub fn points(&self) -> &[Vec2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The image of every vertex under `g`.
    pub fn transformed(&self, g: &Isometry) -> Figure {
        Figure {
            points: self.points.iter().map(|&p| apply(g, p)).collect(),
        }
    }

    fn scale(&self) -> f64 {
        self.points.iter().map(|p| p.max_abs()).fold(0.0, f64::max)
    }
}

pub fn act(geom: &KleinGeometry, g: &Isometry, p: Vec2) -> Result<Vec2> {
    if g.kind != geom.kind {
        return Err(GeometryError::KindMismatch(geom.kind, g.kind));
    }
    Ok(apply(g, p))
}

/// Group-invariant quantities of a figure, over pairs `i < j` in order.
///
/// * Euclidean: pairwise distances.
/// * Galilean: pairwise signed distances, followed by the special distances
///   of the vertically aligned pairs.
/// * Minkowski: pairwise signed intervals `Δx² − Δy²`. The sign carries the
///   causal class of the difference (positive spacelike, negative timelike,
///   zero lightlike), the magnitude the squared distance.
pub fn congruence_invariants(geom: &KleinGeometry, f: &Figure) -> Result<Vec<f64>> {
    let pts = f.points();
    if pts.len() < 2 {
        return Err(GeometryError::DegenerateFigure(pts.len()));
    }
    let pairs = || {
        (0..pts.len()).flat_map(move |i| (i + 1..pts.len()).map(move |j| (pts[i], pts[j])))
    };
    let mut out: Vec<f64> = match geom.kind {
        GeometryKind::Euclidean | GeometryKind::Galilean => {
            pairs().map(|(a, b)| distance(geom.kind, a, b)).collect()
        }
        GeometryKind::Minkowski => pairs().map(|(a, b)| interval(b - a)).collect(),
    };
    if geom.kind == GeometryKind::Galilean {
        let tol = Tolerance::default();
        let scale = f.scale();
        out.extend(
            pairs()
                .filter(|(a, b)| (b.x - a.x).abs() <= tol.bound(scale))
                .map(|(a, b)| b.y - a.y),
        );
    }
    Ok(out)
}

/// Compares invariant vectors componentwise. For figures other than segments
/// and triangles this is the available congruence test, and it is only a
/// necessary condition.
pub fn same_invariants(geom: &KleinGeometry, f: &Figure, h: &Figure, tol: Tolerance) -> Result<bool> {
    if f.len() != h.len() {
        return Ok(false);
    }
    let a = congruence_invariants(geom, f)?;
    let b = congruence_invariants(geom, h)?;
    let scale = f.scale().max(h.scale()).max(1.0);
    let scale = match geom.kind {
        GeometryKind::Minkowski => scale * scale,
        _ => scale,
    };
    Ok(a.len() == b.len()
        && a.iter()
            .zip(&b)
            .all(|(x, y)| (x - y).abs() <= tol.bound(scale)))
}

/// Searches for a group element mapping the vertices of `f` onto those of
/// `h` in order. Returns `Ok(None)` when no such element exists.
///
/// The linear part is solved from the edge `f[i] − f[0]` best suited to the
/// geometry, the translation from `h[0]`; the candidate is then checked on
/// every vertex against `tol` scaled by the figures' magnitude. When the
/// parameter is unconstrained (coincident points, vertical Galilean edges)
/// the zero parameter is chosen.
pub fn find_congruence(
    geom: &KleinGeometry,
    f: &Figure,
    h: &Figure,
    tol: Tolerance,
) -> Result<Option<Isometry>> {
    let n = f.len();
    if !(2..=3).contains(&n) {
        return Err(GeometryError::UnsupportedFigure(n));
    }
    if h.len() != n {
        return Err(GeometryError::PointCountMismatch(n, h.len()));
    }
    let (fp, hp) = (f.points(), h.points());
    let scale = f.scale().max(h.scale()).max(1.0);
    let edges: Vec<(Vec2, Vec2)> = (1..n).map(|i| (fp[i] - fp[0], hp[i] - hp[0])).collect();
    let negligible = |v: Vec2| v.max_abs() <= tol.bound(scale);

    let linear = match geom.kind {
        GeometryKind::Euclidean => {
            let (e, e2) = longest_by(&edges, |e| e.x.hypot(e.y));
            if negligible(e) || negligible(e2) {
                rotation(0.0)
            } else {
                rotation(e.wedge(e2).atan2(e.x * e2.x + e.y * e2.y))
            }
        }
        GeometryKind::Galilean => {
            let (e, e2) = longest_by(&edges, |e| e.x.abs());
            if e.x.abs() <= tol.bound(scale) {
                galilean_boost(0.0)
            } else {
                galilean_boost((e.y - e2.y) / e.x)
            }
        }
        GeometryKind::Minkowski => {
            for &(e, e2) in &edges {
                match (negligible(e), negligible(e2)) {
                    (true, true) => continue,
                    (false, false) => {
                        if classify(e, tol)? != classify(e2, tol)? {
                            return Ok(None);
                        }
                    }
                    _ => return Ok(None),
                }
            }
            // light-cone coordinates: x + y scales by e^θ, x − y by e^−θ
            let (e, e2) = longest_by(&edges, |e| (e.x + e.y).abs().max((e.x - e.y).abs()));
            if negligible(e) {
                lorentz_boost_rapidity(Rapidity(0.0))
            } else {
                let (plus, minus) = (e.x + e.y, e.x - e.y);
                let ratio = if plus.abs() >= minus.abs() {
                    (e2.x + e2.y) / plus
                } else {
                    minus / (e2.x - e2.y)
                };
                if !(ratio > 0.0 && ratio.is_finite()) {
                    return Ok(None);
                }
                lorentz_boost_rapidity(Rapidity(ratio.ln()))
            }
        }
    };

    let witness = linear.then_translate(hp[0] - apply(&linear, fp[0]));
    let fits = fp.iter().zip(hp).all(|(&p, &q)| {
        let img = apply(&witness, p);
        (img.x - q.x).abs() <= tol.bound(scale) && (img.y - q.y).abs() <= tol.bound(scale)
    });
    Ok(fits.then_some(witness))
}

fn longest_by(edges: &[(Vec2, Vec2)], key: impl Fn(Vec2) -> f64) -> (Vec2, Vec2) {
    edges
        .iter()
        .copied()
        .max_by(|a, b| key(a.0).total_cmp(&key(b.0)))
        .expect("at least one edge")
}

/// How a Cayley–Klein geometry measures lengths or angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 3] = [
        MeasureKind::Elliptic,
        MeasureKind::Parabolic,
        MeasureKind::Hyperbolic,
    ];

    pub const fn index(self) -> usize {
        match self {
            MeasureKind::Elliptic => 0,
            MeasureKind::Parabolic => 1,
            MeasureKind::Hyperbolic => 2,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            MeasureKind::Elliptic => "elliptic",
            MeasureKind::Parabolic => "parabolic",
            MeasureKind::Hyperbolic => "hyperbolic",
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One cell of the Cayley–Klein table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeometryName {
    pub english: &'static str,
    pub greek: &'static str,
}

/// The nine plane geometries, indexed `[angle measure][length measure]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyKleinTable {
    grid: [[GeometryName; 3]; 3],
}

const fn name(english: &'static str, greek: &'static str) -> GeometryName {
    GeometryName { english, greek }
}

const TABLE: [[GeometryName; 3]; 3] = [
    [
        name("elliptic geometry", "Ελλειπτική γεωμετρία"),
        name("Euclidean geometry", "Ευκλείδεια γεωμετρία"),
        name("hyperbolic geometry", "Υπερβολική γεωμετρία"),
    ],
    [
        name("co-Euclidean geometry", "συν-Ευκλείδεια γεωμετρία"),
        name("Galileo geometry", "Γεωμετρία Galileo"),
        name("co-Minkowski geometry", "συν-Minkowski γεωμετρία"),
    ],
    [
        name("co-hyperbolic geometry", "συν-υπερβολική γεωμετρία"),
        name("Minkowski geometry", "Γεωμετρία Minkowski"),
        name("doubly hyperbolic geometry", "Διπλή υπερβολική γεωμετρία"),
    ],
];

impl CayleyKleinTable {
    pub fn cell(&self, angle: MeasureKind, length: MeasureKind) -> GeometryName {
        self.grid[angle.index()][length.index()]
    }

    /// Rows by angle measure, columns by length measure.
    pub fn grid(&self) -> &[[GeometryName; 3]; 3] {
        &self.grid
    }

    pub fn names(&self) -> impl Iterator<Item = GeometryName> + '_ {
        self.grid.iter().flatten().copied()
    }
}

pub fn cayley_klein_table() -> CayleyKleinTable {
    CayleyKleinTable { grid: TABLE }
}

/// The implemented geometry occupying a table cell, if any.
pub fn implemented_kind(length: MeasureKind, angle: MeasureKind) -> Option<GeometryKind> {
    use MeasureKind::*;
    match (length, angle) {
        (Parabolic, Elliptic) => Some(GeometryKind::Euclidean),
        (Parabolic, Parabolic) => Some(GeometryKind::Galilean),
        (Parabolic, Hyperbolic) => Some(GeometryKind::Minkowski),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{compose, inverse, translate};
    use proptest::prelude::*;
    use std::collections::HashSet;

    const E: KleinGeometry = KleinGeometry::new(GeometryKind::Euclidean);
    const G: KleinGeometry = KleinGeometry::new(GeometryKind::Galilean);
    const M: KleinGeometry = KleinGeometry::new(GeometryKind::Minkowski);

    fn v(x: f64, y: f64) -> Vec2 {
        Vec2::xy(x, y)
    }

    #[test]
    fn act_examples() {
        let p = act(&E, &rotation(std::f64::consts::FRAC_PI_2), v(1.0, 0.0)).unwrap();
        assert!((p.x).abs() < 1e-15 && (p.y - 1.0).abs() < 1e-15);
        assert_eq!(act(&G, &G.identity(), v(3.0, -2.0)).unwrap(), v(3.0, -2.0));
        assert!(matches!(
            act(&M, &rotation(1.0), v(0.0, 0.0)),
            Err(GeometryError::KindMismatch(..))
        ));
    }

    #[test]
    fn invariant_examples() {
        let seg = Figure::segment(v(0.0, 0.0), v(3.0, 4.0));
        assert_eq!(congruence_invariants(&E, &seg).unwrap(), vec![5.0]);
        let seg = Figure::segment(v(1.0, 5.0), v(4.0, -2.0));
        assert_eq!(congruence_invariants(&G, &seg).unwrap(), vec![3.0]);
        let vertical = Figure::segment(v(2.0, 1.0), v(2.0, 6.0));
        assert_eq!(congruence_invariants(&G, &vertical).unwrap(), vec![0.0, 5.0]);
        let seg = Figure::segment(v(0.0, 0.0), v(1.0, 2.0));
        assert_eq!(congruence_invariants(&M, &seg).unwrap(), vec![-3.0]);
        let single = Figure::new(vec![v(0.0, 0.0)]).unwrap();
        assert_eq!(
            congruence_invariants(&E, &single),
            Err(GeometryError::DegenerateFigure(1))
        );
        assert!(Figure::new(vec![]).is_err());
    }

    #[test]
    fn congruence_reflexive() {
        let tol = Tolerance::default();
        let tri = Figure::triangle(v(0.0, 0.0), v(2.0, 1.0), v(-1.0, 3.0));
        for geom in [E, G, M] {
            let w = find_congruence(&geom, &tri, &tri, tol).unwrap().unwrap();
            assert!(w.approx_eq(&geom.identity(), tol));
        }
    }

    #[test]
    fn congruence_rejects_cross_causal_segments() {
        let tol = Tolerance::default();
        let spacelike = Figure::segment(v(0.0, 0.0), v(2.0, 1.0));
        let timelike = Figure::segment(v(0.0, 0.0), v(1.0, 2.0));
        assert_eq!(find_congruence(&M, &spacelike, &timelike, tol).unwrap(), None);
    }

    #[test]
    fn congruence_rejects_orientation_flip() {
        // a reflected triangle has the same side lengths but no rotation maps it
        let tol = Tolerance::default();
        let f = Figure::triangle(v(0.0, 0.0), v(2.0, 0.0), v(0.0, 1.0));
        let h = Figure::triangle(v(0.0, 0.0), v(2.0, 0.0), v(0.0, -1.0));
        assert!(same_invariants(&E, &f, &h, tol).unwrap());
        assert_eq!(find_congruence(&E, &f, &h, tol).unwrap(), None);
        // Lorentz boosts keep the sign of x + y
        let f = Figure::segment(v(0.0, 0.0), v(2.0, 1.0));
        let h = Figure::segment(v(0.0, 0.0), v(-2.0, -1.0));
        assert_eq!(find_congruence(&M, &f, &h, tol).unwrap(), None);
    }

    #[test]
    fn congruence_errors() {
        let tol = Tolerance::default();
        let quad = Figure::new(vec![v(0.0, 0.0); 4]).unwrap();
        assert_eq!(
            find_congruence(&E, &quad, &quad, tol),
            Err(GeometryError::UnsupportedFigure(4))
        );
        let seg = Figure::segment(v(0.0, 0.0), v(1.0, 0.0));
        let tri = Figure::triangle(v(0.0, 0.0), v(1.0, 0.0), v(0.0, 1.0));
        assert_eq!(
            find_congruence(&E, &seg, &tri, tol),
            Err(GeometryError::PointCountMismatch(2, 3))
        );
    }

    #[test]
    fn galilean_vertical_segment_picks_zero_velocity() {
        let tol = Tolerance::default();
        let f = Figure::segment(v(1.0, 0.0), v(1.0, 2.0));
        let h = Figure::segment(v(4.0, 5.0), v(4.0, 7.0));
        let w = find_congruence(&G, &f, &h, tol).unwrap().unwrap();
        assert_eq!(w.parameter(), 0.0);
        let h = Figure::segment(v(4.0, 5.0), v(4.0, 8.0));
        assert_eq!(find_congruence(&G, &f, &h, tol).unwrap(), None);
    }

    #[test]
    fn table_matches_printed_cells() {
        use MeasureKind::*;
        let t = cayley_klein_table();
        assert_eq!(t.cell(Elliptic, Parabolic).english, "Euclidean geometry");
        assert_eq!(t.cell(Elliptic, Parabolic).greek, "Ευκλείδεια γεωμετρία");
        assert_eq!(t.cell(Parabolic, Parabolic).english, "Galileo geometry");
        assert_eq!(t.cell(Hyperbolic, Hyperbolic).english, "doubly hyperbolic geometry");
        assert_eq!(t.cell(Hyperbolic, Hyperbolic).greek, "Διπλή υπερβολική γεωμετρία");
        assert_eq!(t.cell(Hyperbolic, Parabolic).greek, "Γεωμετρία Minkowski");
        let distinct: HashSet<_> = t.names().map(|n| n.english).collect();
        assert_eq!(distinct.len(), 9);
        let distinct: HashSet<_> = t.names().map(|n| n.greek).collect();
        assert_eq!(distinct.len(), 9);
    }

    #[test]
    fn implemented_cells() {
        use MeasureKind::*;
        assert_eq!(implemented_kind(Parabolic, Elliptic), Some(GeometryKind::Euclidean));
        assert_eq!(implemented_kind(Parabolic, Parabolic), Some(GeometryKind::Galilean));
        assert_eq!(implemented_kind(Parabolic, Hyperbolic), Some(GeometryKind::Minkowski));
        assert_eq!(implemented_kind(Elliptic, Elliptic), None);
        let t = cayley_klein_table();
        let mut implemented = 0;
        for length in MeasureKind::ALL {
            for angle in MeasureKind::ALL {
                if let Some(kind) = implemented_kind(length, angle) {
                    implemented += 1;
                    let cell = t.cell(angle, length).english;
                    let expect = match kind {
                        GeometryKind::Euclidean => "Euclidean geometry",
                        GeometryKind::Galilean => "Galileo geometry",
                        GeometryKind::Minkowski => "Minkowski geometry",
                    };
                    assert_eq!(cell, expect);
                }
            }
        }
        assert_eq!(implemented, 3);
    }

    fn vec2() -> impl Strategy<Value = Vec2> {
        (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(x, y)| Vec2::xy(x, y))
    }

    fn element(geom: KleinGeometry) -> impl Strategy<Value = Isometry> {
        (-2.0f64..2.0, vec2()).prop_map(move |(p, t)| {
            let lin = match geom.kind {
                GeometryKind::Euclidean => rotation(p * 1.5),
                GeometryKind::Galilean => galilean_boost(p),
                GeometryKind::Minkowski => lorentz_boost_rapidity(Rapidity(p)),
            };
            compose(&translate(t, geom.kind), &lin).unwrap()
        })
    }

    fn geom() -> impl Strategy<Value = KleinGeometry> {
        prop_oneof![Just(E), Just(G), Just(M)]
    }

    proptest! {
        #[test]
        fn action_axioms((geom, g1, g2) in geom().prop_flat_map(|k| (Just(k), element(k), element(k))),
                         p in vec2()) {
            prop_assert_eq!(act(&geom, &geom.identity(), p).unwrap(), p);
            let lhs = act(&geom, &g1, act(&geom, &g2, p).unwrap()).unwrap();
            let rhs = act(&geom, &compose(&g1, &g2).unwrap(), p).unwrap();
            prop_assert!((lhs - rhs).max_abs() <= 1e-9 * (1.0 + rhs.max_abs()));
        }

        #[test]
        fn invariants_survive_the_action((geom, g) in geom().prop_flat_map(|k| (Just(k), element(k))),
                                         a in vec2(), b in vec2(), c in vec2()) {
            let f = Figure::triangle(a, b, c);
            prop_assert!(same_invariants(&geom, &f, &f.transformed(&g), Tolerance::default()).unwrap());
        }

        #[test]
        fn congruence_is_an_equivalence(
            (geom, g1, g2) in geom().prop_flat_map(|k| (Just(k), element(k), element(k))),
            a in vec2(), b in vec2(), c in vec2())
        {
            let tol = Tolerance::default();
            let f = Figure::triangle(a, b, c);
            let h = f.transformed(&g1);
            let k = h.transformed(&g2);
            let w1 = find_congruence(&geom, &f, &h, tol).unwrap().expect("forward witness");
            let back = find_congruence(&geom, &h, &f, tol).unwrap().expect("symmetric witness");
            prop_assert!(back.approx_eq(&inverse(&w1), Tolerance::new(1e-7, 1e-7).unwrap()));
            let w2 = find_congruence(&geom, &h, &k, tol).unwrap().expect("second witness");
            let composed = compose(&w2, &w1).unwrap();
            for (p, q) in f.points().iter().zip(k.points()) {
                prop_assert!((apply(&composed, *p) - *q).max_abs() < 1e-7);
            }
        }
    }
}
