//! Seeded randomized invariance report behind `ckgeom check`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::figures::{area, collinear_ratio, Polygon};
use crate::klein::{act, KleinGeometry};
use crate::metric::{classify, inner};
use crate::transforms::{
    compose, galilean_boost, inverse, invariant_form, lorentz_boost_rapidity, rotation, Isometry,
    Rapidity,
};
use crate::types::{GeometryKind, Mat2, Tolerance, Vec2};

/// Outcome of one property over all samples.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: String,
    /// Largest normalized error seen: `|Δ| / (1 + |reference|)`.
    pub max_err: f64,
    pub bound: f64,
    pub pass: bool,
}

struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn coord(&mut self) -> f64 {
        self.rng.gen_range(-10.0..10.0)
    }

    fn vec(&mut self) -> Vec2 {
        Vec2::xy(self.coord(), self.coord())
    }

    /// A parameter for the linear family of `kind`.
    fn param(&mut self, kind: GeometryKind) -> f64 {
        match kind {
            GeometryKind::Euclidean => self.rng.gen_range(-PI..PI),
            GeometryKind::Galilean => self.rng.gen_range(-5.0..5.0),
            GeometryKind::Minkowski => self.rng.gen_range(-3.0..3.0),
        }
    }

    fn isometry(&mut self, kind: GeometryKind) -> Isometry {
        let p = self.param(kind);
        let t = self.vec();
        linear(kind, p).then_translate(t)
    }
}

fn linear(kind: GeometryKind, p: f64) -> Isometry {
    match kind {
        GeometryKind::Euclidean => rotation(p),
        GeometryKind::Galilean => galilean_boost(p),
        GeometryKind::Minkowski => lorentz_boost_rapidity(Rapidity(p)),
    }
}

#[derive(Default)]
struct Tracker {
    max_err: f64,
    failed: bool,
}

impl Tracker {
    fn observe(&mut self, got: f64, want: f64) {
        let err = (got - want).abs() / (1.0 + want.abs());
        if err.is_nan() {
            self.failed = true;
        }
        self.max_err = self.max_err.max(err);
    }

    fn observe_mat(&mut self, got: &Mat2, want: &Mat2) {
        for (g, w) in got.entries().iter().zip(want.entries()) {
            self.observe(*g, w);
        }
    }

    fn observe_vec(&mut self, got: Vec2, want: Vec2) {
        self.observe(got.x, want.x);
        self.observe(got.y, want.y);
    }

    fn observe_iso(&mut self, got: &Isometry, want: &Isometry) {
        self.observe_mat(&got.linear, &want.linear);
        self.observe_vec(got.translation, want.translation);
    }

    fn finish(self, name: String, bound: f64) -> PropertyResult {
        let pass = !self.failed && self.max_err <= bound;
        PropertyResult {
            name,
            max_err: self.max_err,
            bound,
            pass,
        }
    }
}

/// Runs every property `samples` times with a generator seeded by `seed`.
pub fn run_checks(samples: usize, seed: u64, tol: Tolerance) -> Vec<PropertyResult> {
    let mut s = Sampler {
        rng: ChaCha8Rng::seed_from_u64(seed),
    };
    // |Δ| ≤ rel·(1 + |reference|), no absolute floor
    let bound = tol.rel;
    let mut out = Vec::new();

    for kind in GeometryKind::ALL {
        // exact agreement with the hand-written inner products
        let mut t = Tracker::default();
        for _ in 0..samples {
            let (a, b) = (s.vec(), s.vec());
            let hand = match kind {
                GeometryKind::Euclidean => a.x * b.x + a.y * b.y,
                GeometryKind::Galilean => a.x * b.x,
                GeometryKind::Minkowski => a.x * b.x - a.y * b.y,
            };
            if inner(kind, a, b) != hand {
                t.failed = true;
            }
            t.observe(inner(kind, a, b), hand);
        }
        out.push(t.finish(format!("unified-inner/{kind}"), 0.0));

        let mut t = Tracker::default();
        for _ in 0..samples {
            let v = s.vec();
            let g = linear(kind, s.param(kind));
            t.observe(invariant_form(kind, g.linear * v), invariant_form(kind, v));
        }
        out.push(t.finish(format!("quadratic-form/{kind}"), bound));

        let mut t = Tracker::default();
        let id = Isometry::identity(kind);
        for _ in 0..samples {
            let (f, g, h) = (s.isometry(kind), s.isometry(kind), s.isometry(kind));
            let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
            let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
            t.observe_iso(&left, &right);
            t.observe_iso(&compose(&f, &id).unwrap(), &f);
            t.observe_iso(&compose(&id, &f).unwrap(), &f);
            t.observe_iso(&compose(&f, &inverse(&f)).unwrap(), &id);
            t.observe_iso(&compose(&inverse(&f), &f).unwrap(), &id);
            let (a, b) = (s.param(kind), s.param(kind));
            let sum = compose(&linear(kind, a), &linear(kind, b)).unwrap();
            t.observe_mat(&sum.linear, &linear(kind, a + b).linear);
        }
        out.push(t.finish(format!("group-axioms/{kind}"), bound));

        let mut t = Tracker::default();
        let geom = KleinGeometry::new(kind);
        for _ in 0..samples {
            let (g1, g2, p) = (s.isometry(kind), s.isometry(kind), s.vec());
            t.observe_vec(act(&geom, &id, p).unwrap(), p);
            let lhs = act(&geom, &g1, act(&geom, &g2, p).unwrap()).unwrap();
            let rhs = act(&geom, &compose(&g1, &g2).unwrap(), p).unwrap();
            t.observe_vec(lhs, rhs);
        }
        out.push(t.finish(format!("action-axioms/{kind}"), bound));
    }

    let gal = GeometryKind::Galilean;
    let mut t = Tracker::default();
    for _ in 0..samples {
        let (p, dir) = (s.vec(), s.vec());
        let k: [f64; 4] = std::array::from_fn(|_| s.rng.gen_range(-3.0..3.0));
        if dir.max_abs() < 0.1 || (k[3] - k[2]).abs() < 0.1 {
            continue;
        }
        let pts = k.map(|k| p + dir.scale(k));
        let g = s.isometry(gal);
        let img = pts.map(|q| g.apply(q));
        let tol = Tolerance::default();
        match (
            collinear_ratio(pts[0], pts[1], pts[2], pts[3], tol),
            collinear_ratio(img[0], img[1], img[2], img[3], tol),
        ) {
            (Ok(r), Ok(r2)) => t.observe(r2, r),
            _ => t.failed = true,
        }
    }
    out.push(t.finish("collinear-ratio/galilean".to_string(), bound));

    let mut t = Tracker::default();
    for _ in 0..samples {
        let poly = Polygon::new((0..4).map(|_| s.vec()).collect()).unwrap();
        let g = s.isometry(gal);
        t.observe(area(&poly.transformed(&g)), area(&poly));
    }
    out.push(t.finish("area/galilean".to_string(), bound));

    let mut t = Tracker::default();
    for _ in 0..samples {
        let v = s.vec();
        let g = linear(GeometryKind::Minkowski, s.param(GeometryKind::Minkowski));
        if classify(v, tol).ok() != classify(g.linear * v, tol).ok() {
            t.failed = true;
        }
    }
    out.push(t.finish("causal-class/minkowski".to_string(), 0.0));

    out
}
