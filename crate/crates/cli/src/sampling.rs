//! Deterministic sampling of test configurations.
//!
//! Triangles have vertices uniform in `[-10, 10]²` and are rejected when
//! `|signed area| < 1e-3`; query points are uniform in `[-20, 20]²`. Each
//! consumer gets its own ChaCha stream keyed by `(seed, stream)`, so adding
//! a property never perturbs the samples of another.

use pedal_core::geom::signed_area;
use pedal_core::inscribe::RatioTriple;
use pedal_core::{AffineMap, Point, Triangle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const VERTEX_RANGE: f64 = 10.0;
pub const POINT_RANGE: f64 = 20.0;
pub const MIN_AREA: f64 = 1e-3;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn angle(&mut self) -> f64 {
        self.uniform(0.0, std::f64::consts::TAU)
    }

    fn point_in(&mut self, range: f64) -> Point {
        Point::new(self.uniform(-range, range), self.uniform(-range, range))
    }

    pub fn triangle(&mut self) -> Triangle {
        loop {
            let t = Triangle::new(
                self.point_in(VERTEX_RANGE),
                self.point_in(VERTEX_RANGE),
                self.point_in(VERTEX_RANGE),
            );
            if signed_area(&t).abs() >= MIN_AREA {
                return t;
            }
        }
    }

    pub fn point(&mut self) -> Point {
        self.point_in(POINT_RANGE)
    }

    /// Uniform point in the interior of `t`.
    pub fn interior_point(&mut self, t: &Triangle) -> Point {
        let mut u = self.uniform(0.0, 1.0);
        let mut v = self.uniform(0.0, 1.0);
        if u + v > 1.0 {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        t.a + (t.b - t.a) * u + (t.c - t.a) * v
    }

    /// Right triangle with the right angle at its third vertex; legs in
    /// `[0.5, 10]`.
    pub fn right_triangle(&mut self) -> Triangle {
        let c = self.point_in(VERTEX_RANGE);
        let theta = self.angle();
        let leg_a = self.uniform(0.5, 10.0);
        let leg_b = self.uniform(0.5, 10.0);
        let (s, co) = theta.sin_cos();
        let u = Point::new(co, s);
        let b = c + u * leg_a;
        let a = c + u.perp() * leg_b;
        Triangle::new(a, b, c)
    }

    /// Ratios uniform in `[0.1, 10]`.
    pub fn ratios(&mut self) -> RatioTriple {
        let mut k = || self.rng.random_range(0.1..=10.0);
        RatioTriple::new(k(), k(), k()).expect("positive by construction")
    }

    /// Invertible map with entries in `[-3, 3]` and `|det| ≥ 0.1`.
    pub fn affine_map(&mut self) -> AffineMap {
        loop {
            let m = [(); 4].map(|_| self.uniform(-3.0, 3.0));
            let t = [(); 2].map(|_| self.uniform(-5.0, 5.0));
            if (m[0] * m[3] - m[1] * m[2]).abs() >= 0.1 {
                return AffineMap::new(m[0], m[1], m[2], m[3], t[0], t[1]).expect("invertible");
            }
        }
    }
}
