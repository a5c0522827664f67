//! Plane primitives: points, normalized lines, circles, triangles and
//! affine maps.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{GeomError, Result};

/// Relative threshold for the "on a line", "on a circle" and "degenerate"
/// predicates. Every use multiplies it by a characteristic length (or
/// squared length) of the input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(pub f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Absolute threshold for a quantity measured in units of `scale`.
    #[inline]
    pub fn at(self, scale: f64) -> f64 {
        self.0 * scale
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// A position in the Cartesian plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn check_finite(self) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(GeomError::NonFinite)
        }
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Counterclockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    #[inline]
    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Largest absolute coordinate.
    #[inline]
    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// An oriented line `alpha·x + beta·y + gamma = 0` kept in normalized form
/// (`alpha² + beta² = 1`), so evaluating it at a point gives the directed
/// distance to the line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl Line {
    /// Normalizes arbitrary coefficients. Returns `None` when both `alpha`
    /// and `beta` vanish.
    pub fn from_coefficients(alpha: f64, beta: f64, gamma: f64) -> Option<Line> {
        let n = alpha.hypot(beta);
        if n == 0.0 || !n.is_finite() || !gamma.is_finite() {
            return None;
        }
        Some(Line {
            alpha: alpha / n,
            beta: beta / n,
            gamma: gamma / n,
        })
    }

    /// The line through `p` with unit normal `normal`.
    pub fn with_normal(p: Point, normal: Point) -> Option<Line> {
        let n = normal.norm();
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        let u = normal * (1.0 / n);
        Some(Line {
            alpha: u.x,
            beta: u.y,
            gamma: -u.dot(p),
        })
    }

    #[inline]
    pub fn normal(&self) -> Point {
        Point::new(self.alpha, self.beta)
    }

    /// Unit direction, the normal turned clockwise.
    #[inline]
    pub fn direction(&self) -> Point {
        Point::new(self.beta, -self.alpha)
    }

    /// Directed distance from `p`.
    #[inline]
    pub fn eval(&self, p: Point) -> f64 {
        self.alpha * p.x + self.beta * p.y + self.gamma
    }

    #[inline]
    pub fn negated(&self) -> Line {
        Line {
            alpha: -self.alpha,
            beta: -self.beta,
            gamma: -self.gamma,
        }
    }

    /// Flips the line, if needed, so that `p` evaluates non-negative. No
    /// tolerance check; see [`calibrate_interior`] for the checked form.
    pub(crate) fn facing(&self, p: Point) -> Line {
        if self.eval(p) < 0.0 {
            self.negated()
        } else {
            *self
        }
    }

    /// Intersection with `other`, or `None` when the lines are parallel to
    /// within `tol` (sine of the angle between them).
    pub fn intersect(&self, other: &Line, tol: Tolerance) -> Option<Point> {
        let det = self.alpha * other.beta - self.beta * other.alpha;
        if det.abs() <= tol.value() {
            return None;
        }
        let x = (self.beta * other.gamma - other.beta * self.gamma) / det;
        let y = (other.alpha * self.gamma - self.alpha * other.gamma) / det;
        Some(Point::new(x, y))
    }
}

/// A circle; used mostly for circumcircles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub const fn new(center: Point, radius: f64) -> Self {
        Circle { center, radius }
    }

    /// Point at angle `theta` (radians, measured from the +x axis).
    pub fn point_at(&self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(
            self.center.x + self.radius * c,
            self.center.y + self.radius * s,
        )
    }

    /// Signed radial offset `|p − center| − radius`.
    pub fn radial_offset(&self, p: Point) -> f64 {
        p.distance(self.center) - self.radius
    }

    /// Whether `p` lies on the circle within `tol·radius`.
    pub fn contains_on_boundary(&self, p: Point, tol: Tolerance) -> bool {
        self.radial_offset(p).abs() <= tol.at(self.radius)
    }
}

/// An ordered vertex triple. Orientation is carried by the sign of
/// [`signed_area`]; degeneracy is a property, not a construction error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    /// The reference triangle `(0,1), (0,0), (1,0)`.
    pub const UNIT: Triangle = Triangle {
        a: Point::new(0.0, 1.0),
        b: Point::new(0.0, 0.0),
        c: Point::new(1.0, 0.0),
    };

    pub const fn new(a: Point, b: Point, c: Point) -> Self {
        Triangle { a, b, c }
    }

    pub fn from_coords(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Self {
        Triangle::new(a.into(), b.into(), c.into())
    }

    #[inline]
    pub fn vertices(&self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    pub fn is_finite(&self) -> bool {
        self.vertices().iter().all(|p| p.is_finite())
    }

    /// Side lengths `(|BC|, |CA|, |AB|)`, i.e. the sides opposite A, B, C.
    pub fn side_lengths(&self) -> [f64; 3] {
        [
            self.b.distance(self.c),
            self.c.distance(self.a),
            self.a.distance(self.b),
        ]
    }

    /// Characteristic length: the longest side.
    pub fn scale(&self) -> f64 {
        let [la, lb, lc] = self.side_lengths();
        la.max(lb).max(lc)
    }

    pub fn centroid(&self) -> Point {
        Point::new(
            (self.a.x + self.b.x + self.c.x) / 3.0,
            (self.a.y + self.b.y + self.c.y) / 3.0,
        )
    }

    pub fn incenter(&self) -> Point {
        let [la, lb, lc] = self.side_lengths();
        let p = la + lb + lc;
        Point::new(
            (la * self.a.x + lb * self.b.x + lc * self.c.x) / p,
            (la * self.a.y + lb * self.b.y + lc * self.c.y) / p,
        )
    }

    pub fn is_degenerate(&self, tol: Tolerance) -> bool {
        let s = self.scale();
        signed_area(self).abs() <= tol.at(s * s)
    }

    /// Fails with `NonFinite` or `DegenerateTriangle`.
    pub fn require_proper(&self, tol: Tolerance) -> Result<()> {
        if !self.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if self.is_degenerate(tol) {
            return Err(GeomError::DegenerateTriangle {
                signed_area: signed_area(self),
                scale: self.scale(),
            });
        }
        Ok(())
    }

    /// Side lines `(BC, CA, AB)` oriented so the centroid is on the
    /// positive side. The triangle must be non-degenerate.
    pub fn side_lines(&self) -> [Line; 3] {
        let g = self.centroid();
        let raw = [
            unchecked_line(self.b, self.c),
            unchecked_line(self.c, self.a),
            unchecked_line(self.a, self.b),
        ];
        raw.map(|l| l.facing(g))
    }

    /// Sines of the interior angles at A, B, C from the side lengths and
    /// area (`sin A = 2|Δ| / (|AB|·|AC|)`), always in `(0, 1]`.
    pub fn angle_sines(&self) -> [f64; 3] {
        let [la, lb, lc] = self.side_lengths();
        let twice = 2.0 * signed_area(self).abs();
        [twice / (lb * lc), twice / (lc * la), twice / (la * lb)]
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Triangle {
        Triangle::new(f(self.a), f(self.b), f(self.c))
    }
}

fn unchecked_line(p: Point, q: Point) -> Line {
    let d = q - p;
    let n = d.perp() * (1.0 / d.norm());
    Line {
        alpha: n.x,
        beta: n.y,
        gamma: -n.dot(p),
    }
}

/// Half the scalar cross product `(b − a) × (c − a)`: positive iff the
/// vertices run counterclockwise.
///
/// Evaluated on the lexicographically sorted vertices and multiplied by the
/// parity of the sort, so any vertex swap negates the result bit-exactly.
pub fn signed_area(t: &Triangle) -> f64 {
    let mut v = t.vertices();
    let mut parity = 1.0;
    let before = |p: &Point, q: &Point| p.x > q.x || (p.x == q.x && p.y > q.y);
    for (i, j) in [(0, 1), (1, 2), (0, 1)] {
        if before(&v[i], &v[j]) {
            v.swap(i, j);
            parity = -parity;
        }
    }
    parity * 0.5 * (v[1] - v[0]).cross(v[2] - v[0])
}

/// The circle through the three vertices.
pub fn circumcircle(t: &Triangle, tol: Tolerance) -> Result<Circle> {
    t.require_proper(tol)?;
    // Work relative to `a` to keep the magnitudes small.
    let u = t.b - t.a;
    let v = t.c - t.a;
    let d = 2.0 * u.cross(v);
    let uu = u.norm_squared();
    let vv = v.norm_squared();
    let offset = Point::new((v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d);
    Ok(Circle::new(t.a + offset, offset.norm()))
}

/// The normalized line through `p` and `q`, oriented with its normal a
/// counterclockwise quarter turn from `q − p`.
pub fn line_through(p: Point, q: Point, tol: Tolerance) -> Result<Line> {
    p.check_finite()?;
    q.check_finite()?;
    let distance = p.distance(q);
    let scale = p.max_abs().max(q.max_abs());
    if distance <= tol.at(scale) {
        return Err(GeomError::CoincidentPoints { distance });
    }
    Ok(unchecked_line(p, q))
}

/// Returns `l` or its negation so that `interior` evaluates strictly
/// positive. The on-line threshold is relative to
/// `max(|interior|∞, |gamma|)`.
pub fn calibrate_interior(l: &Line, interior: Point, tol: Tolerance) -> Result<Line> {
    interior.check_finite()?;
    let value = l.eval(interior);
    let scale = interior.max_abs().max(l.gamma.abs());
    if value.abs() <= tol.at(scale) {
        return Err(GeomError::PointOnLine { value });
    }
    Ok(if value > 0.0 { *l } else { l.negated() })
}

/// Foot of the perpendicular from `p` to the normalized line `l`.
#[inline]
pub fn project_onto(p: Point, l: &Line) -> Point {
    p - l.normal() * l.eval(p)
}

/// A linear map followed by a translation:
/// `(x, y) ↦ (m11·x + m12·y + t1, m21·x + m22·y + t2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
    pub t1: f64,
    pub t2: f64,
}

impl AffineMap {
    pub const IDENTITY: AffineMap = AffineMap {
        m11: 1.0,
        m12: 0.0,
        m21: 0.0,
        m22: 1.0,
        t1: 0.0,
        t2: 0.0,
    };

    pub fn new(m11: f64, m12: f64, m21: f64, m22: f64, t1: f64, t2: f64) -> Result<Self> {
        let m = AffineMap {
            m11,
            m12,
            m21,
            m22,
            t1,
            t2,
        };
        let determinant = m.determinant();
        if determinant == 0.0 || !determinant.is_finite() || !t1.is_finite() || !t2.is_finite() {
            return Err(GeomError::SingularMap { determinant });
        }
        Ok(m)
    }

    pub fn translation(dx: f64, dy: f64) -> Self {
        AffineMap {
            t1: dx,
            t2: dy,
            ..AffineMap::IDENTITY
        }
    }

    #[inline]
    pub fn determinant(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Image of a direction vector (linear part only).
    #[inline]
    pub fn apply_vector(&self, v: Point) -> Point {
        Point::new(
            self.m11 * v.x + self.m12 * v.y,
            self.m21 * v.x + self.m22 * v.y,
        )
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let t = apply_affine(self, Point::new(other.t1, other.t2));
        AffineMap {
            m11: self.m11 * other.m11 + self.m12 * other.m21,
            m12: self.m11 * other.m12 + self.m12 * other.m22,
            m21: self.m21 * other.m11 + self.m22 * other.m21,
            m22: self.m21 * other.m12 + self.m22 * other.m22,
            t1: t.x,
            t2: t.y,
        }
    }

    pub fn inverse(&self) -> Result<AffineMap> {
        let det = self.determinant();
        if det == 0.0 || !det.is_finite() {
            return Err(GeomError::SingularMap { determinant: det });
        }
        let m11 = self.m22 / det;
        let m12 = -self.m12 / det;
        let m21 = -self.m21 / det;
        let m22 = self.m11 / det;
        Ok(AffineMap {
            m11,
            m12,
            m21,
            m22,
            t1: -(m11 * self.t1 + m12 * self.t2),
            t2: -(m21 * self.t1 + m22 * self.t2),
        })
    }
}

#[inline]
pub fn apply_affine(m: &AffineMap, p: Point) -> Point {
    Point::new(
        m.m11 * p.x + m.m12 * p.y + m.t1,
        m.m21 * p.x + m.m22 * p.y + m.t2,
    )
}

/// The affine map sending `t.a → (0,1)`, `t.b → (0,0)`, `t.c → (1,0)`.
pub fn affine_to_unit(t: &Triangle, tol: Tolerance) -> Result<AffineMap> {
    t.require_proper(tol)?;
    // Columns (c − b, a − b) map to the unit axes; invert that matrix.
    let e1 = t.c - t.b;
    let e2 = t.a - t.b;
    let from_unit = AffineMap {
        m11: e1.x,
        m12: e2.x,
        m21: e1.y,
        m22: e2.y,
        t1: t.b.x,
        t2: t.b.y,
    };
    from_unit.inverse()
}
