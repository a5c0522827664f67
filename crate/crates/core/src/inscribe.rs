//! Doubly-inscribed triangle chains.
//!
//! Given an outer triangle A₁A₂A₃ and positive ratios k₁, k₂, k₃, the
//! B-triangle is inscribed with
//!
//! ```text
//! A₃B₁/B₁A₂ = k₁,  A₁B₂/B₂A₃ = k₂,  A₂B₃/B₃A₁ = k₃
//! ```
//!
//! and the C-triangle is inscribed in it with the same ratios,
//! `B₂C₁/C₁B₃ = k₁`, `B₃C₂/C₂B₁ = k₂`, `B₁C₃/C₃B₂ = k₃`. The C-triangle has
//! sides parallel to the outer one (C₁C₂ ∥ A₁A₂ and so on) and
//! `|B|² = |A|·|C|`.
//!
//! The inner divisions run in the opposite sense to the outer ones. Taking
//! `B₃C₁/C₁B₂ = k₁` instead yields a triangle with the same area but whose
//! sides are parallel to the outer ones only when `k₁k₂ = k₂k₃ = k₃k₁ = 1`.

use crate::error::{GeomError, Result};
use crate::geom::{line_through, signed_area, Point, Tolerance, Triangle};

/// Three strictly positive, finite division ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioTriple {
    k1: f64,
    k2: f64,
    k3: f64,
}

impl RatioTriple {
    pub const ONES: RatioTriple = RatioTriple {
        k1: 1.0,
        k2: 1.0,
        k3: 1.0,
    };

    pub fn new(k1: f64, k2: f64, k3: f64) -> Result<Self> {
        for k in [k1, k2, k3] {
            if !(k.is_finite() && k > 0.0) {
                return Err(GeomError::NonPositiveRatio(k));
            }
        }
        Ok(RatioTriple { k1, k2, k3 })
    }

    pub fn k1(&self) -> f64 {
        self.k1
    }

    pub fn k2(&self) -> f64 {
        self.k2
    }

    pub fn k3(&self) -> f64 {
        self.k3
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.k1, self.k2, self.k3]
    }
}

/// The point N between `m` and `p` with `MN/NP = k`.
pub fn divide_segment(m: Point, p: Point, k: f64, tol: Tolerance) -> Result<Point> {
    if !(k.is_finite() && k > 0.0) {
        return Err(GeomError::NonPositiveRatio(k));
    }
    m.check_finite()?;
    p.check_finite()?;
    let distance = m.distance(p);
    if distance <= tol.at(m.max_abs().max(p.max_abs())) {
        return Err(GeomError::CoincidentPoints { distance });
    }
    let w = 1.0 + k;
    Ok(Point::new((m.x + k * p.x) / w, (m.y + k * p.y) / w))
}

/// Inscribed triangle (B₁, B₂, B₃) with B₁ ∈ A₂A₃, B₂ ∈ A₁A₃, B₃ ∈ A₂A₁.
pub fn inscribe_b(t: &Triangle, k: &RatioTriple, tol: Tolerance) -> Result<Triangle> {
    t.require_proper(tol)?;
    let (a1, a2, a3) = (t.a, t.b, t.c);
    Ok(Triangle::new(
        divide_segment(a3, a2, k.k1, tol)?,
        divide_segment(a1, a3, k.k2, tol)?,
        divide_segment(a2, a1, k.k3, tol)?,
    ))
}

/// Returns `(B-triangle, C-triangle)`.
pub fn inscribe_c(t: &Triangle, k: &RatioTriple, tol: Tolerance) -> Result<(Triangle, Triangle)> {
    let b = inscribe_b(t, k, tol)?;
    if b.is_degenerate(tol) {
        return Err(GeomError::DegenerateInner);
    }
    let (b1, b2, b3) = (b.a, b.b, b.c);
    let c = Triangle::new(
        divide_segment(b2, b3, k.k1, tol)?,
        divide_segment(b3, b1, k.k2, tol)?,
        divide_segment(b1, b2, k.k3, tol)?,
    );
    Ok((b, c))
}

fn sides(t: &Triangle) -> [Point; 3] {
    [t.b - t.a, t.c - t.b, t.a - t.c]
}

/// Side-by-side parallelism test. On success returns the cyclic shift
/// `s` such that vertex `i` of `t1` corresponds to vertex `(i + s) mod 3`
/// of `t2`; shift 0 is tried first.
pub fn homotopic_check(t1: &Triangle, t2: &Triangle, tol: Tolerance) -> Result<Option<usize>> {
    t1.require_proper(tol)?;
    t2.require_proper(tol)?;
    let s1 = sides(t1);
    let s2 = sides(t2);
    let parallel = |u: Point, v: Point| u.cross(v).abs() <= tol.value() * u.norm() * v.norm();
    Ok((0..3).find(|&shift| (0..3).all(|i| parallel(s1[i], s2[(i + shift) % 3]))))
}

/// `(|B|², |A|·|C|)`, both measured by shoelace on the constructed chain.
pub fn geometric_mean_identity(
    t: &Triangle,
    k: &RatioTriple,
    tol: Tolerance,
) -> Result<(f64, f64)> {
    let (b, c) = inscribe_c(t, k, tol)?;
    let area_b = signed_area(&b).abs();
    Ok((
        area_b * area_b,
        signed_area(t).abs() * signed_area(&c).abs(),
    ))
}

/// Ratio of `p` along the segment `from → to`, measured as
/// `|from p| / |p to|`, after checking that `p` is on the line and strictly
/// inside the segment.
fn measured_ratio(from: Point, to: Point, p: Point, vertex: usize, tol: Tolerance) -> Result<f64> {
    let not_inscribed = GeomError::NotInscribed { vertex };
    let line = line_through(from, to, tol).map_err(|_| not_inscribed)?;
    let scale = from.distance(to);
    if line.eval(p).abs() > tol.at(scale) {
        return Err(not_inscribed);
    }
    let d = to - from;
    let s = (p - from).dot(d) / d.norm_squared();
    let inside = tol.value();
    if !(s > inside && s < 1.0 - inside) {
        return Err(not_inscribed);
    }
    Ok(from.distance(p) / p.distance(to))
}

/// Ratios `(k₁, k₂, k₃)` of an inscribed triangle, measured from segment
/// lengths.
pub fn recover_ratios(
    outer: &Triangle,
    inscribed: &Triangle,
    tol: Tolerance,
) -> Result<RatioTriple> {
    outer.require_proper(tol)?;
    let (a1, a2, a3) = (outer.a, outer.b, outer.c);
    let k1 = measured_ratio(a3, a2, inscribed.a, 1, tol)?;
    let k2 = measured_ratio(a1, a3, inscribed.b, 2, tol)?;
    let k3 = measured_ratio(a2, a1, inscribed.c, 3, tol)?;
    RatioTriple::new(k1, k2, k3)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerance = Tolerance::DEFAULT;

    fn close(p: Point, q: Point, eps: f64) -> bool {
        p.distance(q) <= eps
    }

    #[test]
    fn divide_examples() {
        let m = Point::ORIGIN;
        let p = Point::new(1.0, 0.0);
        assert_eq!(
            divide_segment(m, p, 1.0, TOL).unwrap(),
            Point::new(0.5, 0.0)
        );
        assert!(close(
            divide_segment(m, p, 2.0, TOL).unwrap(),
            Point::new(2.0 / 3.0, 0.0),
            1e-16
        ));
    }

    #[test]
    fn divide_errors() {
        let m = Point::ORIGIN;
        let p = Point::new(1.0, 0.0);
        assert_eq!(
            divide_segment(m, p, 0.0, TOL),
            Err(GeomError::NonPositiveRatio(0.0))
        );
        assert_eq!(
            divide_segment(m, p, -2.0, TOL),
            Err(GeomError::NonPositiveRatio(-2.0))
        );
        assert!(matches!(
            divide_segment(p, p, 1.0, TOL),
            Err(GeomError::CoincidentPoints { .. })
        ));
        assert!(RatioTriple::new(1.0, f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn medial_triangle_for_unit_ratios() {
        let b = inscribe_b(&Triangle::UNIT, &RatioTriple::ONES, TOL).unwrap();
        assert_eq!(b.a, Point::new(0.5, 0.0));
        assert_eq!(b.b, Point::new(0.5, 0.5));
        assert_eq!(b.c, Point::new(0.0, 0.5));
    }

    #[test]
    fn unit_chain_areas() {
        let (b, c) = inscribe_c(&Triangle::UNIT, &RatioTriple::ONES, TOL).unwrap();
        assert!((signed_area(&Triangle::UNIT).abs() - 0.5).abs() < 1e-15);
        assert!((signed_area(&b).abs() - 0.125).abs() < 1e-15);
        assert!((signed_area(&c).abs() - 0.03125).abs() < 1e-15);
        let (lhs, rhs) = geometric_mean_identity(&Triangle::UNIT, &RatioTriple::ONES, TOL).unwrap();
        assert!((lhs - 1.0 / 64.0).abs() < 1e-16);
        assert!((rhs - 1.0 / 64.0).abs() < 1e-16);
    }

    #[test]
    fn unit_chain_matches_closed_coordinates() {
        let k = RatioTriple::new(0.7, 2.5, 1.3).unwrap();
        let (k1, k2, k3) = (k.k1(), k.k2(), k.k3());
        let (b, c) = inscribe_c(&Triangle::UNIT, &k, TOL).unwrap();
        assert!(close(b.a, Point::new(1.0 / (1.0 + k1), 0.0), 1e-15));
        assert!(close(
            b.b,
            Point::new(k2 / (1.0 + k2), 1.0 / (1.0 + k2)),
            1e-15
        ));
        assert!(close(b.c, Point::new(0.0, k3 / (1.0 + k3)), 1e-15));
        let c1 = Point::new(
            (k2 / (1.0 + k2)) / (1.0 + k1),
            (1.0 / (1.0 + k2) + k1 * k3 / (1.0 + k3)) / (1.0 + k1),
        );
        let c2 = Point::new(
            (k2 / (1.0 + k1)) / (1.0 + k2),
            (k3 / (1.0 + k3)) / (1.0 + k2),
        );
        let c3 = Point::new(
            (1.0 / (1.0 + k1) + k2 * k3 / (1.0 + k2)) / (1.0 + k3),
            (k3 / (1.0 + k2)) / (1.0 + k3),
        );
        assert!(close(c.a, c1, 1e-15));
        assert!(close(c.b, c2, 1e-15));
        assert!(close(c.c, c3, 1e-15));
    }

    #[test]
    fn unit_chain_closed_areas() {
        for k in [(0.7, 2.5, 1.3), (0.1, 9.0, 3.3), (4.0, 0.25, 0.5)] {
            let k = RatioTriple::new(k.0, k.1, k.2).unwrap();
            let (k1, k2, k3) = (k.k1(), k.k2(), k.k3());
            let (b, c) = inscribe_c(&Triangle::UNIT, &k, TOL).unwrap();
            let num = k1 * k2 * k3 + 1.0;
            let den = (1.0 + k1) * (1.0 + k2) * (1.0 + k3);
            assert!((signed_area(&b).abs() - num / (2.0 * den)).abs() < 1e-15);
            assert!((signed_area(&c).abs() - num * num / (2.0 * den * den)).abs() < 1e-15);
        }
    }

    #[test]
    fn same_sense_inner_division_is_not_homotopic() {
        let k = RatioTriple::new(0.7, 2.5, 1.3).unwrap();
        let b = inscribe_b(&Triangle::UNIT, &k, TOL).unwrap();
        let same_sense = Triangle::new(
            divide_segment(b.c, b.b, k.k1(), TOL).unwrap(),
            divide_segment(b.a, b.c, k.k2(), TOL).unwrap(),
            divide_segment(b.b, b.a, k.k3(), TOL).unwrap(),
        );
        assert_eq!(
            homotopic_check(&Triangle::UNIT, &same_sense, TOL).unwrap(),
            None
        );
        let (_, c) = inscribe_c(&Triangle::UNIT, &k, TOL).unwrap();
        assert_eq!(homotopic_check(&Triangle::UNIT, &c, TOL).unwrap(), Some(0));
        // Both have the same area.
        assert!((signed_area(&same_sense).abs() - signed_area(&c).abs()).abs() < 1e-15);
    }

    #[test]
    fn homotopy_examples() {
        let t = Triangle::from_coords((0.3, 2.9), (-1.7, -0.4), (3.1, 0.2));
        let moved = t.map(|p| p + Point::new(5.0, -2.0));
        assert_eq!(homotopic_check(&t, &moved, TOL).unwrap(), Some(0));

        let (b, c) = inscribe_c(&Triangle::UNIT, &RatioTriple::ONES, TOL).unwrap();
        assert!(homotopic_check(&Triangle::UNIT, &c, TOL).unwrap().is_some());
        assert!(homotopic_check(&Triangle::UNIT, &b, TOL).unwrap().is_some());

        let (s, co) = 10f64.to_radians().sin_cos();
        let rotated = Triangle::UNIT.map(|p| Point::new(co * p.x - s * p.y, s * p.x + co * p.y));
        assert_eq!(
            homotopic_check(&Triangle::UNIT, &rotated, TOL).unwrap(),
            None
        );
    }

    #[test]
    fn homotopy_detects_cyclic_relabeling() {
        let t = Triangle::from_coords((0.3, 2.9), (-1.7, -0.4), (3.1, 0.2));
        let relabeled = Triangle::new(t.b, t.c, t.a).map(|p| p * 0.5);
        assert_eq!(homotopic_check(&t, &relabeled, TOL).unwrap(), Some(2));
    }

    #[test]
    fn extreme_ratios_keep_identity() {
        let t = Triangle::from_coords((0.3, 2.9), (-1.7, -0.4), (3.1, 0.2));
        let k = RatioTriple::new(10.0, 10.0, 0.01).unwrap();
        let (lhs, rhs) = geometric_mean_identity(&t, &k, TOL).unwrap();
        assert!((lhs - rhs).abs() <= 1e-10 * rhs);
    }

    #[test]
    fn recover_medial_ratios() {
        let t = Triangle::from_coords((0.3, 2.9), (-1.7, -0.4), (3.1, 0.2));
        let medial = Triangle::new(t.b.midpoint(t.c), t.a.midpoint(t.c), t.b.midpoint(t.a));
        let k = recover_ratios(&t, &medial, TOL).unwrap();
        for v in k.as_array() {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn recover_round_trip_and_converse() {
        let t = Triangle::from_coords((0.3, 2.9), (-1.7, -0.4), (3.1, 0.2));
        let k = RatioTriple::new(0.3, 4.0, 1.7).unwrap();
        let b = inscribe_b(&t, &k, TOL).unwrap();
        let got = recover_ratios(&t, &b, TOL).unwrap();
        for (x, y) in got.as_array().into_iter().zip(k.as_array()) {
            assert!((x - y).abs() <= 1e-10 * y);
        }
        let (_, c) = inscribe_c(&t, &got, TOL).unwrap();
        assert!(homotopic_check(&t, &c, TOL).unwrap().is_some());
    }

    #[test]
    fn recover_rejects_off_side_vertex() {
        let t = Triangle::UNIT;
        let off = Triangle::new(
            Point::new(0.5, 0.1),
            Point::new(0.5, 0.5),
            Point::new(0.0, 0.5),
        );
        assert_eq!(
            recover_ratios(&t, &off, TOL),
            Err(GeomError::NotInscribed { vertex: 1 })
        );
        let outside = Triangle::new(
            Point::new(0.5, 0.0),
            Point::new(0.5, 0.5),
            Point::new(0.0, 1.5),
        );
        assert_eq!(
            recover_ratios(&t, &outside, TOL),
            Err(GeomError::NotInscribed { vertex: 3 })
        );
    }
}
