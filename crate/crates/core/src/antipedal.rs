//! Isogonal conjugates and antipedal triangles.
//!
//! The antipedal triangle TUV of K is bounded by the lines through A, B, C
//! perpendicular to KA, KB, KC. With K₁ the isogonal conjugate of K,
//!
//! ```text
//! |TUV| / |ABC| = 4R² / |R² − OK₁²|
//! ```
//!
//! which is the reciprocal of the pedal ratio at K₁.

use crate::error::{GeomError, Result};
use crate::geom::{circumcircle, signed_area, Line, Point, Tolerance, Triangle};
use crate::pedal::pedal_area_ratio;

/// Lines whose angle has a smaller sine are treated as parallel.
const PARALLEL_SINE: Tolerance = Tolerance(1e-12);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsogonalResult {
    /// Weighted mean of the pairwise intersections of the reflected
    /// cevians. Only meaningful when `defined`.
    pub point: Point,
    pub defined: bool,
    /// Largest distance from `point` to the reflected cevians.
    pub spread: f64,
}

impl IsogonalResult {
    pub fn point(&self) -> Option<Point> {
        self.defined.then_some(self.point)
    }

    fn at_infinity() -> Self {
        IsogonalResult {
            point: Point::new(f64::NAN, f64::NAN),
            defined: false,
            spread: f64::NAN,
        }
    }
}

fn reject_vertex(k: Point, t: &Triangle, tol: Tolerance) -> Result<()> {
    let limit = tol.at(t.scale());
    for (v, name) in t.vertices().into_iter().zip(['A', 'B', 'C']) {
        if k.distance(v) <= limit {
            return Err(GeomError::VertexInput { vertex: name });
        }
    }
    Ok(())
}

/// Unit direction of the reflection of the cevian from `vertex` through `k`
/// in the internal bisector of the angle formed with `left` and `right`.
fn reflected_cevian(vertex: Point, left: Point, right: Point, k: Point) -> Option<Point> {
    let u = left - vertex;
    let v = right - vertex;
    let bisector = u * (1.0 / u.norm()) + v * (1.0 / v.norm());
    let w = bisector * (1.0 / bisector.norm());
    let d = k - vertex;
    let reflected = w * (2.0 * d.dot(w)) - d;
    let len = reflected.norm();
    (len > 0.0 && len.is_finite()).then(|| reflected * (1.0 / len))
}

/// Isogonal conjugate by reflecting the cevians AK, BK, CK in the internal
/// angle bisectors and intersecting the reflections.
///
/// The three pairwise intersections are averaged with weights `sin²` of
/// their crossing angles, so a nearly parallel pair cannot spoil the
/// estimate. `spread` is the largest distance from the result to the three
/// reflected lines. `defined` is false when `k` is within `tol·R` of the
/// circumcircle (the reflections are parallel there). A spread beyond
/// `tol·max(scale, |K₁ − G|)` is reported as `NotConcurrent`.
pub fn isogonal_conjugate(k: Point, t: &Triangle, tol: Tolerance) -> Result<IsogonalResult> {
    t.require_proper(tol)?;
    k.check_finite()?;
    reject_vertex(k, t, tol)?;

    let circle = circumcircle(t, tol)?;
    if circle.contains_on_boundary(k, tol) {
        return Ok(IsogonalResult::at_infinity());
    }

    let anchors = t.vertices();
    let directions = [
        reflected_cevian(t.a, t.b, t.c, k),
        reflected_cevian(t.b, t.c, t.a, k),
        reflected_cevian(t.c, t.a, t.b, k),
    ];
    let [Some(da), Some(db), Some(dc)] = directions else {
        return Ok(IsogonalResult::at_infinity());
    };
    let dirs = [da, db, dc];

    let mut sum = Point::ORIGIN;
    let mut weight = 0.0;
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let sine = dirs[i].cross(dirs[j]);
        if sine.abs() <= PARALLEL_SINE.value() {
            continue;
        }
        // Anchored at a vertex: p = V_i + s·d_i.
        let s = (anchors[j] - anchors[i]).cross(dirs[j]) / sine;
        let w = sine * sine;
        sum = sum + (anchors[i] + dirs[i] * s) * w;
        weight += w;
    }
    if weight == 0.0 {
        return Ok(IsogonalResult::at_infinity());
    }
    let point = sum * (1.0 / weight);
    if !point.is_finite() {
        return Ok(IsogonalResult::at_infinity());
    }
    let spread = anchors
        .iter()
        .zip(dirs)
        .map(|(&v, d)| (point - v).cross(d).abs())
        .fold(0.0, f64::max);
    let reach = t.scale().max(point.distance(t.centroid()));
    if spread > tol.at(reach) {
        return Err(GeomError::NotConcurrent { spread });
    }
    Ok(IsogonalResult {
        point,
        defined: true,
        spread,
    })
}

/// Antipedal triangle `(T, U, V)`: T where the perpendiculars at B and C
/// meet, U at A and C, V at A and B.
pub fn antipedal_triangle(k: Point, t: &Triangle, tol: Tolerance) -> Result<Triangle> {
    t.require_proper(tol)?;
    k.check_finite()?;
    reject_vertex(k, t, tol)?;
    let circle = circumcircle(t, tol)?;
    let offset = circle.radial_offset(k);
    if offset.abs() <= tol.at(circle.radius) {
        return Err(GeomError::OnCircumcircle { offset });
    }

    // `k` is not a vertex, so every normal is non-zero.
    let perpendicular = |v: Point| Line::with_normal(v, v - k).expect("non-zero normal");
    let pa = perpendicular(t.a);
    let pb = perpendicular(t.b);
    let pc = perpendicular(t.c);
    // Parallel perpendiculars happen when K is on a side line; the triangle
    // is unbounded then.
    let meet = |l1: &Line, l2: &Line| {
        l1.intersect(l2, PARALLEL_SINE)
            .ok_or(GeomError::OnCircumcircle { offset })
    };
    let apex_t = meet(&pb, &pc)?;
    let apex_u = meet(&pa, &pc)?;
    let apex_v = meet(&pa, &pb)?;
    let out = Triangle::new(apex_t, apex_u, apex_v);
    if !out.is_finite() {
        return Err(GeomError::OnCircumcircle { offset });
    }
    Ok(out)
}

/// `4R² / |R² − OK₁²|` with K₁ the isogonal conjugate of `k`.
pub fn antipedal_area_ratio(k: Point, t: &Triangle, tol: Tolerance) -> Result<f64> {
    // Surface the construction's own errors first.
    antipedal_triangle(k, t, tol)?;
    let conj = isogonal_conjugate(k, t, tol)?;
    let k1 = conj
        .point()
        .ok_or(GeomError::OnCircumcircle { offset: 0.0 })?;
    let circle = circumcircle(t, tol)?;
    let r2 = circle.radius * circle.radius;
    let ok1 = k1.distance(circle.center);
    let gap = (circle.radius - ok1) * (circle.radius + ok1);
    if gap.abs() <= tol.at(r2) {
        return Err(GeomError::NearSingular { gap });
    }
    Ok(4.0 * r2 / gap.abs())
}

/// `|TUV| / |ABC|` measured on the constructed antipedal triangle.
pub fn constructed_antipedal_ratio(k: Point, t: &Triangle, tol: Tolerance) -> Result<f64> {
    let outer = antipedal_triangle(k, t, tol)?;
    Ok(signed_area(&outer).abs() / signed_area(t).abs())
}

/// `pedal_ratio(K₁) · antipedal_ratio(K)`, which is 1 for every admissible K.
pub fn reciprocity_product(k: Point, t: &Triangle, tol: Tolerance) -> Result<f64> {
    let conj = isogonal_conjugate(k, t, tol)?;
    let k1 = conj
        .point()
        .ok_or(GeomError::OnCircumcircle { offset: 0.0 })?;
    Ok(pedal_area_ratio(k1, t, tol)? * antipedal_area_ratio(k, t, tol)?)
}
