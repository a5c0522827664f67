//! Pedal triangles and the pedal area ratio.
//!
//! For a reference triangle ABC with circumcircle (O, R) and any point P,
//! the feet of the perpendiculars from P to BC, CA, AB form the pedal
//! triangle A'B'C', and
//!
//! ```text
//! |A'B'C'| / |ABC| = |R² − OP²| / 4R²
//! ```
//!
//! The same area can be written with directed distances `d_a, d_b, d_c`
//! (positive inside ABC) as
//!
//! ```text
//! S = (d_b·d_c·sin A + d_a·d_b·sin C + d_a·d_c·sin B) / 2
//! ```
//!
//! where `S = +|A'B'C'|` for P inside the circumcircle and `−|A'B'C'|`
//! outside. Signs are computed from the geometry; there are no region
//! lookup tables here.

use crate::error::{GeomError, Result};
use crate::geom::{circumcircle, project_onto, signed_area, Circle, Point, Tolerance, Triangle};

/// Signed distances from a point to the side lines BC, CA, AB, positive on
/// the side containing the triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectedDistances {
    pub d_a: f64,
    pub d_b: f64,
    pub d_c: f64,
}

impl DirectedDistances {
    /// Products `(d_b·d_c, d_a·d_c, d_a·d_b)`.
    pub fn products(&self) -> [f64; 3] {
        [
            self.d_b * self.d_c,
            self.d_a * self.d_c,
            self.d_a * self.d_b,
        ]
    }

    pub fn all_positive(&self) -> bool {
        self.d_a > 0.0 && self.d_b > 0.0 && self.d_c > 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: f64) -> Sign {
        if v > 0.0 {
            Sign::Positive
        } else if v < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// Where a point sits relative to the circumcircle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CirclePosition {
    Inside,
    On,
    Outside,
}

impl CirclePosition {
    pub fn name(self) -> &'static str {
        match self {
            CirclePosition::Inside => "inside",
            CirclePosition::On => "on",
            CirclePosition::Outside => "outside",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignProfile {
    /// Signs of `(d_b·d_c, d_a·d_c, d_a·d_b)`.
    pub distance_product_signs: [Sign; 3],
    pub inside_circumcircle: CirclePosition,
}

fn require_point(p: Point) -> Result<()> {
    p.check_finite().map(|_| ())
}

/// Feet of the perpendiculars from `p`, ordered (on BC, on CA, on AB). The
/// result is degenerate when `p` is on the circumcircle.
pub fn pedal_triangle(p: Point, t: &Triangle, tol: Tolerance) -> Result<Triangle> {
    t.require_proper(tol)?;
    require_point(p)?;
    let [bc, ca, ab] = t.side_lines();
    Ok(Triangle::new(
        project_onto(p, &bc),
        project_onto(p, &ca),
        project_onto(p, &ab),
    ))
}

pub fn directed_distances(p: Point, t: &Triangle, tol: Tolerance) -> Result<DirectedDistances> {
    t.require_proper(tol)?;
    require_point(p)?;
    let [bc, ca, ab] = t.side_lines();
    Ok(DirectedDistances {
        d_a: bc.eval(p),
        d_b: ca.eval(p),
        d_c: ab.eval(p),
    })
}

/// `S = (d_b·d_c·sin A + d_a·d_b·sin C + d_a·d_c·sin B) / 2`.
pub fn signed_decomposition(p: Point, t: &Triangle, tol: Tolerance) -> Result<f64> {
    let d = directed_distances(p, t, tol)?;
    let [sin_a, sin_b, sin_c] = t.angle_sines();
    Ok(0.5 * (d.d_b * d.d_c * sin_a + d.d_a * d.d_b * sin_c + d.d_a * d.d_c * sin_b))
}

/// `R² − OP²`, factored as `(R − OP)(R + OP)` to keep precision near the
/// circle.
fn power_gap(circle: &Circle, p: Point) -> f64 {
    let op = p.distance(circle.center);
    (circle.radius - op) * (circle.radius + op)
}

/// `|R² − OP²| / 4R²`.
pub fn pedal_area_ratio(p: Point, t: &Triangle, tol: Tolerance) -> Result<f64> {
    require_point(p)?;
    let circle = circumcircle(t, tol)?;
    let r2 = circle.radius * circle.radius;
    Ok(power_gap(&circle, p).abs() / (4.0 * r2))
}

/// `|pedal area| / |reference area|` measured directly on the constructed
/// pedal triangle.
pub fn constructed_area_ratio(p: Point, t: &Triangle, tol: Tolerance) -> Result<f64> {
    let pedal = pedal_triangle(p, t, tol)?;
    Ok(signed_area(&pedal).abs() / signed_area(t).abs())
}

/// For a triangle right-angled at C, returns the reflection D of B through
/// C together with `a² / 2R²` (`a = |BC|`), the pedal area ratio at D.
pub fn right_triangle_d_point(t: &Triangle, tol: Tolerance) -> Result<(Point, f64)> {
    t.require_proper(tol)?;
    let ca = t.a - t.c;
    let cb = t.b - t.c;
    let cos_c = ca.dot(cb) / (ca.norm() * cb.norm());
    // Angle at C minus a right angle.
    let deviation = cos_c.clamp(-1.0, 1.0).asin();
    if deviation.abs() > 1e-9 {
        return Err(GeomError::NotRightTriangle { deviation });
    }
    let d = t.c * 2.0 - t.b;
    let a2 = cb.norm_squared();
    let b2 = ca.norm_squared();
    let r2 = (a2 + b2) / 4.0;
    Ok((d, a2 / (2.0 * r2)))
}

/// Collinearity test for the pedal feet.
///
/// The residual is `2·|A'B'C'| / |ABC|`, which near the circumcircle equals
/// `|OP − R| / R` to first order, so `residual ≤ tol` agrees with the
/// `|OP − R| ≤ tol·R` band. For slivers with a huge circumcircle the
/// rounding error of the residual can exceed `tol`; the threshold is
/// widened by an estimate of that error.
pub fn simson_check(p: Point, t: &Triangle, tol: Tolerance) -> Result<(bool, f64)> {
    let pedal = pedal_triangle(p, t, tol)?;
    let area = signed_area(t).abs();
    let residual = 2.0 * signed_area(&pedal).abs() / area;
    // Each foot carries an absolute error of a few ulps of the largest
    // coordinate involved.
    let magnitude = t
        .vertices()
        .iter()
        .fold(p.max_abs(), |m, v| m.max(v.max_abs()));
    let spread = pedal.scale();
    let noise = 16.0 * f64::EPSILON * magnitude * spread / area;
    Ok((residual <= tol.value() + noise, residual))
}

/// Circles, concentric with the circumcircle, on which the pedal area ratio
/// equals `ratio`. Inner circle first when present.
pub fn iso_area_locus(t: &Triangle, ratio: f64, tol: Tolerance) -> Result<Vec<Circle>> {
    if ratio.is_nan() || ratio < 0.0 {
        return Err(GeomError::NegativeRatio(ratio));
    }
    if !ratio.is_finite() {
        return Err(GeomError::NonFinite);
    }
    let circle = circumcircle(t, tol)?;
    if ratio == 0.0 {
        return Ok(vec![circle]);
    }
    let r = circle.radius;
    let mut out = Vec::with_capacity(2);
    if ratio <= 0.25 {
        out.push(Circle::new(circle.center, r * (1.0 - 4.0 * ratio).sqrt()));
    }
    out.push(Circle::new(circle.center, r * (1.0 + 4.0 * ratio).sqrt()));
    Ok(out)
}

pub fn sign_profile(p: Point, t: &Triangle, tol: Tolerance) -> Result<SignProfile> {
    let d = directed_distances(p, t, tol)?;
    let circle = circumcircle(t, tol)?;
    let offset = circle.radial_offset(p);
    let inside_circumcircle = if offset.abs() <= tol.at(circle.radius) {
        CirclePosition::On
    } else if offset < 0.0 {
        CirclePosition::Inside
    } else {
        CirclePosition::Outside
    };
    Ok(SignProfile {
        distance_product_signs: d.products().map(Sign::of),
        inside_circumcircle,
    })
}
