//! Randomized property suite behind `pedal verify`.
//!
//! Every property draws from its own sampler stream, so the report for a
//! given seed and trial count is byte-for-byte reproducible.

use pedal_core::antipedal::{
    antipedal_area_ratio, antipedal_triangle, constructed_antipedal_ratio, isogonal_conjugate,
    reciprocity_product,
};
use pedal_core::geom::{apply_affine, circumcircle, signed_area};
use pedal_core::inscribe::{
    geometric_mean_identity, homotopic_check, inscribe_b, inscribe_c, recover_ratios,
};
use pedal_core::pedal::{
    constructed_area_ratio, iso_area_locus, pedal_area_ratio, pedal_triangle,
    right_triangle_d_point, signed_decomposition, simson_check,
};
use pedal_core::{GeomError, Point, Tolerance, Triangle};

use crate::commands::farthest_pair;
use crate::format::{Document, Value};
use crate::sampling::Sampler;

/// Points with `|R² − OP²|` inside this fraction of `R²` are skipped where
/// the construction is ill-conditioned.
pub const CIRCLE_BAND: f64 = 1e-6;

/// Ratios exercised by the locus property.
pub const LOCUS_RATIOS: [f64; 4] = [0.05, 0.1875, 0.25, 1.0];

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub tolerance: f64,
    pub samples: u64,
    pub errors: u64,
    pub failures: u64,
    /// Largest finite residual seen.
    pub max_residual: f64,
}

impl PropertyReport {
    fn new(name: &'static str, tolerance: f64) -> Self {
        PropertyReport {
            name,
            tolerance,
            samples: 0,
            errors: 0,
            failures: 0,
            max_residual: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, residual: Result<f64, GeomError>) {
        self.samples += 1;
        match residual {
            Ok(r) if r.is_finite() => {
                self.max_residual = self.max_residual.max(r);
                if r > self.tolerance {
                    self.failures += 1;
                }
            }
            Ok(_) => self.failures += 1,
            Err(_) => {
                self.errors += 1;
                self.failures += 1;
            }
        }
    }

    /// Records a yes/no check as residual 0 or 1.
    fn record_flag(&mut self, ok: Result<bool, GeomError>) {
        self.record(ok.map(|b| if b { 0.0 } else { 1.0 }));
    }
}

pub fn relative(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    if d == 0.0 {
        0.0
    } else {
        d / a.abs().max(b.abs())
    }
}

fn power_gap(p: Point, t: &Triangle, tol: Tolerance) -> Result<f64, GeomError> {
    let c = circumcircle(t, tol)?;
    let op = p.distance(c.center);
    Ok(((c.radius - op) * (c.radius + op)) / (c.radius * c.radius))
}

type Trial = fn(&mut Sampler, &mut PropertyReport, Tolerance);

const PROPERTIES: [(&str, f64, Trial); 19] = [
    ("pedal.area_formula", 1e-9, area_formula),
    ("pedal.seven_points", 1e-12, seven_points),
    ("pedal.right_triangle", 1e-12, right_triangle),
    ("pedal.decomposition", 1e-9, decomposition),
    ("simson.on_circle", 0.0, simson_on_circle),
    ("simson.line_offset", 1e-9, simson_line_offset),
    ("simson.off_circle", 0.0, simson_off_circle),
    ("pedal.locus", 1e-9, locus),
    ("isogonal.incenter", 1e-10, isogonal_incenter),
    ("isogonal.involution", 1e-8, isogonal_involution),
    ("isogonal.concurrency", 1e-9, isogonal_concurrency),
    ("antipedal.area_formula", 1e-8, antipedal_formula),
    ("antipedal.reciprocity", 1e-8, antipedal_reciprocity),
    ("antipedal.round_trip", 1e-8, antipedal_round_trip),
    ("antipedal.homotopy", 1e-9, antipedal_homotopy),
    ("inscribe.geometric_mean", 1e-10, geometric_mean),
    ("inscribe.homotopy", 0.0, homotopy),
    ("inscribe.recover_ratios", 1e-9, recover),
    ("affine.area_ratios", 1e-8, affine_area_ratios),
];

fn area_formula(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let (t, p) = (s.triangle(), s.point());
    r.record((|| {
        Ok(relative(
            pedal_area_ratio(p, &t, tol)?,
            constructed_area_ratio(p, &t, tol)?,
        ))
    })());
}

fn seven_points(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    r.record((|| {
        let o = circumcircle(&t, tol)?.center;
        let mut worst = (pedal_area_ratio(o, &t, tol)? - 0.25).abs();
        for v in t.vertices() {
            let antipode = o * 2.0 - v;
            for p in [v, antipode] {
                worst = worst.max(pedal_area_ratio(p, &t, tol)?.abs());
            }
        }
        Ok(worst)
    })());
}

fn right_triangle(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.right_triangle();
    r.record((|| {
        let (d, _) = right_triangle_d_point(&t, tol)?;
        let [a, _, c] = t.side_lengths();
        // The hypotenuse is a diameter.
        let radius = c / 2.0;
        let expected = a * a / (2.0 * radius * radius);
        let formula = relative(pedal_area_ratio(d, &t, tol)?, expected);
        let built = relative(constructed_area_ratio(d, &t, tol)?, expected);
        Ok(formula.max(built))
    })());
}

fn decomposition(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let (t, p) = (s.triangle(), s.point());
    let Ok(gap) = power_gap(p, &t, tol) else {
        return r.record(Err(GeomError::NonFinite));
    };
    if gap.abs() <= CIRCLE_BAND {
        return;
    }
    r.record((|| {
        let sum = signed_decomposition(p, &t, tol)?;
        if sum.signum() != gap.signum() {
            return Ok(f64::INFINITY);
        }
        let area = signed_area(&pedal_triangle(p, &t, tol)?).abs();
        Ok(relative(sum.abs(), area))
    })());
}

/// Distance of the middle foot from the line through the other two.
pub fn collinearity_offset(feet: &Triangle) -> f64 {
    let (u, v) = farthest_pair(feet);
    let w = feet
        .vertices()
        .into_iter()
        .find(|&f| f != u && f != v)
        .unwrap_or(u);
    let d = v - u;
    let len = d.norm();
    if len == 0.0 {
        0.0
    } else {
        d.cross(w - u).abs() / len
    }
}

fn simson_on_circle(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    let theta = s.angle();
    r.record_flag((|| {
        let p = circumcircle(&t, tol)?.point_at(theta);
        Ok(simson_check(p, &t, tol)?.0)
    })());
}

fn simson_line_offset(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    let theta = s.angle();
    r.record((|| {
        let p = circumcircle(&t, tol)?.point_at(theta);
        Ok(collinearity_offset(&pedal_triangle(p, &t, tol)?) / t.scale())
    })());
}

fn simson_off_circle(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let (t, p) = (s.triangle(), s.point());
    let Ok(c) = circumcircle(&t, tol) else {
        return r.record(Err(GeomError::NonFinite));
    };
    if (p.distance(c.center) - c.radius).abs() < 1e-3 * c.radius {
        return;
    }
    r.record_flag(simson_check(p, &t, tol).map(|(collinear, _)| !collinear));
}

fn locus(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    for ratio in LOCUS_RATIOS {
        let theta = s.angle();
        r.record((|| {
            let circles = iso_area_locus(&t, ratio, tol)?;
            if (ratio > 0.25) != (circles.len() == 1) {
                return Ok(f64::INFINITY);
            }
            let mut worst = 0.0f64;
            for c in circles {
                let got = pedal_area_ratio(c.point_at(theta), &t, tol)?;
                worst = worst.max((got - ratio).abs());
            }
            Ok(worst)
        })());
    }
}

fn isogonal_incenter(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    let i = t.incenter();
    // Slivers can put the incenter inside the band where the conjugate is
    // declared undefined; those are outside the property's domain.
    match circumcircle(&t, tol) {
        Ok(c) if c.contains_on_boundary(i, tol) => return,
        Err(e) => return r.record(Err(e)),
        Ok(_) => {}
    }
    r.record(isogonal_conjugate(i, &t, tol).map(|c| match c.point() {
        Some(q) => q.distance(i) / t.scale(),
        None => f64::INFINITY,
    }));
}

/// An interior point whose isogonal conjugate stays out of the circumcircle
/// band, or `None`. Near that band K hugs a side line and the conjugate
/// hugs a vertex, where both constructions lose their accuracy.
fn interior(s: &mut Sampler, t: &Triangle, tol: Tolerance) -> Option<Point> {
    let k = s.interior_point(t);
    let k1 = isogonal_conjugate(k, t, tol).ok()?.point()?;
    match power_gap(k1, t, tol) {
        Ok(gap) if gap.abs() > CIRCLE_BAND => Some(k),
        _ => None,
    }
}

fn isogonal_involution(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    let Some(k) = interior(s, &t, tol) else {
        return;
    };
    r.record((|| {
        let once = isogonal_conjugate(k, &t, tol)?
            .point()
            .ok_or(GeomError::NonFinite)?;
        let twice = isogonal_conjugate(once, &t, tol)?
            .point()
            .ok_or(GeomError::NonFinite)?;
        Ok(twice.distance(k) / t.scale())
    })());
}

fn isogonal_concurrency(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    let Some(k) = interior(s, &t, tol) else {
        return;
    };
    r.record(isogonal_conjugate(k, &t, tol).map(|c| c.spread / t.scale()));
}

fn antipedal_formula(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    let Some(k) = interior(s, &t, tol) else {
        return;
    };
    r.record((|| {
        Ok(relative(
            antipedal_area_ratio(k, &t, tol)?,
            constructed_antipedal_ratio(k, &t, tol)?,
        ))
    })());
}

fn antipedal_reciprocity(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    let Some(k) = interior(s, &t, tol) else {
        return;
    };
    r.record(reciprocity_product(k, &t, tol).map(|p| (p - 1.0).abs()));
}

fn antipedal_round_trip(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    let Some(k) = interior(s, &t, tol) else {
        return;
    };
    r.record((|| {
        let back = pedal_triangle(k, &antipedal_triangle(k, &t, tol)?, tol)?;
        Ok(back
            .vertices()
            .into_iter()
            .zip(t.vertices())
            .map(|(p, q)| p.distance(q))
            .fold(0.0, f64::max)
            / t.scale())
    })());
}

/// Largest sine between corresponding sides of two triangles.
pub fn side_misalignment(t1: &Triangle, t2: &Triangle) -> f64 {
    let sides = |t: &Triangle| [t.b - t.a, t.c - t.b, t.a - t.c];
    sides(t1)
        .into_iter()
        .zip(sides(t2))
        .map(|(u, v)| u.cross(v).abs() / (u.norm() * v.norm()))
        .fold(0.0, f64::max)
}

fn antipedal_homotopy(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let t = s.triangle();
    let Some(k) = interior(s, &t, tol) else {
        return;
    };
    r.record((|| {
        let outer = antipedal_triangle(k, &t, tol)?;
        let k1 = isogonal_conjugate(k, &t, tol)?
            .point()
            .ok_or(GeomError::NonFinite)?;
        Ok(side_misalignment(&outer, &pedal_triangle(k1, &t, tol)?))
    })());
}

fn geometric_mean(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let (t, k) = (s.triangle(), s.ratios());
    r.record(geometric_mean_identity(&t, &k, tol).map(|(lhs, rhs)| relative(lhs, rhs)));
}

fn homotopy(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let (t, k) = (s.triangle(), s.ratios());
    r.record_flag((|| {
        let (_, c) = inscribe_c(&t, &k, tol)?;
        Ok(homotopic_check(&t, &c, tol)? == Some(0))
    })());
}

fn recover(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let (t, k) = (s.triangle(), s.ratios());
    r.record((|| {
        let got = recover_ratios(&t, &inscribe_b(&t, &k, tol)?, tol)?;
        Ok(got
            .as_array()
            .into_iter()
            .zip(k.as_array())
            .map(|(a, b)| relative(a, b))
            .fold(0.0, f64::max))
    })());
}

fn affine_area_ratios(s: &mut Sampler, r: &mut PropertyReport, tol: Tolerance) {
    let (t, k, m) = (s.triangle(), s.ratios(), s.affine_map());
    r.record((|| {
        let ratios = |t: &Triangle| -> Result<[f64; 2], GeomError> {
            let (b, c) = inscribe_c(t, &k, tol)?;
            let a = signed_area(t).abs();
            Ok([signed_area(&b).abs() / a, signed_area(&c).abs() / a])
        };
        let before = ratios(&t)?;
        let after = ratios(&t.map(|p| apply_affine(&m, p)))?;
        Ok(relative(before[0], after[0]).max(relative(before[1], after[1])))
    })());
}

/// Runs every property for `trials` iterations.
pub fn run(seed: u64, trials: u64, tol: Tolerance) -> Vec<PropertyReport> {
    PROPERTIES
        .iter()
        .enumerate()
        .map(|(stream, &(name, tolerance, trial))| {
            let mut sampler = Sampler::new(seed, stream as u64);
            let mut report = PropertyReport::new(name, tolerance);
            for _ in 0..trials {
                trial(&mut sampler, &mut report, tol);
            }
            report
        })
        .collect()
}

pub fn report_document(seed: u64, trials: u64, reports: &[PropertyReport]) -> Document {
    let mut doc = Document::new();
    doc.comment("randomized property suite")
        .integer("seed", seed as i64)
        .integer("trials", trials as i64);
    for r in reports {
        let key = |field: &str| format!("{}.{field}", r.name);
        doc.number(&key("tolerance"), r.tolerance)
            .number(&key("max_residual"), r.max_residual)
            .integer(&key("samples"), r.samples as i64)
            .integer(&key("errors"), r.errors as i64)
            .integer(&key("failures"), r.failures as i64)
            .set(&key("pass"), Value::Bool(r.passed()));
    }
    doc.set(
        "pass",
        Value::Bool(reports.iter().all(PropertyReport::passed)),
    );
    doc
}
