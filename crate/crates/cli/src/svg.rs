//! SVG figures of pedal, Simson, locus, antipedal and inscribed-chain
//! constructions.
//!
//! Layers are emitted in a fixed order: circumcircle (with locus circles),
//! reference triangle, constructions, points, labels. The y axis is flipped
//! so the figure reads in the usual mathematical orientation.

use std::fmt::Write as _;

use pedal_core::antipedal::{antipedal_triangle, isogonal_conjugate};
use pedal_core::geom::circumcircle;
use pedal_core::inscribe::{inscribe_c, RatioTriple};
use pedal_core::pedal::{iso_area_locus, pedal_triangle, simson_check};
use pedal_core::{Circle, GeomError, Point, Tolerance, Triangle};

use crate::commands::{farthest_pair, reference_triangle};
use crate::error::CliError;
use crate::format::Document;

/// What to draw. Built from a document with [`SceneDescription::from_document`].
#[derive(Debug, Clone, PartialEq)]
pub struct SceneDescription {
    pub triangle: Triangle,
    pub pedal_points: Vec<Point>,
    pub antipedal_points: Vec<Point>,
    pub circumcircle: bool,
    pub pedal: bool,
    pub simson: bool,
    pub locus: Vec<f64>,
    pub inscribed: Option<RatioTriple>,
}

fn optional<T>(r: Result<T, CliError>) -> Result<Option<T>, CliError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(CliError::Missing(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

impl SceneDescription {
    pub fn new(triangle: Triangle) -> Self {
        SceneDescription {
            triangle,
            pedal_points: Vec::new(),
            antipedal_points: Vec::new(),
            circumcircle: true,
            pedal: true,
            simson: false,
            locus: Vec::new(),
            inscribed: None,
        }
    }

    /// Keys: `triangle`, `pedal.points`, `antipedal.points`,
    /// `draw.circumcircle`, `draw.pedal`, `draw.simson`, `draw.locus`
    /// (list of ratios), `draw.inscribed` (`[k1, k2, k3]`).
    pub fn from_document(doc: &Document, tol: Tolerance) -> Result<Self, CliError> {
        let mut scene = SceneDescription::new(reference_triangle(doc, tol)?);
        scene.pedal_points = optional(doc.get_points("pedal.points"))?.unwrap_or_default();
        scene.antipedal_points = optional(doc.get_points("antipedal.points"))?.unwrap_or_default();
        if let Some(b) = optional(doc.get_bool("draw.circumcircle"))? {
            scene.circumcircle = b;
        }
        if let Some(b) = optional(doc.get_bool("draw.pedal"))? {
            scene.pedal = b;
        }
        if let Some(b) = optional(doc.get_bool("draw.simson"))? {
            scene.simson = b;
        }
        scene.locus = optional(doc.get_numbers("draw.locus"))?.unwrap_or_default();
        if let Some(ks) = optional(doc.get_numbers("draw.inscribed"))? {
            let [k1, k2, k3] = ks[..] else {
                return Err(CliError::Type {
                    key: "draw.inscribed".into(),
                    expected: "three numbers [k1, k2, k3]",
                });
            };
            scene.inscribed = Some(
                RatioTriple::new(k1, k2, k3)
                    .map_err(|e| CliError::geometry("draw.inscribed", e))?,
            );
        }
        scene.validate(tol)?;
        Ok(scene)
    }

    /// Checks every element against the preconditions of the construction
    /// that draws it.
    pub fn validate(&self, tol: Tolerance) -> Result<(), CliError> {
        let t = &self.triangle;
        t.require_proper(tol)
            .map_err(|e| CliError::geometry("triangle", e))?;
        for (i, p) in self.pedal_points.iter().enumerate() {
            pedal_triangle(*p, t, tol)
                .map_err(|e| CliError::geometry(format!("pedal.points[{i}]"), e))?;
        }
        for (i, k) in self.antipedal_points.iter().enumerate() {
            let element = || format!("antipedal.points[{i}]");
            antipedal_triangle(*k, t, tol).map_err(|e| CliError::geometry(element(), e))?;
            let conj =
                isogonal_conjugate(*k, t, tol).map_err(|e| CliError::geometry(element(), e))?;
            if !conj.defined {
                return Err(CliError::geometry(
                    element(),
                    GeomError::OnCircumcircle { offset: 0.0 },
                ));
            }
        }
        for (i, r) in self.locus.iter().enumerate() {
            iso_area_locus(t, *r, tol)
                .map_err(|e| CliError::geometry(format!("draw.locus[{i}]"), e))?;
        }
        if let Some(k) = &self.inscribed {
            inscribe_c(t, k, tol).map_err(|e| CliError::geometry("draw.inscribed", e))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
enum Style {
    Circumcircle,
    Locus,
    Reference,
    Pedal,
    Perpendicular,
    Simson,
    Antipedal,
    IsogonalPedal,
    Inscribed,
}

impl Style {
    fn attrs(self, stroke: f64) -> String {
        let (color, width, dash, fill) = match self {
            Style::Circumcircle => ("#555555", 1.0, None, "none"),
            Style::Locus => ("#8a2be2", 0.8, Some(4.0), "none"),
            Style::Reference => ("#000000", 1.5, None, "none"),
            Style::Pedal => ("#c0392b", 1.2, None, "#c0392b22"),
            Style::Perpendicular => ("#c0392b", 0.6, Some(3.0), "none"),
            Style::Simson => ("#d35400", 1.2, None, "none"),
            Style::Antipedal => ("#2471a3", 1.2, None, "#2471a322"),
            Style::IsogonalPedal => ("#1e8449", 1.2, None, "#1e844922"),
            Style::Inscribed => ("#7d3c98", 1.0, None, "none"),
        };
        let mut s = format!(
            r#"fill="{fill}" stroke="{color}" stroke-width="{}""#,
            num(width * stroke)
        );
        if let Some(d) = dash {
            let _ = write!(
                s,
                r#" stroke-dasharray="{} {}""#,
                num(d * stroke),
                num(d * stroke)
            );
        }
        s
    }
}

enum Shape {
    Circle(Circle, Style),
    Polygon(Vec<Point>, Style),
    Segment(Point, Point, Style),
}

struct Marker {
    at: Point,
    label: String,
}

struct Figure {
    circles: Vec<Shape>,
    reference: Vec<Shape>,
    constructions: Vec<Shape>,
    markers: Vec<Marker>,
}

fn num(x: f64) -> String {
    // Shortest representation that round-trips; never uses exponents.
    let s = format!("{x}");
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn build(scene: &SceneDescription, tol: Tolerance) -> Result<Figure, GeomError> {
    let t = &scene.triangle;
    let circle = circumcircle(t, tol)?;
    let mut fig = Figure {
        circles: Vec::new(),
        reference: vec![Shape::Polygon(t.vertices().to_vec(), Style::Reference)],
        constructions: Vec::new(),
        markers: Vec::new(),
    };
    if scene.circumcircle {
        fig.circles.push(Shape::Circle(circle, Style::Circumcircle));
        fig.markers.push(Marker {
            at: circle.center,
            label: "O".into(),
        });
    }
    for r in &scene.locus {
        for c in iso_area_locus(t, *r, tol)? {
            if c.radius > 0.0 {
                fig.circles.push(Shape::Circle(c, Style::Locus));
            }
        }
    }
    for (name, v) in ["A", "B", "C"].into_iter().zip(t.vertices()) {
        fig.markers.push(Marker {
            at: v,
            label: name.into(),
        });
    }

    let many = scene.pedal_points.len() > 1;
    for (i, &p) in scene.pedal_points.iter().enumerate() {
        let suffix = if many {
            format!("{}", i + 1)
        } else {
            String::new()
        };
        let feet = pedal_triangle(p, t, tol)?;
        if scene.pedal {
            fig.constructions
                .push(Shape::Polygon(feet.vertices().to_vec(), Style::Pedal));
            for f in feet.vertices() {
                fig.constructions
                    .push(Shape::Segment(p, f, Style::Perpendicular));
            }
        }
        if scene.simson && simson_check(p, t, tol)?.0 {
            let (u, v) = farthest_pair(&feet);
            fig.constructions.push(Shape::Segment(u, v, Style::Simson));
        }
        fig.markers.push(Marker {
            at: p,
            label: format!("P{suffix}"),
        });
        for (name, f) in ["A'", "B'", "C'"].into_iter().zip(feet.vertices()) {
            fig.markers.push(Marker {
                at: f,
                label: format!("{name}{suffix}"),
            });
        }
    }

    let many = scene.antipedal_points.len() > 1;
    for (i, &k) in scene.antipedal_points.iter().enumerate() {
        let suffix = if many {
            format!("{}", i + 1)
        } else {
            String::new()
        };
        let outer = antipedal_triangle(k, t, tol)?;
        let conj = isogonal_conjugate(k, t, tol)?;
        let k1 = conj
            .point()
            .ok_or(GeomError::OnCircumcircle { offset: 0.0 })?;
        let inner = pedal_triangle(k1, t, tol)?;
        fig.constructions
            .push(Shape::Polygon(outer.vertices().to_vec(), Style::Antipedal));
        fig.constructions.push(Shape::Polygon(
            inner.vertices().to_vec(),
            Style::IsogonalPedal,
        ));
        for v in t.vertices() {
            fig.constructions
                .push(Shape::Segment(k, v, Style::Perpendicular));
        }
        fig.markers.push(Marker {
            at: k,
            label: format!("K{suffix}"),
        });
        fig.markers.push(Marker {
            at: k1,
            label: format!("K{suffix}'"),
        });
        for (name, v) in ["T", "U", "V", "D", "E", "F"]
            .into_iter()
            .zip(outer.vertices().into_iter().chain(inner.vertices()))
        {
            fig.markers.push(Marker {
                at: v,
                label: format!("{name}{suffix}"),
            });
        }
    }

    if let Some(k) = &scene.inscribed {
        let (b, c) = inscribe_c(t, k, tol)?;
        fig.constructions
            .push(Shape::Polygon(b.vertices().to_vec(), Style::Inscribed));
        fig.constructions
            .push(Shape::Polygon(c.vertices().to_vec(), Style::Inscribed));
        for (name, v) in ["B1", "B2", "B3", "C1", "C2", "C3"]
            .into_iter()
            .zip(b.vertices().into_iter().chain(c.vertices()))
        {
            fig.markers.push(Marker {
                at: v,
                label: name.into(),
            });
        }
    }
    Ok(fig)
}

/// Axis-aligned bounds `(min_x, min_y, max_x, max_y)` in scene coordinates.
fn bounds(fig: &Figure) -> (f64, f64, f64, f64) {
    let mut b = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    let mut grow = |p: Point, r: f64| {
        b.0 = b.0.min(p.x - r);
        b.1 = b.1.min(p.y - r);
        b.2 = b.2.max(p.x + r);
        b.3 = b.3.max(p.y + r);
    };
    for shape in fig
        .circles
        .iter()
        .chain(&fig.reference)
        .chain(&fig.constructions)
    {
        match shape {
            Shape::Circle(c, _) => grow(c.center, c.radius),
            Shape::Polygon(ps, _) => ps.iter().for_each(|p| grow(*p, 0.0)),
            Shape::Segment(p, q, _) => {
                grow(*p, 0.0);
                grow(*q, 0.0);
            }
        }
    }
    for m in &fig.markers {
        grow(m.at, 0.0);
    }
    b
}

fn write_shape(out: &mut String, shape: &Shape, stroke: f64) {
    match shape {
        Shape::Circle(c, style) => {
            let _ = writeln!(
                out,
                r#"    <circle cx="{}" cy="{}" r="{}" {}/>"#,
                num(c.center.x),
                num(-c.center.y),
                num(c.radius),
                style.attrs(stroke)
            );
        }
        Shape::Polygon(ps, style) => {
            let pts: Vec<String> = ps
                .iter()
                .map(|p| format!("{},{}", num(p.x), num(-p.y)))
                .collect();
            let _ = writeln!(
                out,
                r#"    <polygon points="{}" {}/>"#,
                pts.join(" "),
                style.attrs(stroke)
            );
        }
        Shape::Segment(p, q, style) => {
            let _ = writeln!(
                out,
                r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" {}/>"#,
                num(p.x),
                num(-p.y),
                num(q.x),
                num(-q.y),
                style.attrs(stroke)
            );
        }
    }
}

pub fn render(scene: &SceneDescription, tol: Tolerance) -> Result<String, CliError> {
    scene.validate(tol)?;
    let fig = build(scene, tol).map_err(|e| CliError::geometry("scene", e))?;
    let (x0, y0, x1, y1) = bounds(&fig);
    let extent = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let margin = 0.1 * extent;
    // Flipped y: the scene's top edge y1 becomes −y1.
    let (vx, vy) = (x0 - margin, -y1 - margin);
    let (vw, vh) = (x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
    let stroke = extent / 400.0;
    let font = extent / 30.0;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="800" height="{}">"#,
        num(vx),
        num(vy),
        num(vw),
        num(vh),
        num((800.0 * vh / vw).round())
    );
    let layers: [(&str, &[Shape]); 3] = [
        ("circumcircle", &fig.circles),
        ("reference", &fig.reference),
        ("constructions", &fig.constructions),
    ];
    for (id, shapes) in layers {
        let _ = writeln!(out, r#"  <g id="{id}">"#);
        for s in shapes {
            write_shape(&mut out, s, stroke);
        }
        out.push_str("  </g>\n");
    }
    out.push_str("  <g id=\"points\">\n");
    for m in &fig.markers {
        let _ = writeln!(
            out,
            r#"    <circle cx="{}" cy="{}" r="{}" fill="black"/>"#,
            num(m.at.x),
            num(-m.at.y),
            num(2.0 * stroke)
        );
    }
    out.push_str("  </g>\n");
    let _ = writeln!(
        out,
        r#"  <g id="labels" font-family="sans-serif" font-size="{}">"#,
        num(font)
    );
    for m in &fig.markers {
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}">{}</text>"#,
            num(m.at.x + 0.5 * font),
            num(-m.at.y - 0.5 * font),
            escape(&m.label)
        );
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('\'', "&apos;")
        .replace('"', "&quot;")
}

pub fn cmd_svg(input: &Document, tol: Tolerance) -> Result<String, CliError> {
    render(&SceneDescription::from_document(input, tol)?, tol)
}
