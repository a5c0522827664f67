//! Subcommands as document-to-document functions.

use pedal_core::antipedal::{
    antipedal_area_ratio, antipedal_triangle, constructed_antipedal_ratio, isogonal_conjugate,
};
use pedal_core::geom::{circumcircle, signed_area};
use pedal_core::inscribe::{
    geometric_mean_identity, homotopic_check, inscribe_c, recover_ratios, RatioTriple,
};
use pedal_core::pedal::{
    directed_distances, iso_area_locus, pedal_area_ratio, pedal_triangle, sign_profile,
    signed_decomposition, simson_check, Sign,
};
use pedal_core::{GeomError, Point, Tolerance, Triangle};

use crate::error::CliError;
use crate::format::{Document, Value};

fn at(element: &'static str) -> impl Fn(GeomError) -> CliError {
    move |e| CliError::geometry(element, e)
}

/// Reads and validates `triangle`.
pub(crate) fn reference_triangle(input: &Document, tol: Tolerance) -> Result<Triangle, CliError> {
    let t = input.get_triangle("triangle")?;
    t.require_proper(tol).map_err(at("triangle"))?;
    Ok(t)
}

fn query_point(input: &Document) -> Result<Point, CliError> {
    let p = input.get_point("point")?;
    p.check_finite().map_err(at("point"))
}

fn sign_word(s: Sign) -> Value {
    Value::word(match s {
        Sign::Negative => "negative",
        Sign::Zero => "zero",
        Sign::Positive => "positive",
    })
}

pub fn cmd_pedal(input: &Document, tol: Tolerance) -> Result<Document, CliError> {
    let t = reference_triangle(input, tol)?;
    let p = query_point(input)?;
    let circle = circumcircle(&t, tol).map_err(at("triangle"))?;
    let pedal = pedal_triangle(p, &t, tol).map_err(at("point"))?;
    let d = directed_distances(p, &t, tol).map_err(at("point"))?;
    let profile = sign_profile(p, &t, tol).map_err(at("point"))?;
    let formula = pedal_area_ratio(p, &t, tol).map_err(at("point"))?;
    let constructed = signed_area(&pedal).abs() / signed_area(&t).abs();
    let decomposition = signed_decomposition(p, &t, tol).map_err(at("point"))?;

    let mut out = Document::new();
    out.comment("pedal triangle of a point")
        .set("triangle", Value::triangle(&t))
        .set("point", Value::point(p))
        .set("circumcircle.center", Value::point(circle.center))
        .number("circumcircle.radius", circle.radius)
        .comment("feet on BC, CA, AB")
        .set("pedal.triangle", Value::triangle(&pedal))
        .comment("directed distances to BC, CA, AB, positive inside")
        .set("distances", Value::numbers([d.d_a, d.d_b, d.d_c]))
        .comment("signs of d_b*d_c, d_a*d_c, d_a*d_b")
        .set(
            "signs.products",
            Value::List(profile.distance_product_signs.iter().copied().map(sign_word).collect()),
        )
        .set("signs.circumcircle", Value::word(profile.inside_circumcircle.name()))
        .comment("|R^2 - OP^2| / (4 R^2)")
        .number("ratio.formula", formula)
        .comment("|A'B'C'| / |ABC| from the constructed feet")
        .number("ratio.constructed", constructed)
        .number("ratio.difference", (formula - constructed).abs())
        .comment("(d_b d_c sin A + d_a d_b sin C + d_a d_c sin B) / 2, negative outside the circumcircle")
        .number("decomposition", decomposition);
    Ok(out)
}

pub fn cmd_isogonal(input: &Document, tol: Tolerance) -> Result<Document, CliError> {
    let t = reference_triangle(input, tol)?;
    let k = query_point(input)?;
    let r = isogonal_conjugate(k, &t, tol).map_err(at("point"))?;
    let mut out = Document::new();
    out.comment("isogonal conjugate by reflected cevians")
        .set("triangle", Value::triangle(&t))
        .set("point", Value::point(k))
        .set("defined", Value::Bool(r.defined));
    if r.defined {
        out.set("conjugate", Value::point(r.point))
            .comment("largest distance between the pairwise cevian intersections")
            .number("spread", r.spread)
            .number("tolerance", tol.at(t.scale()));
    }
    Ok(out)
}

pub fn cmd_antipedal(input: &Document, tol: Tolerance) -> Result<Document, CliError> {
    let t = reference_triangle(input, tol)?;
    let k = query_point(input)?;
    let outer = antipedal_triangle(k, &t, tol).map_err(at("point"))?;
    let conj = isogonal_conjugate(k, &t, tol).map_err(at("point"))?;
    let k1 = conj
        .point()
        .ok_or_else(|| CliError::geometry("point", GeomError::OnCircumcircle { offset: 0.0 }))?;
    let inner = pedal_triangle(k1, &t, tol).map_err(at("point"))?;
    let formula = antipedal_area_ratio(k, &t, tol).map_err(at("point"))?;
    let constructed = constructed_antipedal_ratio(k, &t, tol).map_err(at("point"))?;
    let area = signed_area(&t).abs();
    let reciprocity = signed_area(&inner).abs() * signed_area(&outer).abs() / (area * area);
    let homotopic = homotopic_check(&outer, &inner, tol)
        .map(|m| m.is_some())
        .unwrap_or(false);

    let mut out = Document::new();
    out.comment("antipedal triangle of a point")
        .set("triangle", Value::triangle(&t))
        .set("point", Value::point(k))
        .comment("T, U, V: perpendiculars at (B, C), (A, C), (A, B)")
        .set("antipedal.triangle", Value::triangle(&outer))
        .set("isogonal.point", Value::point(k1))
        .set("isogonal.pedal_triangle", Value::triangle(&inner))
        .comment("4 R^2 / |R^2 - OK1^2|")
        .number("ratio.formula", formula)
        .comment("|TUV| / |ABC| from the constructed triangle")
        .number("ratio.constructed", constructed)
        .number("ratio.difference", (formula - constructed).abs())
        .comment("|DEF| |TUV| / |ABC|^2")
        .number("reciprocity", reciprocity)
        .set("homotopic", Value::Bool(homotopic));
    Ok(out)
}

pub fn cmd_inscribe(input: &Document, tol: Tolerance) -> Result<Document, CliError> {
    let t = reference_triangle(input, tol)?;
    let ks = input.get_numbers("ratios")?;
    let [k1, k2, k3] = ks[..] else {
        return Err(CliError::Type {
            key: "ratios".into(),
            expected: "three numbers [k1, k2, k3]",
        });
    };
    let k = RatioTriple::new(k1, k2, k3).map_err(at("ratios"))?;
    let (b, c) = inscribe_c(&t, &k, tol).map_err(at("ratios"))?;
    let (lhs, rhs) = geometric_mean_identity(&t, &k, tol).map_err(at("ratios"))?;
    let homotopic = homotopic_check(&t, &c, tol)
        .map_err(at("ratios"))?
        .is_some();
    let recovered = recover_ratios(&t, &b, tol).map_err(at("ratios"))?;

    let mut out = Document::new();
    out.comment("doubly inscribed triangles")
        .set("triangle", Value::triangle(&t))
        .set("ratios", Value::numbers(k.as_array()))
        .set("b.triangle", Value::triangle(&b))
        .set("c.triangle", Value::triangle(&c))
        .number("area.outer", signed_area(&t).abs())
        .number("area.b", signed_area(&b).abs())
        .number("area.c", signed_area(&c).abs())
        .comment("|B|^2 and |A| |C|")
        .number("identity.lhs", lhs)
        .number("identity.rhs", rhs)
        .set("homotopic", Value::Bool(homotopic))
        .comment("ratios measured back from the B-triangle")
        .set("recovered", Value::numbers(recovered.as_array()));
    Ok(out)
}

pub fn cmd_locus(input: &Document, tol: Tolerance) -> Result<Document, CliError> {
    let t = reference_triangle(input, tol)?;
    let ratio = input.get_number("ratio")?;
    let circles = iso_area_locus(&t, ratio, tol).map_err(at("ratio"))?;
    let mut out = Document::new();
    out.comment("circles where |A'B'C'| / |ABC| = ratio")
        .set("triangle", Value::triangle(&t))
        .number("ratio", ratio)
        .number("count", circles.len() as f64);
    for (i, c) in circles.iter().enumerate() {
        out.set(&format!("circle_{i}.center"), Value::point(c.center))
            .number(&format!("circle_{i}.radius"), c.radius);
    }
    Ok(out)
}

pub fn cmd_simson(input: &Document, tol: Tolerance) -> Result<Document, CliError> {
    let t = reference_triangle(input, tol)?;
    let p = query_point(input)?;
    let feet = pedal_triangle(p, &t, tol).map_err(at("point"))?;
    let (collinear, residual) = simson_check(p, &t, tol).map_err(at("point"))?;
    let mut out = Document::new();
    out.comment("collinearity of the pedal feet")
        .set("triangle", Value::triangle(&t))
        .set("point", Value::point(p))
        .set("pedal.triangle", Value::triangle(&feet))
        .comment("2 |A'B'C'| / |ABC|")
        .number("residual", residual)
        .set("collinear", Value::Bool(collinear));
    if collinear {
        let (u, v) = farthest_pair(&feet);
        out.set(
            "simson.line",
            Value::List(vec![Value::point(u), Value::point(v)]),
        );
    }
    Ok(out)
}

/// The two vertices furthest apart.
pub(crate) fn farthest_pair(t: &Triangle) -> (Point, Point) {
    [(t.a, t.b), (t.b, t.c), (t.c, t.a)]
        .into_iter()
        .max_by(|x, y| x.0.distance(x.1).total_cmp(&y.0.distance(y.1)))
        .expect("three pairs")
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerance = Tolerance::DEFAULT;

    fn doc(text: &str) -> Document {
        Document::parse(text).unwrap()
    }

    #[test]
    fn pedal_quarter_point() {
        let out = cmd_pedal(
            &doc("triangle = [[0, 1], [0, 0], [1, 0]]\npoint = [0.25, 0.25]\n"),
            TOL,
        )
        .unwrap();
        assert!((out.get_number("ratio.formula").unwrap() - 0.1875).abs() < 1e-15);
        assert!((out.get_number("ratio.constructed").unwrap() - 0.1875).abs() < 1e-15);
        assert!(out.get_number("ratio.difference").unwrap() <= 1e-12);
        assert_eq!(out.get("signs.circumcircle"), Some(&Value::word("inside")));
    }

    #[test]
    fn pedal_at_circumcenter() {
        let out = cmd_pedal(
            &doc("triangle = [[0, 1], [0, 0], [1, 0]]\npoint = [0.5, 0.5]\n"),
            TOL,
        )
        .unwrap();
        assert!((out.get_number("ratio.formula").unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn degenerate_triangle_is_named() {
        let err = cmd_pedal(
            &doc("triangle = [[0, 0], [1, 1], [2, 2]]\npoint = [0.5, 0.5]\n"),
            TOL,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().starts_with("triangle:"), "{err}");
    }

    #[test]
    fn isogonal_incenter() {
        let t = Triangle::from_coords((0.3, 2.9), (-1.7, -0.4), (3.1, 0.2));
        let mut input = Document::new();
        input
            .set("triangle", Value::triangle(&t))
            .set("point", Value::point(t.incenter()));
        let out = cmd_isogonal(&input, TOL).unwrap();
        let got = out.get_point("conjugate").unwrap();
        assert!(got.distance(t.incenter()) <= out.get_number("tolerance").unwrap());
    }

    #[test]
    fn locus_zero_is_circumcircle() {
        let out = cmd_locus(
            &doc("triangle = [[0, 1], [0, 0], [1, 0]]\nratio = 0\n"),
            TOL,
        )
        .unwrap();
        assert_eq!(out.get_number("count").unwrap(), 1.0);
        assert_eq!(
            out.get_point("circle_0.center").unwrap(),
            Point::new(0.5, 0.5)
        );
        assert!((out.get_number("circle_0.radius").unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn locus_negative_ratio() {
        let err = cmd_locus(
            &doc("triangle = [[0, 1], [0, 0], [1, 0]]\nratio = -1\n"),
            TOL,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn inscribe_unit_chain() {
        let out = cmd_inscribe(
            &doc("triangle = [[0, 1], [0, 0], [1, 0]]\nratios = [1, 1, 1]\n"),
            TOL,
        )
        .unwrap();
        assert_eq!(out.get_number("area.outer").unwrap(), 0.5);
        assert_eq!(out.get_number("area.b").unwrap(), 0.125);
        assert_eq!(out.get_number("area.c").unwrap(), 0.03125);
        assert!(out.get_bool("homotopic").unwrap());
    }

    #[test]
    fn inscribe_wrong_arity() {
        let err = cmd_inscribe(
            &doc("triangle = [[0, 1], [0, 0], [1, 0]]\nratios = [1, 1]\n"),
            TOL,
        )
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn antipedal_reciprocity() {
        let out = cmd_antipedal(
            &doc("triangle = [[0.3, 2.9], [-1.7, -0.4], [3.1, 0.2]]\npoint = [0.9, 0.7]\n"),
            TOL,
        )
        .unwrap();
        assert!((out.get_number("reciprocity").unwrap() - 1.0).abs() < 1e-9);
        assert!(out.get_bool("homotopic").unwrap());
    }

    #[test]
    fn simson_on_circle() {
        let out = cmd_simson(
            &doc("triangle = [[0, 1], [0, 0], [1, 0]]\npoint = [1, 1]\n"),
            TOL,
        )
        .unwrap();
        assert!(out.get_bool("collinear").unwrap());
        assert_eq!(out.get_points("simson.line").unwrap().len(), 2);
    }
}
