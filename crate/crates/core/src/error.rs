use thiserror::Error;

pub type Result<T> = std::result::Result<T, GeomError>;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum GeomError {
    #[error("coordinate is not finite")]
    NonFinite,
    #[error("triangle is degenerate (signed area {signed_area:e}, scale {scale:e})")]
    DegenerateTriangle { signed_area: f64, scale: f64 },
    #[error("points coincide (distance {distance:e})")]
    CoincidentPoints { distance: f64 },
    #[error("calibration point lies on the line (evaluation {value:e})")]
    PointOnLine { value: f64 },
    #[error("affine map is singular (determinant {determinant:e})")]
    SingularMap { determinant: f64 },
    #[error("triangle has no right angle at its third vertex (off by {deviation:e} rad)")]
    NotRightTriangle { deviation: f64 },
    #[error("area ratio must be non-negative, got {0}")]
    NegativeRatio(f64),
    #[error("point coincides with vertex {vertex} of the reference triangle")]
    VertexInput { vertex: char },
    #[error(
        "point lies on the circumcircle (|OP - R| = {offset:e}); no bounded antipedal triangle"
    )]
    OnCircumcircle { offset: f64 },
    #[error("|R^2 - OK1^2| = {gap:e} is inside the singular band")]
    NearSingular { gap: f64 },
    #[error("reflected cevians do not concur (spread {spread:e})")]
    NotConcurrent { spread: f64 },
    #[error("division ratio must be positive and finite, got {0}")]
    NonPositiveRatio(f64),
    #[error("inner triangle is degenerate")]
    DegenerateInner,
    #[error("vertex {vertex} of the inscribed triangle is not strictly inside its side")]
    NotInscribed { vertex: usize },
}
