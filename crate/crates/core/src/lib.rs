//! Pedal and antipedal triangle geometry.
//!
//! The crate is organised around four modules:
//!
//! - [`geom`]: points, normalized lines, circles, triangles, affine maps.
//! - [`pedal`]: pedal triangles, directed distances, the pedal area ratio
//!   `|R² − OP²| / 4R²`, Simson collinearity and the iso-area circles.
//! - [`antipedal`]: isogonal conjugation and antipedal triangles.
//! - [`inscribe`]: doubly-inscribed triangle chains and the geometric-mean
//!   area identity.
//!
//! Every operation is a pure function over `Copy` values. Predicates that
//! decide "on a line", "on a circle" or "degenerate" take a [`Tolerance`]
//! which is always multiplied by a characteristic length of the input.

pub mod antipedal;
pub mod error;
pub mod geom;
pub mod inscribe;
pub mod pedal;

pub use error::{GeomError, Result};
pub use geom::{AffineMap, Circle, Line, Point, Tolerance, Triangle};
