//! Library side of the `pedal` command-line tool.

pub mod commands;
pub mod error;
pub mod format;
pub mod sampling;
pub mod svg;
pub mod verify;

pub use error::CliError;
pub use format::{Document, Value};
