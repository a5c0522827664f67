use pedal_core::GeomError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing field `{0}`")]
    Missing(String),
    #[error("field `{key}` must be {expected}")]
    Type { key: String, expected: &'static str },
    #[error("{0}")]
    Usage(String),
    #[error("{element}: {source}")]
    Geometry {
        element: String,
        #[source]
        source: GeomError,
    },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn geometry(element: impl Into<String>, source: GeomError) -> Self {
        CliError::Geometry {
            element: element.into(),
            source,
        }
    }

    /// 2 for input problems, 3 for geometric precondition failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Geometry { .. } => 3,
            _ => 2,
        }
    }
}
