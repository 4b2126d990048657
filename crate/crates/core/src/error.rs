use thiserror::Error;

/// Failures of the layout engine proper (classification, resolution, events).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LayoutError {
    #[error("degenerate window {width}x{height}: both dimensions must be positive and finite")]
    DegenerateWindow { width: f64, height: f64 },

    #[error("invalid breakpoints ({lo}, {hi}): require 0 < lo <= hi")]
    InvalidBreakpoints { lo: f64, hi: f64 },

    #[error("aspect ratio {0} must be positive")]
    NonPositiveRatio(f64),

    #[error("no layout class covers aspect ratio {0}")]
    UnclassifiableRatio(f64),

    #[error("spec invalid: {0}")]
    SpecInvalid(String),

    #[error("screen width {0} must be positive")]
    DegenerateScreen(f64),
}

/// Failures while reading a layout spec document.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
}

impl ParseError {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl From<serde_json::Error> for ParseError {
    fn from(err: serde_json::Error) -> Self {
        let message = err.to_string();
        // serde_json appends " at line L column C"; keep only the description.
        let message = match message.rfind(" at line ") {
            Some(idx) => message[..idx].to_string(),
            None => message,
        };
        ParseError::Syntax {
            line: err.line(),
            column: err.column(),
            message,
        }
    }
}
