//! The bundled TeachLCGE fixture and the catalogue of golden cases.
//!
//! Paths are relative to the workspace root: `fixtures/` holds inputs,
//! `goldens/` holds the checked-in expected outputs.

use std::path::{Path, PathBuf};
use thiserror::Error;

use crate::controller::{format_actions, parse_trace, replay_trace};
use crate::error::{LayoutError, ParseError};
use crate::geometry::WindowState;
use crate::resolve::resolve;
use crate::spec::{parse_spec, Anchor, LayoutSpec};
use crate::svg::export_svg;

pub const TEACHLCGE_PATH: &str = "fixtures/teachlcge.regui.json";

/// Raw text of `fixtures/teachlcge.regui.json`.
pub const TEACHLCGE_TEXT: &str = include_str!("../../../fixtures/teachlcge.regui.json");

/// The parsed TeachLCGE fixture.
pub fn teachlcge() -> LayoutSpec {
    parse_spec(TEACHLCGE_TEXT).expect("bundled fixture parses")
}

/// Workspace root as seen from this crate's source tree.
pub fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Svg,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GoldenInput {
    Window {
        width: f64,
        height: f64,
        anchor: Anchor,
        format: OutputFormat,
    },
    Trace {
        events_path: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenCase {
    pub name: &'static str,
    pub spec_path: &'static str,
    pub input: GoldenInput,
    pub expected_path: &'static str,
}

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
}

fn window(name: &'static str, width: f64, height: f64, anchor: Anchor, format: OutputFormat, expected_path: &'static str) -> GoldenCase {
    GoldenCase {
        name,
        spec_path: TEACHLCGE_PATH,
        input: GoldenInput::Window {
            width,
            height,
            anchor,
            format,
        },
        expected_path,
    }
}

/// Every golden case checked by the test suite.
pub fn enumerate_goldens() -> Vec<GoldenCase> {
    use OutputFormat::{Json, Svg};
    vec![
        window("classic_1024x768", 1024.0, 768.0, Anchor::None, Json, "goldens/classic_1024x768.json"),
        window("classic_1024x768_svg", 1024.0, 768.0, Anchor::None, Svg, "goldens/classic_1024x768.svg"),
        window("portrait_600x1000", 600.0, 1000.0, Anchor::None, Json, "goldens/portrait_600x1000.json"),
        window("portrait_600x1000_svg", 600.0, 1000.0, Anchor::None, Svg, "goldens/portrait_600x1000.svg"),
        window("landscape_1600x800", 1600.0, 800.0, Anchor::None, Json, "goldens/landscape_1600x800.json"),
        window("landscape_1600x800_svg", 1600.0, 800.0, Anchor::None, Svg, "goldens/landscape_1600x800.svg"),
        window("boundary_r0.75_600x800", 600.0, 800.0, Anchor::None, Json, "goldens/boundary_600x800.json"),
        window("boundary_r1.5_1200x800", 1200.0, 800.0, Anchor::None, Json, "goldens/boundary_1200x800.json"),
        window("anchor_right_1600x800", 1600.0, 800.0, Anchor::Right, Json, "goldens/landscape_1600x800_right.json"),
        window("anchor_right_1600x800_svg", 1600.0, 800.0, Anchor::Right, Svg, "goldens/landscape_1600x800_right.svg"),
        GoldenCase {
            name: "trace_crossing",
            spec_path: TEACHLCGE_PATH,
            input: GoldenInput::Trace {
                events_path: "fixtures/traces/crossing.jsonl",
            },
            expected_path: "goldens/crossing.jsonl",
        },
        GoldenCase {
            name: "trace_anchor",
            spec_path: TEACHLCGE_PATH,
            input: GoldenInput::Trace {
                events_path: "fixtures/traces/anchor.jsonl",
            },
            expected_path: "goldens/anchor.jsonl",
        },
    ]
}

fn read(root: &Path, rel: &str) -> Result<String, GoldenError> {
    let path = root.join(rel);
    std::fs::read_to_string(&path).map_err(|source| GoldenError::Io { path, source })
}

impl GoldenCase {
    /// Produces this case's output from the current engine.
    pub fn render(&self, root: &Path) -> Result<String, GoldenError> {
        let spec = parse_spec(&read(root, self.spec_path)?)?;
        match &self.input {
            GoldenInput::Window {
                width,
                height,
                anchor,
                format,
            } => {
                let layout = resolve(&spec, &WindowState::new(*width, *height)?, *anchor)?;
                Ok(match format {
                    OutputFormat::Json => layout.to_canonical_string(),
                    OutputFormat::Svg => export_svg(&layout),
                })
            }
            GoldenInput::Trace { events_path } => {
                let events = parse_trace(&read(root, events_path)?)?;
                Ok(format_actions(&replay_trace(&spec, &events)))
            }
        }
    }

    pub fn expected(&self, root: &Path) -> Result<String, GoldenError> {
        read(root, self.expected_path)
    }
}
