//! Responsive layout engine for stand-alone application windows.
//!
//! A [`LayoutSpec`] declares aspect-ratio classes (for example portrait,
//! classic and landscape around the breakpoints 0.75 and 1.5) and, for each
//! logical block of the interface, a normalized placement per class. At run
//! time the window's width-to-height ratio picks the class, and the active
//! placements are scaled to pixels:
//!
//! ```
//! use regui::{resolve, three_class_rules, Anchor, Block, LayoutSpec, NormRect, Placement, WindowState};
//!
//! let spec = LayoutSpec {
//!     name: "demo".into(),
//!     classes: three_class_rules(0.75, 1.5).unwrap(),
//!     blocks: vec![Block::new("panel0")
//!         .with_placement("classic", Placement::new(NormRect::new(0.01, 0.75, 0.38, 0.175)))],
//! };
//! let layout = resolve(&spec, &WindowState::new(600.0, 800.0).unwrap(), Anchor::None).unwrap();
//! assert_eq!(layout.class.name, "classic");
//! assert_eq!(layout.blocks[0].rect.y, 600.0);
//! ```
//!
//! [`ControllerState`] turns a stream of resize and move events into
//! `reflow` / `rescale` / `anchor_change` / `none` decisions.

pub mod classify;
pub mod controller;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod json;
pub mod resolve;
pub mod spec;
pub mod svg;
pub mod validate;

pub use classify::{classify, validate_partition, ClassId, IssueKind, PartitionIssue};
pub use controller::{
    format_actions, parse_trace, replay_trace, screen_anchor, ActionKind, ControllerState, RejectedEvent, ScreenRegion,
    TraceEntry, UiEvent, UpdateAction,
};
pub use error::{LayoutError, ParseError};
pub use geometry::{aspect_ratio, intersects, mirror_x, scale_to_window, NormRect, PixelRect, WindowState};
pub use resolve::{resolve, resolve_font, ResolvedBlock, ResolvedLayout};
pub use spec::{
    parse_spec, parse_spec_bytes, serialize_spec, three_class_rules, Anchor, Block, ClassRule, LayoutSpec, Placement,
};
pub use svg::export_svg;
pub use validate::{has_errors, validate_spec, Code, Diagnostic, Severity};
