//! Resize/move event protocol.
//!
//! Each event is classified against the previous one:
//!
//! | event  | condition                           | action          |
//! |--------|-------------------------------------|-----------------|
//! | resize | no previous class, or class changed | `reflow`        |
//! | resize | same class, different dimensions    | `rescale`       |
//! | resize | identical dimensions                | `none`          |
//! | move   | screen anchor changed               | `anchor_change` |
//! | move   | anchor unchanged                    | `none`          |
//!
//! Every non-`none` action carries a freshly resolved layout. The controller
//! never rescales a previous layout in place.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::fmt;

use crate::classify::{classify, ClassId};
use crate::error::{LayoutError, ParseError};
use crate::geometry::WindowState;
use crate::resolve::{resolve, ResolvedLayout};
use crate::spec::{Anchor, LayoutSpec};

/// One input event, in trace-file form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum UiEvent {
    Resize { w: f64, h: f64 },
    Move { x: f64, y: f64, screen_w: f64, screen_h: f64 },
}

/// Horizontal third of the screen holding the window's center.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScreenRegion {
    Left,
    Center,
    Right,
}

impl ScreenRegion {
    /// Mirroring anchor implied by the region; the center band mirrors nothing.
    pub fn anchor(self) -> Anchor {
        match self {
            ScreenRegion::Left => Anchor::Left,
            ScreenRegion::Center => Anchor::None,
            ScreenRegion::Right => Anchor::Right,
        }
    }
}

/// Left if the window center is in the left third of the screen, right if in
/// the right third, center otherwise (the third boundaries count as center).
pub fn screen_anchor(window_x: f64, window_w: f64, screen_width: f64) -> ScreenRegion {
    let center = window_x + window_w / 2.0;
    if center < screen_width / 3.0 {
        ScreenRegion::Left
    } else if center > 2.0 * screen_width / 3.0 {
        ScreenRegion::Right
    } else {
        ScreenRegion::Center
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionKind {
    Reflow,
    Rescale,
    AnchorChange,
    None,
}

impl ActionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ActionKind::Reflow => "reflow",
            ActionKind::Rescale => "rescale",
            ActionKind::AnchorChange => "anchor_change",
            ActionKind::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum UpdateAction {
    Reflow(ResolvedLayout),
    Rescale(ResolvedLayout),
    AnchorChange(ResolvedLayout),
    None,
}

impl UpdateAction {
    pub fn kind(&self) -> ActionKind {
        match self {
            UpdateAction::Reflow(_) => ActionKind::Reflow,
            UpdateAction::Rescale(_) => ActionKind::Rescale,
            UpdateAction::AnchorChange(_) => ActionKind::AnchorChange,
            UpdateAction::None => ActionKind::None,
        }
    }

    pub fn layout(&self) -> Option<&ResolvedLayout> {
        match self {
            UpdateAction::Reflow(l) | UpdateAction::Rescale(l) | UpdateAction::AnchorChange(l) => Some(l),
            UpdateAction::None => None,
        }
    }
}

/// An event the controller refused; its state is left untouched.
#[derive(Debug, Clone, PartialEq)]
pub struct RejectedEvent {
    pub event: UiEvent,
    pub error: LayoutError,
}

impl fmt::Display for RejectedEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rejected event: {}", self.error)
    }
}

impl std::error::Error for RejectedEvent {}

/// Controller state. Single owner; events must arrive in order.
#[derive(Debug, Clone)]
pub struct ControllerState {
    spec: LayoutSpec,
    last_window: Option<WindowState>,
    last_class: Option<ClassId>,
    last_anchor: Anchor,
}

impl ControllerState {
    pub fn new(spec: LayoutSpec) -> Self {
        Self {
            spec,
            last_window: None,
            last_class: None,
            last_anchor: Anchor::None,
        }
    }

    pub fn spec(&self) -> &LayoutSpec {
        &self.spec
    }

    pub fn last_window(&self) -> Option<&WindowState> {
        self.last_window.as_ref()
    }

    pub fn last_class(&self) -> Option<&ClassId> {
        self.last_class.as_ref()
    }

    pub fn last_anchor(&self) -> Anchor {
        self.last_anchor
    }

    /// Applies one event. On rejection the state is unchanged.
    pub fn process_event(&mut self, ev: &UiEvent) -> Result<UpdateAction, RejectedEvent> {
        let reject = |error| RejectedEvent { event: *ev, error };
        match *ev {
            UiEvent::Resize { w, h } => {
                let window = WindowState::new(w, h).map_err(reject)?;
                if let Some(last) = &self.last_window {
                    if last.width() == w && last.height() == h {
                        return Ok(UpdateAction::None);
                    }
                }
                let class = classify(window.aspect_ratio(), &self.spec.classes).map_err(reject)?;
                let layout = resolve(&self.spec, &window, self.last_anchor).map_err(reject)?;
                let changed = self.last_class.as_ref() != Some(&class);
                self.last_window = Some(window);
                self.last_class = Some(class);
                Ok(if changed {
                    UpdateAction::Reflow(layout)
                } else {
                    UpdateAction::Rescale(layout)
                })
            }
            UiEvent::Move { x, screen_w, .. } => {
                if screen_w.is_nan() || screen_w <= 0.0 {
                    return Err(reject(LayoutError::DegenerateScreen(screen_w)));
                }
                let window_w = self.last_window.map_or(0.0, |w| w.width());
                let anchor = screen_anchor(x, window_w, screen_w).anchor();
                if anchor == self.last_anchor {
                    return Ok(UpdateAction::None);
                }
                let Some(window) = self.last_window else {
                    // Nothing laid out yet; remember the anchor for the first resize.
                    self.last_anchor = anchor;
                    return Ok(UpdateAction::None);
                };
                let layout = resolve(&self.spec, &window, anchor).map_err(reject)?;
                self.last_anchor = anchor;
                Ok(UpdateAction::AnchorChange(layout))
            }
        }
    }
}

pub type TraceEntry = Result<UpdateAction, RejectedEvent>;

/// Folds `events` through a fresh controller, one entry per event.
pub fn replay_trace(spec: &LayoutSpec, events: &[UiEvent]) -> Vec<TraceEntry> {
    let mut state = ControllerState::new(spec.clone());
    events.iter().map(|ev| state.process_event(ev)).collect()
}

/// Reads a trace file: one JSON event object per line, blank lines ignored.
pub fn parse_trace(text: &str) -> Result<Vec<UiEvent>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            serde_json::from_str(line).map_err(|err| {
                let ParseError::Syntax { column, message, .. } = ParseError::from(err) else {
                    unreachable!("serde errors map to syntax errors")
                };
                ParseError::Syntax {
                    line: i + 1,
                    column,
                    message,
                }
            })
        })
        .collect()
}

/// Document form of one trace entry, e.g.
/// `{"action":"reflow","class":"classic","layout":{...}}`.
pub fn entry_to_value(entry: &TraceEntry) -> Value {
    let mut m = Map::new();
    match entry {
        Ok(action) => {
            m.insert("action".into(), Value::String(action.kind().as_str().into()));
            if let Some(layout) = action.layout() {
                m.insert("class".into(), Value::String(layout.class.name.clone()));
                m.insert("anchor".into(), Value::String(layout.anchor.as_str().into()));
                m.insert("layout".into(), layout.to_value());
            }
        }
        Err(rejected) => {
            m.insert("action".into(), Value::String("rejected".into()));
            m.insert("error".into(), Value::String(rejected.error.to_string()));
        }
    }
    Value::Object(m)
}

/// The whole action stream, one compact JSON object per line.
pub fn format_actions(entries: &[TraceEntry]) -> String {
    let mut out = String::new();
    for entry in entries {
        out.push_str(&entry_to_value(entry).to_string());
        out.push('\n');
    }
    out
}
