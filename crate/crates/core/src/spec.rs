//! Layout spec data model and its JSON document format.
//!
//! A spec declares a set of aspect-ratio classes and a list of logical
//! blocks. Each block carries, per class, a normalized placement. A block
//! with no placement for a class is hidden while that class is active.
//!
//! Parsing is purely structural: it checks shapes and types and reports the
//! offending field path, but never checks semantics such as interval
//! coverage or rect bounds. That is the job of [`crate::validate`].

use indexmap::IndexMap;
use serde_json::{Map, Value};
use std::fmt;
use std::str::FromStr;

use crate::error::{LayoutError, ParseError};
use crate::geometry::NormRect;
use crate::json::to_canonical_string;

/// Horizontal screen anchor used to opt blocks into mirroring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub enum Anchor {
    #[default]
    None,
    Left,
    Right,
}

impl Anchor {
    pub fn as_str(self) -> &'static str {
        match self {
            Anchor::None => "none",
            Anchor::Left => "left",
            Anchor::Right => "right",
        }
    }
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Anchor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Anchor::None),
            "left" => Ok(Anchor::Left),
            "right" => Ok(Anchor::Right),
            other => Err(format!("unknown anchor `{other}` (expected none, left or right)")),
        }
    }
}

/// A named aspect-ratio interval with explicit endpoint inclusivity.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassRule {
    pub name: String,
    pub lo: f64,
    pub lo_inclusive: bool,
    /// May be `f64::INFINITY`.
    pub hi: f64,
    pub hi_inclusive: bool,
}

impl ClassRule {
    pub fn new(name: impl Into<String>, lo: f64, lo_inclusive: bool, hi: f64, hi_inclusive: bool) -> Self {
        Self {
            name: name.into(),
            lo,
            lo_inclusive,
            hi,
            hi_inclusive,
        }
    }

    /// Exact membership test; no epsilon at the endpoints.
    pub fn contains(&self, ratio: f64) -> bool {
        let above_lo = ratio > self.lo || (self.lo_inclusive && ratio == self.lo);
        let below_hi = ratio < self.hi || (self.hi_inclusive && ratio == self.hi);
        above_lo && below_hi
    }

    /// Interval notation, e.g. `[0.75, 1.5]` or `(1.5, inf)`.
    pub fn interval(&self) -> String {
        format!(
            "{}{}, {}{}",
            if self.lo_inclusive { '[' } else { '(' },
            fmt_bound(self.lo),
            fmt_bound(self.hi),
            if self.hi_inclusive { ']' } else { ')' },
        )
    }
}

pub(crate) fn fmt_bound(v: f64) -> String {
    if v == f64::INFINITY {
        "inf".to_string()
    } else {
        format!("{v}")
    }
}

/// Placement of one block within one class.
#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    pub rect: NormRect,
    pub visible: bool,
    /// Font size as a fraction of the block's own pixel height.
    pub font: Option<f64>,
    /// Opaque key/value pairs handed through to the renderer untouched.
    pub style: IndexMap<String, String>,
    /// Mirror this placement horizontally when the window sits at this anchor.
    pub mirror_on_anchor: Anchor,
}

impl Placement {
    pub fn new(rect: NormRect) -> Self {
        Self {
            rect,
            visible: true,
            font: None,
            style: IndexMap::new(),
            mirror_on_anchor: Anchor::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub id: String,
    pub label: Option<String>,
    /// Free-form authoring note; ignored by the engine.
    pub note: Option<String>,
    pub placements: IndexMap<String, Placement>,
}

impl Block {
    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            label: None,
            note: None,
            placements: IndexMap::new(),
        }
    }

    pub fn with_placement(mut self, class: impl Into<String>, placement: Placement) -> Self {
        self.placements.insert(class.into(), placement);
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LayoutSpec {
    pub name: String,
    pub classes: Vec<ClassRule>,
    pub blocks: Vec<Block>,
}

impl LayoutSpec {
    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn block(&self, id: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.id == id)
    }
}

/// The conventional three-class scheme around two breakpoints `b1 <= b2`:
/// `portrait = (0, b1)`, `classic = [b1, b2]`, `landscape = (b2, inf)`.
/// Both breakpoints belong to the middle class.
pub fn three_class_rules(b1: f64, b2: f64) -> Result<Vec<ClassRule>, LayoutError> {
    if !(b1 > 0.0 && b1.is_finite() && b2.is_finite() && b2 >= b1) {
        return Err(LayoutError::InvalidBreakpoints { lo: b1, hi: b2 });
    }
    Ok(vec![
        ClassRule::new("portrait", 0.0, false, b1, false),
        ClassRule::new("classic", b1, true, b2, true),
        ClassRule::new("landscape", b2, false, f64::INFINITY, false),
    ])
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parses spec bytes, rejecting invalid UTF-8 as a syntax error.
pub fn parse_spec_bytes(bytes: &[u8]) -> Result<LayoutSpec, ParseError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse_spec(text),
        Err(err) => {
            let prefix = &bytes[..err.valid_up_to()];
            let line = prefix.iter().filter(|&&b| b == b'\n').count() + 1;
            let column = prefix.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
            Err(ParseError::Syntax {
                line,
                column,
                message: "invalid UTF-8".into(),
            })
        }
    }
}

/// Parses a spec document. An empty document is treated as an empty object,
/// so it reports the missing root fields rather than a bare syntax error.
pub fn parse_spec(text: &str) -> Result<LayoutSpec, ParseError> {
    let root: Value = if text.trim().is_empty() {
        Value::Object(Map::new())
    } else {
        serde_json::from_str(text)?
    };
    decode_spec(&root)
}

const ROOT_FIELDS: &[&str] = &["name", "classes", "blocks"];
const CLASS_FIELDS: &[&str] = &["name", "lo", "lo_inclusive", "hi", "hi_inclusive"];
const BLOCK_FIELDS: &[&str] = &["id", "label", "note", "placements"];
const PLACEMENT_FIELDS: &[&str] = &["rect", "visible", "font", "style", "mirror_on_anchor"];
const RECT_COMPONENTS: [&str; 4] = ["x", "y", "w", "h"];

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

fn expect_object<'a>(v: &'a Value, path: &str, allowed: &[&str], required: &[&str]) -> Result<&'a Map<String, Value>, ParseError> {
    let map = v
        .as_object()
        .ok_or_else(|| ParseError::schema(path, format!("expected an object, found {}", type_name(v))))?;
    if let Some(unknown) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(ParseError::schema(
            format!("{path}.{unknown}"),
            format!("unknown field (expected one of: {})", allowed.join(", ")),
        ));
    }
    let missing: Vec<&str> = required.iter().copied().filter(|k| !map.contains_key(*k)).collect();
    if !missing.is_empty() {
        let noun = if missing.len() == 1 { "field" } else { "fields" };
        return Err(ParseError::schema(path, format!("missing required {noun}: {}", missing.join(", "))));
    }
    Ok(map)
}

fn get_str(v: &Value, path: &str) -> Result<String, ParseError> {
    v.as_str()
        .map(str::to_owned)
        .ok_or_else(|| ParseError::schema(path, format!("expected a string, found {}", type_name(v))))
}

fn get_f64(v: &Value, path: &str) -> Result<f64, ParseError> {
    v.as_f64()
        .ok_or_else(|| ParseError::schema(path, format!("expected a number, found {}", type_name(v))))
}

fn get_bool(v: &Value, path: &str) -> Result<bool, ParseError> {
    v.as_bool()
        .ok_or_else(|| ParseError::schema(path, format!("expected a boolean, found {}", type_name(v))))
}

/// Optional fields treat an explicit `null` the same as absence.
fn optional<'a>(map: &'a Map<String, Value>, key: &str) -> Option<&'a Value> {
    map.get(key).filter(|v| !v.is_null())
}

fn decode_spec(root: &Value) -> Result<LayoutSpec, ParseError> {
    let map = expect_object(root, "$", ROOT_FIELDS, ROOT_FIELDS)?;
    let name = get_str(&map["name"], "$.name")?;

    let classes = map["classes"]
        .as_array()
        .ok_or_else(|| ParseError::schema("$.classes", format!("expected an array, found {}", type_name(&map["classes"]))))?
        .iter()
        .enumerate()
        .map(|(i, v)| decode_class(v, &format!("$.classes[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;

    let blocks = map["blocks"]
        .as_array()
        .ok_or_else(|| ParseError::schema("$.blocks", format!("expected an array, found {}", type_name(&map["blocks"]))))?
        .iter()
        .enumerate()
        .map(|(i, v)| decode_block(v, &format!("$.blocks[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(LayoutSpec { name, classes, blocks })
}

fn decode_class(v: &Value, path: &str) -> Result<ClassRule, ParseError> {
    let map = expect_object(v, path, CLASS_FIELDS, CLASS_FIELDS)?;
    let hi_path = format!("{path}.hi");
    let hi = match &map["hi"] {
        Value::String(s) if s == "inf" => f64::INFINITY,
        Value::Number(_) => get_f64(&map["hi"], &hi_path)?,
        other => {
            return Err(ParseError::schema(
                hi_path,
                format!("expected a number or \"inf\", found {}", type_name(other)),
            ))
        }
    };
    Ok(ClassRule {
        name: get_str(&map["name"], &format!("{path}.name"))?,
        lo: get_f64(&map["lo"], &format!("{path}.lo"))?,
        lo_inclusive: get_bool(&map["lo_inclusive"], &format!("{path}.lo_inclusive"))?,
        hi,
        hi_inclusive: get_bool(&map["hi_inclusive"], &format!("{path}.hi_inclusive"))?,
    })
}

fn decode_block(v: &Value, path: &str) -> Result<Block, ParseError> {
    let map = expect_object(v, path, BLOCK_FIELDS, &["id", "placements"])?;
    let placements_path = format!("{path}.placements");
    // Keys are class names, so any key is structurally legal here.
    let placements_map = map["placements"].as_object().ok_or_else(|| {
        ParseError::schema(
            &placements_path,
            format!("expected an object, found {}", type_name(&map["placements"])),
        )
    })?;
    let mut placements = IndexMap::with_capacity(placements_map.len());
    for (class, pv) in placements_map {
        let placement = decode_placement(pv, &format!("{placements_path}.{class}"))?;
        placements.insert(class.clone(), placement);
    }
    Ok(Block {
        id: get_str(&map["id"], &format!("{path}.id"))?,
        label: optional(map, "label").map(|v| get_str(v, &format!("{path}.label"))).transpose()?,
        note: optional(map, "note").map(|v| get_str(v, &format!("{path}.note"))).transpose()?,
        placements,
    })
}

fn decode_placement(v: &Value, path: &str) -> Result<Placement, ParseError> {
    let map = expect_object(v, path, PLACEMENT_FIELDS, &["rect"])?;

    let rect_path = format!("{path}.rect");
    let items = map["rect"]
        .as_array()
        .ok_or_else(|| ParseError::schema(&rect_path, format!("expected [x, y, w, h], found {}", type_name(&map["rect"]))))?;
    if items.len() != 4 {
        return Err(ParseError::schema(
            &rect_path,
            format!("expected 4 components [x, y, w, h], found {}", items.len()),
        ));
    }
    let mut parts = [0.0; 4];
    for (i, item) in items.iter().enumerate() {
        parts[i] = item.as_f64().ok_or_else(|| {
            ParseError::schema(
                format!("{rect_path}[{i}]"),
                format!("expected a number for `{}`, found {}", RECT_COMPONENTS[i], type_name(item)),
            )
        })?;
    }

    let mut style = IndexMap::new();
    if let Some(sv) = optional(map, "style") {
        let style_path = format!("{path}.style");
        let obj = sv
            .as_object()
            .ok_or_else(|| ParseError::schema(&style_path, format!("expected an object, found {}", type_name(sv))))?;
        for (k, val) in obj {
            style.insert(k.clone(), get_str(val, &format!("{style_path}.{k}"))?);
        }
    }

    let mirror_on_anchor = match optional(map, "mirror_on_anchor") {
        None => Anchor::None,
        Some(av) => {
            let anchor_path = format!("{path}.mirror_on_anchor");
            get_str(av, &anchor_path)?
                .parse()
                .map_err(|msg: String| ParseError::schema(anchor_path, msg))?
        }
    };

    Ok(Placement {
        rect: NormRect::from_array(parts),
        visible: optional(map, "visible")
            .map(|v| get_bool(v, &format!("{path}.visible")))
            .transpose()?
            .unwrap_or(true),
        font: optional(map, "font").map(|v| get_f64(v, &format!("{path}.font"))).transpose()?,
        style,
        mirror_on_anchor,
    })
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

pub(crate) fn number(v: f64) -> Value {
    serde_json::Number::from_f64(v).map(Value::Number).unwrap_or(Value::Null)
}

fn style_value(style: &IndexMap<String, String>) -> Value {
    Value::Object(style.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect())
}

/// Document form of a spec. Defaulted placement fields are omitted.
pub fn spec_to_value(spec: &LayoutSpec) -> Value {
    let classes = spec
        .classes
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("name".into(), Value::String(c.name.clone()));
            m.insert("lo".into(), number(c.lo));
            m.insert("lo_inclusive".into(), Value::Bool(c.lo_inclusive));
            let hi = if c.hi == f64::INFINITY { Value::String("inf".into()) } else { number(c.hi) };
            m.insert("hi".into(), hi);
            m.insert("hi_inclusive".into(), Value::Bool(c.hi_inclusive));
            Value::Object(m)
        })
        .collect();

    let blocks = spec
        .blocks
        .iter()
        .map(|b| {
            let mut m = Map::new();
            m.insert("id".into(), Value::String(b.id.clone()));
            if let Some(label) = &b.label {
                m.insert("label".into(), Value::String(label.clone()));
            }
            if let Some(note) = &b.note {
                m.insert("note".into(), Value::String(note.clone()));
            }
            let placements = b
                .placements
                .iter()
                .map(|(class, p)| {
                    let mut pm = Map::new();
                    pm.insert("rect".into(), Value::Array(p.rect.to_array().into_iter().map(number).collect()));
                    if !p.visible {
                        pm.insert("visible".into(), Value::Bool(false));
                    }
                    if let Some(font) = p.font {
                        pm.insert("font".into(), number(font));
                    }
                    if !p.style.is_empty() {
                        pm.insert("style".into(), style_value(&p.style));
                    }
                    if p.mirror_on_anchor != Anchor::None {
                        pm.insert("mirror_on_anchor".into(), Value::String(p.mirror_on_anchor.as_str().into()));
                    }
                    (class.clone(), Value::Object(pm))
                })
                .collect();
            m.insert("placements".into(), Value::Object(placements));
            Value::Object(m)
        })
        .collect();

    let mut root = Map::new();
    root.insert("name".into(), Value::String(spec.name.clone()));
    root.insert("classes".into(), Value::Array(classes));
    root.insert("blocks".into(), Value::Array(blocks));
    Value::Object(root)
}

/// Canonical document text for a spec; `parse_spec` reads it back unchanged.
pub fn serialize_spec(spec: &LayoutSpec) -> String {
    to_canonical_string(&spec_to_value(spec))
}

pub(crate) fn style_to_value(style: &IndexMap<String, String>) -> Value {
    style_value(style)
}
