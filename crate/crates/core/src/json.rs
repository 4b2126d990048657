//! Canonical text form for documents emitted by the engine.
//!
//! Objects are written one member per line with two-space indentation.
//! Arrays holding only scalars (rectangles, mostly) stay on one line so that
//! goldens read naturally and diff well. Key order is insertion order.

use serde_json::Value;
use std::fmt::Write;

/// Renders `value` in canonical multi-line form, with a trailing newline.
pub fn to_canonical_string(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    // Serializing a scalar Value cannot fail.
    serde_json::to_string(v).expect("scalar serialization")
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn write_value(out: &mut String, value: &Value, depth: usize) {
    match value {
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            let last = map.len() - 1;
            for (i, (key, v)) in map.iter().enumerate() {
                indent(out, depth + 1);
                let _ = write!(out, "{}: ", scalar(&Value::String(key.clone())));
                write_value(out, v, depth + 1);
                if i != last {
                    out.push(',');
                }
                out.push('\n');
            }
            indent(out, depth);
            out.push('}');
        }
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            out.push('[');
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&scalar(v));
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            let last = items.len() - 1;
            for (i, v) in items.iter().enumerate() {
                indent(out, depth + 1);
                write_value(out, v, depth + 1);
                if i != last {
                    out.push(',');
                }
                out.push('\n');
            }
            indent(out, depth);
            out.push(']');
        }
        v => out.push_str(&scalar(v)),
    }
}
