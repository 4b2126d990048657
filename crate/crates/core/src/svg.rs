//! SVG rendering of a resolved layout, for visual goldens.
//!
//! One `<rect>` per visible block, y flipped to the top-left origin SVG uses.
//! Hidden blocks are left out entirely.

use std::fmt::Write;

use crate::resolve::ResolvedLayout;

fn escape_attr(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

pub fn export_svg(layout: &ResolvedLayout) -> String {
    let width = layout.window.width();
    let height = layout.window.height();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" width="{width}" height="{height}" data-class="{}">"#,
        escape_attr(&layout.class.name)
    );
    let _ = writeln!(out, r#"  <rect x="0" y="0" width="{width}" height="{height}" fill="white" stroke="black"/>"#);
    for block in layout.blocks.iter().filter(|b| b.visible) {
        let r = block.rect.to_top_left(height);
        let _ = writeln!(
            out,
            r#"  <rect id="{}" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>"#,
            escape_attr(&block.block_id),
            r.x,
            r.y,
            r.w,
            r.h
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{NormRect, WindowState};
    use crate::resolve::resolve;
    use crate::spec::{Anchor, Block, ClassRule, LayoutSpec, Placement};

    #[test]
    fn flips_y_and_skips_hidden() {
        let mut hidden = Placement::new(NormRect::new(0.0, 0.0, 1.0, 1.0));
        hidden.visible = false;
        let spec = LayoutSpec {
            name: "t".into(),
            classes: vec![ClassRule::new("all", 0.0, false, f64::INFINITY, false)],
            blocks: vec![
                Block::new("a<b").with_placement("all", Placement::new(NormRect::new(0.25, 0.5, 0.5, 0.25))),
                Block::new("gone").with_placement("all", hidden),
            ],
        };
        let layout = resolve(&spec, &WindowState::new(400.0, 200.0).unwrap(), Anchor::None).unwrap();
        let svg = export_svg(&layout);
        assert!(svg.contains(r#"viewBox="0 0 400 200""#));
        assert!(svg.contains(r#"<rect id="a&lt;b" x="100" y="50" width="200" height="50""#), "{svg}");
        assert!(!svg.contains("gone"));
    }
}
