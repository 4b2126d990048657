//! Resolution of a spec against a concrete window into pixel geometry.

use indexmap::IndexMap;
use serde_json::{Map, Value};

use crate::classify::{classify, ClassId};
use crate::error::LayoutError;
use crate::geometry::{mirror_x, scale_to_window, PixelRect, WindowState};
use crate::json::to_canonical_string;
use crate::spec::{number, style_to_value, Anchor, LayoutSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedBlock {
    pub block_id: String,
    pub rect: PixelRect,
    pub visible: bool,
    pub font_px: Option<f64>,
    pub style: IndexMap<String, String>,
    pub class_name: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedLayout {
    pub window: WindowState,
    pub class: ClassId,
    pub anchor: Anchor,
    /// One entry per spec block, in spec order.
    pub blocks: Vec<ResolvedBlock>,
}

impl ResolvedLayout {
    pub fn block(&self, id: &str) -> Option<&ResolvedBlock> {
        self.blocks.iter().find(|b| b.block_id == id)
    }

    /// Document form: `{window:{w,h,r}, class, blocks:[{id, rect, visible, font_px?, style?}]}`.
    pub fn to_value(&self) -> Value {
        let mut window = Map::new();
        window.insert("w".into(), number(self.window.width()));
        window.insert("h".into(), number(self.window.height()));
        window.insert("r".into(), number(self.window.aspect_ratio()));

        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut m = Map::new();
                m.insert("id".into(), Value::String(b.block_id.clone()));
                m.insert("rect".into(), Value::Array(b.rect.to_array().into_iter().map(number).collect()));
                m.insert("visible".into(), Value::Bool(b.visible));
                if let Some(font_px) = b.font_px {
                    m.insert("font_px".into(), number(font_px));
                }
                if !b.style.is_empty() {
                    m.insert("style".into(), style_to_value(&b.style));
                }
                Value::Object(m)
            })
            .collect();

        let mut root = Map::new();
        root.insert("window".into(), Value::Object(window));
        root.insert("class".into(), Value::String(self.class.name.clone()));
        root.insert("blocks".into(), Value::Array(blocks));
        Value::Object(root)
    }

    pub fn to_canonical_string(&self) -> String {
        to_canonical_string(&self.to_value())
    }
}

/// Font size in pixels for a font given as a fraction of the block height.
pub fn resolve_font(norm_font: f64, block_rect: &PixelRect) -> f64 {
    norm_font * block_rect.h
}

/// Lays out every block of `spec` for `window`.
///
/// Blocks without a placement in the active class are emitted hidden with a
/// zero rect. A placement is mirrored only if its `mirror_on_anchor` equals a
/// non-`None` `anchor`.
pub fn resolve(spec: &LayoutSpec, window: &WindowState, anchor: Anchor) -> Result<ResolvedLayout, LayoutError> {
    let class = classify(window.aspect_ratio(), &spec.classes)?;

    let blocks = spec
        .blocks
        .iter()
        .map(|block| {
            if let Some(unknown) = block.placements.keys().find(|k| spec.class_index(k).is_none()) {
                return Err(LayoutError::SpecInvalid(format!(
                    "block `{}` has a placement for undeclared class `{unknown}`",
                    block.id
                )));
            }
            let resolved = match block.placements.get(&class.name) {
                Some(p) => {
                    let mirrored = anchor != Anchor::None && p.mirror_on_anchor == anchor;
                    let norm = if mirrored { mirror_x(&p.rect) } else { p.rect };
                    let rect = scale_to_window(&norm, window);
                    ResolvedBlock {
                        block_id: block.id.clone(),
                        rect,
                        visible: p.visible,
                        font_px: p.font.map(|f| resolve_font(f, &rect)),
                        style: p.style.clone(),
                        class_name: class.name.clone(),
                    }
                }
                None => ResolvedBlock {
                    block_id: block.id.clone(),
                    rect: PixelRect::ZERO,
                    visible: false,
                    font_px: None,
                    style: IndexMap::new(),
                    class_name: class.name.clone(),
                },
            };
            Ok(resolved)
        })
        .collect::<Result<Vec<_>, _>>()?;

    Ok(ResolvedLayout {
        window: *window,
        class,
        anchor,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::NormRect;
    use crate::spec::{three_class_rules, Block, Placement};

    fn spec() -> LayoutSpec {
        let mut side = Placement::new(NormRect::new(0.0, 0.0, 0.25, 1.0));
        side.mirror_on_anchor = Anchor::Left;
        side.font = Some(0.5);
        side.style.insert("background".into(), "grey".into());
        LayoutSpec {
            name: "t".into(),
            classes: three_class_rules(0.75, 1.5).unwrap(),
            blocks: vec![
                Block::new("side").with_placement("classic", side),
                Block::new("main")
                    .with_placement("classic", Placement::new(NormRect::new(0.25, 0.0, 0.75, 1.0)))
                    .with_placement("portrait", Placement::new(NormRect::new(0.0, 0.0, 1.0, 1.0))),
            ],
        }
    }

    #[test]
    fn font_scales_with_block_height() {
        assert_eq!(resolve_font(0.5, &PixelRect::new(0.0, 0.0, 10.0, 40.0)), 20.0);
        assert_eq!(resolve_font(0.7, &PixelRect::ZERO), 0.0);
        let px = resolve_font(0.04, &PixelRect::new(0.0, 0.0, 1.0, 140.0));
        assert!((px - 5.6).abs() < 1e-12);
    }

    #[test]
    fn blocks_without_placement_are_hidden() {
        let layout = resolve(&spec(), &WindowState::new(600.0, 1000.0).unwrap(), Anchor::None).unwrap();
        assert_eq!(layout.class.name, "portrait");
        let side = layout.block("side").unwrap();
        assert!(!side.visible);
        assert_eq!(side.rect, PixelRect::ZERO);
        assert_eq!(side.font_px, None);
        assert_eq!(layout.block("main").unwrap().rect.to_array(), [0.0, 0.0, 600.0, 1000.0]);
        assert!(layout.blocks.iter().all(|b| b.class_name == layout.class.name));
    }

    #[test]
    fn mirroring_only_for_matching_anchor() {
        let window = WindowState::new(800.0, 800.0).unwrap();
        let s = spec();
        let plain = resolve(&s, &window, Anchor::None).unwrap();
        let right = resolve(&s, &window, Anchor::Right).unwrap();
        let left = resolve(&s, &window, Anchor::Left).unwrap();
        assert_eq!(plain.block("side").unwrap().rect.x, 0.0);
        assert_eq!(right.block("side").unwrap().rect.x, 0.0);
        assert_eq!(left.block("side").unwrap().rect.x, 600.0);
        // `main` never opted in.
        assert_eq!(left.block("main").unwrap().rect, plain.block("main").unwrap().rect);
    }

    #[test]
    fn font_and_style_pass_through() {
        let layout = resolve(&spec(), &WindowState::new(800.0, 600.0).unwrap(), Anchor::None).unwrap();
        let side = layout.block("side").unwrap();
        assert_eq!(side.font_px, Some(300.0));
        assert_eq!(side.style["background"], "grey");
    }

    #[test]
    fn dangling_class_reference_is_spec_invalid() {
        let mut s = spec();
        s.blocks[1].placements.insert("ultrawide".into(), Placement::new(NormRect::default()));
        let err = resolve(&s, &WindowState::new(800.0, 600.0).unwrap(), Anchor::None).unwrap_err();
        assert!(matches!(err, LayoutError::SpecInvalid(_)));
    }

    #[test]
    fn classifier_errors_propagate() {
        let mut s = spec();
        s.classes.pop();
        let err = resolve(&s, &WindowState::new(1600.0, 800.0).unwrap(), Anchor::None).unwrap_err();
        assert_eq!(err, LayoutError::UnclassifiableRatio(2.0));
    }

    #[test]
    fn document_shape() {
        let layout = resolve(&spec(), &WindowState::new(800.0, 600.0).unwrap(), Anchor::None).unwrap();
        let v = layout.to_value();
        assert_eq!(v["class"], "classic");
        assert_eq!(v["window"]["w"], 800.0);
        assert_eq!(v["blocks"][0]["font_px"], 300.0);
        assert_eq!(v["blocks"][0]["style"]["background"], "grey");
        assert!(v["blocks"][1].get("font_px").is_none());
        assert!(v["blocks"][1].get("style").is_none());
        assert_eq!(layout.to_canonical_string(), layout.clone().to_canonical_string());
    }
}
