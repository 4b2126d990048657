//! Semantic checks over a parsed [`LayoutSpec`].

use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

use crate::classify::{validate_partition, IssueKind};
use crate::geometry::intersects;
use crate::spec::LayoutSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
    Info,
}

/// The closed set of diagnostic codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Code {
    PartitionGap,
    PartitionOverlap,
    InvalidInterval,
    DuplicateClass,
    DuplicateBlock,
    RectOutOfBounds,
    FontOutOfRange,
    DanglingClass,
    BlockOverlap,
    HiddenInClass,
}

impl Code {
    pub fn severity(self) -> Severity {
        match self {
            Code::BlockOverlap => Severity::Warning,
            Code::HiddenInClass => Severity::Info,
            _ => Severity::Error,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Code::PartitionGap => "PARTITION_GAP",
            Code::PartitionOverlap => "PARTITION_OVERLAP",
            Code::InvalidInterval => "INVALID_INTERVAL",
            Code::DuplicateClass => "DUPLICATE_CLASS",
            Code::DuplicateBlock => "DUPLICATE_BLOCK",
            Code::RectOutOfBounds => "RECT_OUT_OF_BOUNDS",
            Code::FontOutOfRange => "FONT_OUT_OF_RANGE",
            Code::DanglingClass => "DANGLING_CLASS",
            Code::BlockOverlap => "BLOCK_OVERLAP",
            Code::HiddenInClass => "HIDDEN_IN_CLASS",
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: Code,
    pub message: String,
    /// Block(s) concerned; overlap diagnostics name both, in spec order.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

impl Diagnostic {
    fn new(code: Code, message: String, blocks: Vec<String>, class: Option<String>) -> Self {
        Self {
            severity: code.severity(),
            code,
            message,
            blocks,
            class,
        }
    }

    fn sort_key(&self) -> (Severity, Code, &[String], Option<&str>, &str) {
        (self.severity, self.code, &self.blocks, self.class.as_deref(), &self.message)
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let severity = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        };
        write!(f, "{severity}[{}]: {}", self.code, self.message)
    }
}

pub fn has_errors(diagnostics: &[Diagnostic]) -> bool {
    diagnostics.iter().any(|d| d.severity == Severity::Error)
}

/// Runs every check and returns the diagnostics sorted by
/// (severity, code, blocks, class).
pub fn validate_spec(spec: &LayoutSpec) -> Vec<Diagnostic> {
    let mut out = Vec::new();

    for issue in validate_partition(&spec.classes) {
        let code = match issue.kind {
            IssueKind::Gap => Code::PartitionGap,
            IssueKind::Overlap => Code::PartitionOverlap,
            IssueKind::BadInterval => Code::InvalidInterval,
        };
        let class = issue.classes.first().cloned();
        out.push(Diagnostic::new(code, issue.to_string(), Vec::new(), class));
    }

    let mut seen = HashSet::new();
    for c in &spec.classes {
        if !seen.insert(c.name.as_str()) {
            out.push(Diagnostic::new(
                Code::DuplicateClass,
                format!("class `{}` is declared more than once", c.name),
                Vec::new(),
                Some(c.name.clone()),
            ));
        }
    }
    let declared = seen;

    let mut seen_blocks = HashSet::new();
    for block in &spec.blocks {
        let subject = vec![block.id.clone()];
        if !seen_blocks.insert(block.id.as_str()) {
            out.push(Diagnostic::new(
                Code::DuplicateBlock,
                format!("block id `{}` is used more than once", block.id),
                subject.clone(),
                None,
            ));
        }
        for (class, p) in &block.placements {
            if !declared.contains(class.as_str()) {
                out.push(Diagnostic::new(
                    Code::DanglingClass,
                    format!("block `{}` has a placement for undeclared class `{class}`", block.id),
                    subject.clone(),
                    Some(class.clone()),
                ));
            }
            if !p.rect.is_within_unit() {
                let r = p.rect;
                out.push(Diagnostic::new(
                    Code::RectOutOfBounds,
                    format!(
                        "block `{}` in class `{class}`: rect [{}, {}, {}, {}] leaves the unit square",
                        block.id, r.x, r.y, r.w, r.h
                    ),
                    subject.clone(),
                    Some(class.clone()),
                ));
            }
            if let Some(font) = p.font {
                if !(font > 0.0 && font <= 1.0) {
                    out.push(Diagnostic::new(
                        Code::FontOutOfRange,
                        format!("block `{}` in class `{class}`: font {font} is outside (0, 1]", block.id),
                        subject.clone(),
                        Some(class.clone()),
                    ));
                }
            }
        }
        for c in &spec.classes {
            if !block.placements.contains_key(&c.name) {
                out.push(Diagnostic::new(
                    Code::HiddenInClass,
                    format!("block `{}` has no placement in class `{}` and is hidden there", block.id, c.name),
                    subject.clone(),
                    Some(c.name.clone()),
                ));
            }
        }
    }

    let mut classes_done = HashSet::new();
    for c in &spec.classes {
        if !classes_done.insert(c.name.as_str()) {
            continue;
        }
        let visible: Vec<_> = spec
            .blocks
            .iter()
            .filter_map(|b| b.placements.get(&c.name).filter(|p| p.visible).map(|p| (b, p)))
            .collect();
        for (i, (a, pa)) in visible.iter().enumerate() {
            for (b, pb) in &visible[i + 1..] {
                if intersects(&pa.rect, &pb.rect) {
                    out.push(Diagnostic::new(
                        Code::BlockOverlap,
                        format!("blocks `{}` and `{}` overlap in class `{}`", a.id, b.id, c.name),
                        vec![a.id.clone(), b.id.clone()],
                        Some(c.name.clone()),
                    ));
                }
            }
        }
    }

    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::geometry::{NormRect, WindowState};
    use crate::resolve::resolve;
    use crate::spec::{three_class_rules, Anchor, Block, ClassRule, Placement};
    use proptest::prelude::*;

    fn codes(spec: &LayoutSpec) -> Vec<Code> {
        validate_spec(spec).into_iter().map(|d| d.code).collect()
    }

    fn full(id: &str, r: NormRect) -> Block {
        ["portrait", "classic", "landscape"]
            .into_iter()
            .fold(Block::new(id), |b, c| b.with_placement(c, Placement::new(r)))
    }

    fn base() -> LayoutSpec {
        LayoutSpec {
            name: "t".into(),
            classes: three_class_rules(0.75, 1.5).unwrap(),
            blocks: vec![
                full("left", NormRect::new(0.0, 0.0, 0.5, 1.0)),
                full("right", NormRect::new(0.5, 0.0, 0.5, 1.0)),
            ],
        }
    }

    #[test]
    fn flush_blocks_are_clean() {
        assert!(validate_spec(&base()).is_empty());
    }

    #[test]
    fn out_of_bounds_is_an_error() {
        let mut s = base();
        s.blocks[0].placements["classic"].rect = NormRect::new(0.9, 0.9, 0.38, 0.175);
        let diags = validate_spec(&s);
        assert!(has_errors(&diags));
        assert_eq!(diags[0].code, Code::RectOutOfBounds);
        assert_eq!(diags[0].blocks, ["left"]);
        assert_eq!(diags[0].class.as_deref(), Some("classic"));
    }

    #[test]
    fn negative_rect_is_out_of_bounds() {
        let mut s = base();
        s.blocks[1].placements["portrait"].rect = NormRect::new(-0.1, 0.0, 0.1, 0.1);
        assert_eq!(codes(&s), [Code::RectOutOfBounds]);
    }

    #[test]
    fn full_overlap_is_a_warning() {
        let mut s = base();
        s.blocks[1].placements["classic"].rect = NormRect::new(0.0, 0.0, 1.0, 1.0);
        s.blocks[0].placements["classic"].rect = NormRect::new(0.0, 0.0, 1.0, 1.0);
        let diags = validate_spec(&s);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].severity, Severity::Warning);
        assert_eq!(diags[0].code, Code::BlockOverlap);
        assert_eq!(diags[0].blocks, ["left", "right"]);
        assert!(!has_errors(&diags));
    }

    #[test]
    fn hidden_blocks_are_not_overlap_candidates() {
        let mut s = base();
        s.blocks[1].placements["classic"].rect = NormRect::new(0.0, 0.0, 1.0, 1.0);
        s.blocks[1].placements["classic"].visible = false;
        assert!(validate_spec(&s).is_empty());
    }

    #[test]
    fn missing_placement_is_info() {
        let mut s = base();
        s.blocks[0].placements.shift_remove("classic");
        let diags = validate_spec(&s);
        assert_eq!(diags.len(), 1);
        assert_eq!((diags[0].severity, diags[0].code), (Severity::Info, Code::HiddenInClass));
    }

    #[test]
    fn dangling_and_duplicates() {
        let mut s = base();
        s.blocks[0].placements.insert("wide".into(), Placement::new(NormRect::default()));
        s.blocks.push(full("left", NormRect::new(0.0, 0.0, 0.1, 0.1)));
        s.classes.push(ClassRule::new("classic", 1.0, true, 1.0, true));
        let got = codes(&s);
        assert!(got.contains(&Code::DanglingClass));
        assert!(got.contains(&Code::DuplicateBlock));
        assert!(got.contains(&Code::DuplicateClass));
        assert!(got.contains(&Code::PartitionOverlap));
    }

    #[test]
    fn partition_defects_surface() {
        let mut s = base();
        s.classes[0].hi = 0.5;
        let diags = validate_spec(&s);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, Code::PartitionGap);
        assert!(diags[0].message.contains("[0.5, 0.75)"), "{}", diags[0].message);
    }

    #[test]
    fn font_range() {
        let mut s = base();
        s.blocks[0].placements["classic"].font = Some(0.0);
        s.blocks[1].placements["classic"].font = Some(1.0);
        assert_eq!(codes(&s), [Code::FontOutOfRange]);
    }

    #[test]
    fn diagnostics_serialize() {
        let mut s = base();
        s.blocks[0].placements.shift_remove("classic");
        let v = serde_json::to_value(&validate_spec(&s)[0]).unwrap();
        assert_eq!(v["severity"], "info");
        assert_eq!(v["code"], "HIDDEN_IN_CLASS");
        assert_eq!(v["blocks"][0], "left");
        assert_eq!(v["class"], "classic");
    }

    fn arb_spec() -> impl Strategy<Value = LayoutSpec> {
        let rule = (0u8..4, 0.0..3.0f64, any::<bool>(), 0.0..4.0f64, any::<bool>());
        let rect = prop::array::uniform4(0u8..9).prop_map(|[x, y, w, h]| {
            NormRect::new(f64::from(x) / 8.0, f64::from(y) / 8.0, f64::from(w) / 8.0, f64::from(h) / 8.0)
        });
        let block = prop::collection::vec((0u8..5, rect, any::<bool>()), 0..4);
        (
            prop::option::of(prop::collection::vec(rule, 1..4)),
            prop::collection::vec(block, 0..6),
        )
            .prop_map(|(rules, blocks)| {
                let classes = match rules {
                    None => three_class_rules(0.75, 1.5).unwrap(),
                    Some(rules) => rules
                        .into_iter()
                        .enumerate()
                        .map(|(i, (_, lo, li, span, hi_inc))| {
                            ClassRule::new(format!("k{i}"), lo, li, if span > 3.0 { f64::INFINITY } else { lo + span }, hi_inc)
                        })
                        .collect(),
                };
                let names: Vec<String> = classes.iter().map(|c| c.name.clone()).chain(["ghost".into()]).collect();
                let blocks = blocks
                    .into_iter()
                    .enumerate()
                    .map(|(i, ps)| {
                        ps.into_iter().fold(Block::new(format!("b{i}")), |b, (ci, r, visible)| {
                            let mut p = Placement::new(r);
                            p.visible = visible;
                            p.mirror_on_anchor = Anchor::Left;
                            b.with_placement(names[usize::from(ci) % names.len()].clone(), p)
                        })
                    })
                    .collect();
                LayoutSpec { name: "rand".into(), classes, blocks }
            })
    }

    proptest! {
        #[test]
        fn error_free_specs_always_resolve(
            spec in arb_spec(),
            w in 1.0..4000.0f64,
            h in 1.0..4000.0f64,
        ) {
            if !has_errors(&validate_spec(&spec)) {
                let window = WindowState::new(w, h).unwrap();
                prop_assert!(classify(window.aspect_ratio(), &spec.classes).is_ok());
                for anchor in [Anchor::None, Anchor::Left] {
                    prop_assert!(resolve(&spec, &window, anchor).is_ok());
                }
            }
        }

        #[test]
        fn diagnostics_are_sorted_and_stable(spec in arb_spec()) {
            let a = validate_spec(&spec);
            prop_assert_eq!(&a, &validate_spec(&spec));
            prop_assert!(a.windows(2).all(|w| w[0].sort_key() <= w[1].sort_key()));
        }
    }
}
