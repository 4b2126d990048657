//! Aspect-ratio classification against a list of class intervals.
//!
//! `classify` is a linear scan with exact comparisons. It assumes the rules
//! partition `(0, inf)`; [`validate_partition`] checks that assumption and
//! names every gap or doubly-claimed region.

use std::cmp::Ordering;
use std::fmt;

use crate::error::LayoutError;
use crate::spec::{fmt_bound, ClassRule};

/// The layout class a ratio falls into.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassId {
    /// Position of the rule in the list it was classified against.
    pub index: usize,
    pub name: String,
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Returns the class whose interval contains `ratio`.
pub fn classify(ratio: f64, classes: &[ClassRule]) -> Result<ClassId, LayoutError> {
    if ratio.is_nan() || ratio <= 0.0 {
        return Err(LayoutError::NonPositiveRatio(ratio));
    }
    classes
        .iter()
        .position(|rule| rule.contains(ratio))
        .map(|index| ClassId {
            index,
            name: classes[index].name.clone(),
        })
        .ok_or(LayoutError::UnclassifiableRatio(ratio))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IssueKind {
    /// Ratios that no class claims.
    Gap,
    /// Ratios claimed by more than one class.
    Overlap,
    /// A rule whose interval is empty or malformed.
    BadInterval,
}

/// One defect found by [`validate_partition`]. The affected region is given
/// in interval form; `lo == hi` with both ends inclusive is a single ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionIssue {
    pub kind: IssueKind,
    pub lo: f64,
    pub lo_inclusive: bool,
    pub hi: f64,
    pub hi_inclusive: bool,
    /// Names of the rules on either side of (or involved in) the defect.
    pub classes: Vec<String>,
}

impl PartitionIssue {
    /// True when `ratio` lies inside the reported region.
    pub fn covers(&self, ratio: f64) -> bool {
        ClassRule::new("", self.lo, self.lo_inclusive, self.hi, self.hi_inclusive).contains(ratio)
    }

    pub fn region(&self) -> String {
        if self.lo == self.hi && self.lo_inclusive && self.hi_inclusive {
            format!("R = {}", fmt_bound(self.lo))
        } else {
            ClassRule::new("", self.lo, self.lo_inclusive, self.hi, self.hi_inclusive).interval()
        }
    }
}

impl fmt::Display for PartitionIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.classes.join(", ");
        match self.kind {
            IssueKind::Gap => write!(f, "no class covers {} (between: {names})", self.region()),
            IssueKind::Overlap => write!(f, "{} is claimed by more than one class ({names})", self.region()),
            IssueKind::BadInterval => write!(f, "class {names} has an empty or malformed interval {}", self.region()),
        }
    }
}

/// A position on the ratio line between real numbers: `Cut(v, false)` sits
/// just below `v`, `Cut(v, true)` just above it. Interval endpoints map to
/// cuts, which turns inclusivity bookkeeping into plain ordering.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Cut {
    value: f64,
    after: bool,
}

impl Cut {
    fn start_of(rule: &ClassRule) -> Cut {
        Cut {
            value: rule.lo,
            after: !rule.lo_inclusive,
        }
    }

    fn end_of(rule: &ClassRule) -> Cut {
        Cut {
            value: rule.hi,
            after: rule.hi_inclusive && rule.hi.is_finite(),
        }
    }

    fn cmp(&self, other: &Cut) -> Ordering {
        self.value
            .total_cmp(&other.value)
            .then(self.after.cmp(&other.after))
    }

    fn max(self, other: Cut) -> Cut {
        if self.cmp(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    fn min(self, other: Cut) -> Cut {
        if self.cmp(&other) == Ordering::Greater {
            other
        } else {
            self
        }
    }
}

fn region(kind: IssueKind, from: Cut, to: Cut, classes: Vec<String>) -> PartitionIssue {
    PartitionIssue {
        kind,
        lo: from.value,
        lo_inclusive: !from.after,
        hi: to.value,
        hi_inclusive: to.after,
        classes,
    }
}

fn well_formed(rule: &ClassRule) -> bool {
    let finite_lo = rule.lo.is_finite() && rule.lo >= 0.0;
    let ordered = rule.lo < rule.hi || (rule.lo == rule.hi && rule.lo_inclusive && rule.hi_inclusive);
    finite_lo && !rule.hi.is_nan() && ordered
}

/// Checks that `classes` are pairwise disjoint and jointly cover `(0, inf)`.
/// Returns an empty list when they do.
pub fn validate_partition(classes: &[ClassRule]) -> Vec<PartitionIssue> {
    let mut issues = Vec::new();
    let mut rules: Vec<&ClassRule> = Vec::with_capacity(classes.len());
    for rule in classes {
        if well_formed(rule) {
            rules.push(rule);
        } else {
            issues.push(PartitionIssue {
                kind: IssueKind::BadInterval,
                lo: rule.lo,
                lo_inclusive: rule.lo_inclusive,
                hi: rule.hi,
                hi_inclusive: rule.hi_inclusive,
                classes: vec![rule.name.clone()],
            });
        }
    }
    rules.sort_by(|a, b| Cut::start_of(a).cmp(&Cut::start_of(b)));

    // Everything up to `frontier` is covered; zero itself never needs a class.
    let mut frontier = Cut {
        value: 0.0,
        after: true,
    };
    let mut frontier_owner: Option<&str> = None;
    for rule in rules {
        let start = Cut::start_of(rule).max(Cut {
            value: 0.0,
            after: true,
        });
        let end = Cut::end_of(rule);
        let mut names = Vec::new();
        if let Some(owner) = frontier_owner {
            names.push(owner.to_string());
        }
        names.push(rule.name.clone());
        match start.cmp(&frontier) {
            Ordering::Greater => issues.push(region(IssueKind::Gap, frontier, start, names)),
            Ordering::Less => {
                let overlap_end = end.min(frontier);
                if start.cmp(&overlap_end) == Ordering::Less {
                    issues.push(region(IssueKind::Overlap, start, overlap_end, names));
                }
            }
            Ordering::Equal => {}
        }
        if end.cmp(&frontier) == Ordering::Greater {
            frontier = end;
            frontier_owner = Some(&rule.name);
        }
    }
    if frontier.value != f64::INFINITY {
        let open_end = Cut {
            value: f64::INFINITY,
            after: false,
        };
        issues.push(region(
            IssueKind::Gap,
            frontier,
            open_end,
            frontier_owner.map(|n| vec![n.to_string()]).unwrap_or_default(),
        ));
    }
    issues
}
