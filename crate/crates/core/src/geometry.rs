//! Normalized and pixel rectangles, and the window they are resolved against.
//!
//! All coordinates use a bottom-left origin with y growing upward, the
//! convention of normalized figure units in numeric GUI toolkits. Renderers
//! that draw top-down convert at the boundary with [`PixelRect::to_top_left`].
//!
//! Nothing here rounds: pixel geometry stays real-valued so that scaling a
//! window by `k` scales every resolved coordinate by exactly `k`.

use crate::error::LayoutError;

/// A rectangle expressed as fractions of the window size.
///
/// Fields are not range-checked on construction so that malformed specs can
/// be parsed and then reported by the validator.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct NormRect {
    /// Left edge as a fraction of window width.
    pub x: f64,
    /// Bottom edge as a fraction of window height.
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl NormRect {
    pub const fn new(x: f64, y: f64, w: f64, h: f64) -> Self {
        Self { x, y, w, h }
    }

    pub fn from_array([x, y, w, h]: [f64; 4]) -> Self {
        Self { x, y, w, h }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x, self.y, self.w, self.h]
    }

    pub fn right(&self) -> f64 {
        self.x + self.w
    }

    pub fn top(&self) -> f64 {
        self.y + self.h
    }

    /// True when the rect is finite, non-negative and fits inside the unit square.
    pub fn is_within_unit(&self) -> bool {
        let parts = self.to_array();
        parts.iter().all(|v| v.is_finite() && *v >= 0.0) && self.right() <= 1.0 && self.top() <= 1.0
    }
}

/// A rectangle in device pixels, bottom-left origin.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PixelRect {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl PixelRect {
    pub const ZERO: PixelRect = PixelRect::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, w: f64, h: f64) -> Self {
        Self { x, y, w, h }
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x, self.y, self.w, self.h]
    }

    /// Returns the same rectangle with its y measured down from the top edge
    /// of a window `window_height` pixels tall.
    pub fn to_top_left(self, window_height: f64) -> PixelRect {
        PixelRect {
            y: window_height - self.y - self.h,
            ..self
        }
    }

    pub fn scaled(self, k: f64) -> PixelRect {
        PixelRect::new(self.x * k, self.y * k, self.w * k, self.h * k)
    }
}

/// Window dimensions together with the cached aspect ratio `width / height`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowState {
    width: f64,
    height: f64,
    aspect_ratio: f64,
}

impl WindowState {
    pub fn new(width: f64, height: f64) -> Result<Self, LayoutError> {
        let usable = |v: f64| v.is_finite() && v > 0.0;
        if !usable(width) || !usable(height) {
            return Err(LayoutError::DegenerateWindow { width, height });
        }
        Ok(Self {
            width,
            height,
            aspect_ratio: width / height,
        })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn aspect_ratio(&self) -> f64 {
        self.aspect_ratio
    }

    /// Same window zoomed by `k` in both dimensions.
    pub fn zoomed(&self, k: f64) -> Result<Self, LayoutError> {
        WindowState::new(self.width * k, self.height * k)
    }
}

/// Builds the window state for a `width` x `height` window.
pub fn aspect_ratio(width: f64, height: f64) -> Result<WindowState, LayoutError> {
    WindowState::new(width, height)
}

/// Maps a normalized rect onto window pixels, componentwise.
pub fn scale_to_window(r: &NormRect, window: &WindowState) -> PixelRect {
    PixelRect {
        x: r.x * window.width,
        y: r.y * window.height,
        w: r.w * window.width,
        h: r.h * window.height,
    }
}

/// Reflects a rect about the vertical center line of the window.
pub fn mirror_x(r: &NormRect) -> NormRect {
    NormRect {
        x: 1.0 - r.x - r.w,
        ..*r
    }
}

/// True iff the open interiors of `a` and `b` overlap. Touching edges or
/// corners do not count, and a rect with zero width or height has no interior.
pub fn intersects(a: &NormRect, b: &NormRect) -> bool {
    let has_area = |r: &NormRect| r.w > 0.0 && r.h > 0.0;
    has_area(a) && has_area(b) && a.x < b.right() && b.x < a.right() && a.y < b.top() && b.y < a.top()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_rect_close(actual: PixelRect, expected: [f64; 4]) {
        for (a, e) in actual.to_array().iter().zip(expected) {
            assert!((a - e).abs() <= 1e-9 * e.abs().max(1.0), "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn aspect_ratio_divides() {
        let w = aspect_ratio(800.0, 600.0).unwrap();
        assert_eq!(w.aspect_ratio(), 800.0 / 600.0);
        assert_eq!(aspect_ratio(600.0, 800.0).unwrap().aspect_ratio(), 0.75);
    }

    #[test]
    fn aspect_ratio_rejects_degenerate() {
        assert!(matches!(
            aspect_ratio(800.0, 0.0),
            Err(LayoutError::DegenerateWindow { .. })
        ));
        assert!(aspect_ratio(-1.0, 10.0).is_err());
        assert!(aspect_ratio(f64::NAN, 10.0).is_err());
        assert!(aspect_ratio(f64::INFINITY, 10.0).is_err());
    }

    #[test]
    fn scale_panel_to_window() {
        let window = aspect_ratio(1000.0, 800.0).unwrap();
        let px = scale_to_window(&NormRect::new(0.01, 0.75, 0.38, 0.175), &window);
        assert_rect_close(px, [10.0, 600.0, 380.0, 140.0]);
    }

    #[test]
    fn scale_identity_and_zero() {
        let unit = aspect_ratio(1.0, 1.0).unwrap();
        let r = NormRect::new(0.2, 0.3, 0.4, 0.5);
        assert_eq!(scale_to_window(&r, &unit).to_array(), r.to_array());
        let big = aspect_ratio(1920.0, 1080.0).unwrap();
        assert_eq!(scale_to_window(&NormRect::default(), &big), PixelRect::ZERO);
    }

    #[test]
    fn mirror_examples() {
        let m = mirror_x(&NormRect::new(0.1, 0.2, 0.3, 0.4));
        assert!((m.x - 0.6).abs() < 1e-15);
        assert_eq!((m.y, m.w, m.h), (0.2, 0.3, 0.4));
        // Fixed point, up to one ulp of 1 - 0.4 - 0.2.
        let centered = NormRect::new(0.4, 0.0, 0.2, 1.0);
        let m = mirror_x(&centered);
        assert!((m.x - centered.x).abs() < 1e-15);
        assert_eq!((m.y, m.w, m.h), (0.0, 0.2, 1.0));
    }

    #[test]
    fn intersects_examples() {
        let q = |x, y, w, h| NormRect::new(x, y, w, h);
        assert!(!intersects(&q(0.0, 0.0, 0.5, 0.5), &q(0.5, 0.5, 0.5, 0.5)));
        assert!(intersects(&q(0.0, 0.0, 0.6, 0.6), &q(0.5, 0.5, 0.5, 0.5)));
        assert!(!intersects(&q(0.0, 0.0, 0.5, 1.0), &q(0.5, 0.0, 0.5, 1.0)));
        // A zero-width sliver inside another rect.
        assert!(!intersects(&q(0.25, 0.0, 0.0, 1.0), &q(0.0, 0.0, 0.5, 1.0)));
    }

    #[test]
    fn top_left_conversion() {
        let r = PixelRect::new(6.0, 600.0, 228.0, 140.0).to_top_left(800.0);
        assert_eq!(r.to_array(), [6.0, 60.0, 228.0, 140.0]);
    }

    fn unit_rect() -> impl Strategy<Value = NormRect> {
        (0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64)
            .prop_map(|(x, y, fw, fh)| NormRect::new(x, y, (1.0 - x) * fw, (1.0 - y) * fh))
    }

    proptest! {
        #[test]
        fn scale_is_linear_in_window(
            r in unit_rect(),
            w in 1.0..5000.0f64,
            h in 1.0..5000.0f64,
            k in 0.1..10.0f64,
        ) {
            let base = scale_to_window(&r, &WindowState::new(w, h).unwrap());
            let zoomed = scale_to_window(&r, &WindowState::new(k * w, k * h).unwrap());
            for (z, b) in zoomed.to_array().iter().zip(base.to_array()) {
                let expect = k * b;
                prop_assert!((z - expect).abs() <= 1e-9 * expect.abs().max(f64::MIN_POSITIVE));
            }
        }

        #[test]
        fn scale_is_deterministic(r in unit_rect(), w in 1.0..5000.0f64, h in 1.0..5000.0f64) {
            let window = WindowState::new(w, h).unwrap();
            prop_assert_eq!(scale_to_window(&r, &window), scale_to_window(&r, &window));
        }

        #[test]
        fn mirror_is_an_involution(r in unit_rect()) {
            let m = mirror_x(&r);
            prop_assert_eq!((m.y, m.w, m.h), (r.y, r.w, r.h));
            let back = mirror_x(&m);
            prop_assert!((back.x - r.x).abs() <= 1e-12);
            prop_assert_eq!((back.y, back.w, back.h), (r.y, r.w, r.h));
        }

        #[test]
        fn intersects_is_symmetric(a in unit_rect(), b in unit_rect()) {
            prop_assert_eq!(intersects(&a, &b), intersects(&b, &a));
        }
    }
}
