//! Workload builders shared by the engine benchmarks.

use regui::{UiEvent, WindowState};

/// A drag that sweeps the width from `from_w` to `to_w` at a fixed height,
/// one event per pixel column.
pub fn width_sweep(from_w: u32, to_w: u32, height: u32) -> Vec<UiEvent> {
    let (lo, hi) = (from_w.min(to_w), from_w.max(to_w));
    let mut widths: Vec<u32> = (lo..=hi).collect();
    if from_w > to_w {
        widths.reverse();
    }
    widths
        .into_iter()
        .map(|w| UiEvent::Resize {
            w: f64::from(w),
            h: f64::from(height),
        })
        .collect()
}

/// Windows with aspect ratios spread evenly over `[0.25, 4]`.
pub fn window_grid(n: usize) -> Vec<WindowState> {
    (0..n)
        .map(|i| {
            let r = 0.25 * 16f64.powf(i as f64 / n.max(1) as f64);
            WindowState::new(800.0 * r, 800.0).expect("positive window")
        })
        .collect()
}
