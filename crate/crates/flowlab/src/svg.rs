//! Self-contained SVG rendering of a branch-tracked spectrum sweep.
//!
//! The plot is a plain E-versus-t line chart: mass t on the abscissa, energy
//! E on the ordinate, one polyline per tracked branch.  Branches that carry
//! in-gap character (edge levels or the massless zero mode) are drawn as
//! heavy black lines; gapped regular branches are light blue, so the level
//! that actually crosses E = 0 stands out.  The output embeds no external
//! resources and is produced by a pure function of the sweep data, so
//! repeated runs are byte-for-byte identical.

use std::fmt::Write as _;

use diracdisk::{SpectrumBranch, StateClass};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN_LEFT: f64 = 72.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 24.0;
const MARGIN_BOTTOM: f64 = 56.0;
const TICK_LEN: f64 = 6.0;

// ============================================================================
// Axis layout
// ============================================================================

#[derive(Debug, Clone, Copy)]
struct Axis {
    min: f64,
    max: f64,
    offset: f64,
    span_px: f64,
    flip: bool,
}

impl Axis {
    fn new(mut min: f64, mut max: f64, offset: f64, span_px: f64, flip: bool) -> Self {
        if min == max {
            min -= 0.5;
            max += 0.5;
        }
        let pad = 0.05 * (max - min);
        Axis {
            min: min - pad,
            max: max + pad,
            offset,
            span_px,
            flip,
        }
    }

    fn project(&self, value: f64) -> f64 {
        let frac = (value - self.min) / (self.max - self.min);
        let frac = if self.flip { 1.0 - frac } else { frac };
        self.offset + frac * self.span_px
    }

    fn contains(&self, value: f64) -> bool {
        (self.min..=self.max).contains(&value)
    }

    /// Round tick positions: multiples of 1, 2, or 5 times a power of ten,
    /// chosen to land roughly `target` ticks on the axis.
    fn ticks(&self, target: usize) -> Vec<f64> {
        let span = self.max - self.min;
        let raw = span / target as f64;
        let mag = 10_f64.powf(raw.log10().floor());
        let norm = raw / mag;
        let step = mag
            * if norm < 1.5 {
                1.0
            } else if norm < 3.5 {
                2.0
            } else if norm < 7.5 {
                5.0
            } else {
                10.0
            };
        let first = (self.min / step).ceil();
        let last = (self.max / step).floor();
        let mut ticks = Vec::new();
        let mut k = first;
        while k <= last {
            ticks.push(k * step);
            k += 1.0;
        }
        ticks
    }
}

/// Fixed-precision label with trailing zeros removed, so ticks read "0.2",
/// "-1", "0.05" rather than accumulated floating-point digits.
fn tick_label(value: f64) -> String {
    let mut s = format!("{value:.10}");
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

fn px(value: f64) -> String {
    format!("{value:.2}")
}

// ============================================================================
// Rendering
// ============================================================================

/// Render one sweep (one or more branches over a common mass grid) to SVG.
/// The caller guarantees at least one branch with at least one point.
pub fn render_sweep(branches: &[&SpectrumBranch]) -> String {
    let mut t_min = f64::INFINITY;
    let mut t_max = f64::NEG_INFINITY;
    let mut e_min = f64::INFINITY;
    let mut e_max = f64::NEG_INFINITY;
    for branch in branches {
        for &(t, e) in &branch.points {
            t_min = t_min.min(t);
            t_max = t_max.max(t);
            e_min = e_min.min(e);
            e_max = e_max.max(e);
        }
    }
    assert!(
        t_min.is_finite() && e_min.is_finite(),
        "render_sweep requires at least one branch point"
    );

    let x = Axis::new(
        t_min,
        t_max,
        MARGIN_LEFT,
        WIDTH - MARGIN_LEFT - MARGIN_RIGHT,
        false,
    );
    let y = Axis::new(
        e_min,
        e_max,
        MARGIN_TOP,
        HEIGHT - MARGIN_TOP - MARGIN_BOTTOM,
        true,
    );

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(
        svg,
        "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#ffffff\"/>"
    );

    // Gap center and mass-inversion point, when inside the view.
    if y.contains(0.0) {
        let py = px(y.project(0.0));
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{py}\" x2=\"{}\" y2=\"{py}\" stroke=\"#bbbbbb\" \
             stroke-width=\"1\" stroke-dasharray=\"5,4\"/>",
            px(MARGIN_LEFT),
            px(WIDTH - MARGIN_RIGHT),
        );
    }
    if x.contains(0.0) {
        let pxx = px(x.project(0.0));
        let _ = writeln!(
            svg,
            "<line x1=\"{pxx}\" y1=\"{}\" x2=\"{pxx}\" y2=\"{}\" stroke=\"#bbbbbb\" \
             stroke-width=\"1\" stroke-dasharray=\"5,4\"/>",
            px(MARGIN_TOP),
            px(HEIGHT - MARGIN_BOTTOM),
        );
    }

    render_axes(&mut svg, &x, &y);
    for branch in branches {
        render_branch(&mut svg, branch, &x, &y);
    }
    svg.push_str("</svg>");
    svg
}

fn render_axes(svg: &mut String, x: &Axis, y: &Axis) {
    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;

    let _ = writeln!(
        svg,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"1\"/>",
        px(x0),
        px(y0),
        px(x1),
        px(y0),
    );
    let _ = writeln!(
        svg,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"1\"/>",
        px(x0),
        px(y0),
        px(x0),
        px(y1),
    );

    for tick in x.ticks(8) {
        let p = x.project(tick);
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"1\"/>",
            px(p),
            px(y0),
            px(p),
            px(y0 + TICK_LEN),
        );
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\" \
             text-anchor=\"middle\">{}</text>",
            px(p),
            px(y0 + TICK_LEN + 15.0),
            tick_label(tick),
        );
    }
    for tick in y.ticks(6) {
        let p = y.project(tick);
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"1\"/>",
            px(x0 - TICK_LEN),
            px(p),
            px(x0),
            px(p),
        );
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\" \
             text-anchor=\"end\" dominant-baseline=\"middle\">{}</text>",
            px(x0 - TICK_LEN - 5.0),
            px(p),
            tick_label(tick),
        );
    }

    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"15\" \
         text-anchor=\"middle\">t</text>",
        px((x0 + x1) / 2.0),
        px(HEIGHT - 12.0),
    );
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"15\" \
         text-anchor=\"middle\">E</text>",
        px(20.0),
        px((y0 + y1) / 2.0),
    );
}

fn render_branch(svg: &mut String, branch: &SpectrumBranch, x: &Axis, y: &Axis) {
    let in_gap = branch
        .classes
        .iter()
        .any(|c| matches!(c, StateClass::Edge | StateClass::ZeroMode));
    let (stroke, width) = if in_gap {
        ("#000000", "2")
    } else {
        ("#7a9bd4", "1.5")
    };

    if branch.points.len() == 1 {
        let (t, e) = branch.points[0];
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"{stroke}\"/>",
            px(x.project(t)),
            px(y.project(e)),
        );
        return;
    }

    let _ = write!(svg, "<polyline fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{width}\" points=\"");
    for (i, &(t, e)) in branch.points.iter().enumerate() {
        if i > 0 {
            svg.push(' ');
        }
        let _ = writeln!(svg, "{},{}", px(x.project(t)), px(y.project(e)));
    }
    svg.push_str("\"/>");
}

// ============================================================================
// Tests
// ============================================================================
