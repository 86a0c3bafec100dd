//! Minimal deterministic SVG line plots.
//!
//! Output depends only on the input data: fixed number formatting, no
//! timestamps, no random ids.

use std::fmt::Write as _;

use crate::runner::CaseResult;
use crate::wire::BoundaryCondition;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkerShape {
    Circle,
    Square,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
    pub color: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Marker {
    pub x: f64,
    pub y: f64,
    pub shape: MarkerShape,
    pub color: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LinePlot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
    pub markers: Vec<Marker>,
    /// Legend lines for the marker shapes.
    pub marker_notes: Vec<(MarkerShape, String)>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn nice_step(span: f64) -> f64 {
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let k = if norm < 1.5 {
        1.0
    } else if norm < 3.0 {
        2.0
    } else if norm < 7.0 {
        5.0
    } else {
        10.0
    };
    k * mag
}

/// Axis range snapped to tick multiples.
fn axis(lo: f64, hi: f64) -> (f64, f64, f64) {
    let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 0.5, lo + 0.5) };
    let step = nice_step(hi - lo);
    ((lo / step).floor() * step, (hi / step).ceil() * step, step)
}

fn tick_label(v: f64, step: f64) -> String {
    let decimals = if step >= 1.0 { 0 } else { (-step.log10().floor()) as usize };
    let s = format!("{v:.decimals$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

impl LinePlot {
    fn bounds(&self) -> ((f64, f64, f64), (f64, f64, f64)) {
        let pts = self
            .series
            .iter()
            .flat_map(|s| s.points.iter().copied())
            .chain(self.markers.iter().map(|m| (m.x, m.y)))
            .filter(|(x, y)| x.is_finite() && y.is_finite());
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for (x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        if !x0.is_finite() {
            (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
        }
        (axis(x0, x1), axis(y0, y1))
    }

    pub fn render(&self) -> String {
        let ((x0, x1, xs), (y0, y1, ys)) = self.bounds();
        let pw = WIDTH - LEFT - RIGHT;
        let ph = HEIGHT - TOP - BOTTOM;
        let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * pw;
        let sy = |y: f64| TOP + ph - (y - y0) / (y1 - y0) * ph;

        let mut o = String::new();
        let _ = writeln!(
            o,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(o, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        let _ = writeln!(
            o,
            r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
            LEFT + pw / 2.0,
            escape(&self.title)
        );

        // grid and ticks
        let nx = ((x1 - x0) / xs).round() as usize;
        for i in 0..=nx {
            let v = x0 + i as f64 * xs;
            let x = sx(v);
            let _ = writeln!(
                o,
                r##"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="#dddddd"/>"##,
                TOP,
                TOP + ph
            );
            let _ = writeln!(
                o,
                r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                TOP + ph + 18.0,
                tick_label(v, xs)
            );
        }
        let ny = ((y1 - y0) / ys).round() as usize;
        for i in 0..=ny {
            let v = y0 + i as f64 * ys;
            let y = sy(v);
            let _ = writeln!(
                o,
                r##"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#dddddd"/>"##,
                LEFT,
                LEFT + pw
            );
            let _ = writeln!(
                o,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                LEFT - 6.0,
                y + 4.0,
                tick_label(v, ys)
            );
        }
        let _ = writeln!(
            o,
            r#"<rect x="{LEFT:.2}" y="{TOP:.2}" width="{pw:.2}" height="{ph:.2}" fill="none" stroke="black"/>"#
        );
        let _ = writeln!(
            o,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + pw / 2.0,
            HEIGHT - 16.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            o,
            r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
            TOP + ph / 2.0,
            TOP + ph / 2.0,
            escape(&self.y_label)
        );

        for s in &self.series {
            let pts: Vec<String> = s
                .points
                .iter()
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
                .collect();
            let _ = writeln!(
                o,
                r#"<polyline fill="none" stroke="{}" stroke-width="1.6" points="{}"/>"#,
                escape(&s.color),
                pts.join(" ")
            );
        }
        for m in &self.markers {
            let _ = writeln!(o, "{}", marker(m.shape, sx(m.x), sy(m.y), &m.color));
        }

        // legend
        let lx = LEFT + pw + 14.0;
        let mut ly = TOP + 10.0;
        for s in &self.series {
            let _ = writeln!(
                o,
                r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{}" stroke-width="2"/>"#,
                lx + 22.0,
                escape(&s.color)
            );
            let _ = writeln!(o, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, lx + 28.0, ly + 4.0, escape(&s.name));
            ly += 18.0;
        }
        for (shape, note) in &self.marker_notes {
            let _ = writeln!(o, "{}", marker(*shape, lx + 11.0, ly, "black"));
            let _ = writeln!(o, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, lx + 28.0, ly + 4.0, escape(note));
            ly += 18.0;
        }
        o.push_str("</svg>\n");
        o
    }
}

fn marker(shape: MarkerShape, x: f64, y: f64, color: &str) -> String {
    match shape {
        MarkerShape::Circle => format!(
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="white" stroke="{}" stroke-width="1.6"/>"#,
            escape(color)
        ),
        MarkerShape::Square => format!(
            r#"<rect x="{:.2}" y="{:.2}" width="8" height="8" fill="{}" stroke="{}"/>"#,
            x - 4.0,
            y - 4.0,
            escape(color),
            escape(color)
        ),
    }
}

fn color(i: usize) -> String {
    PALETTE[i % PALETTE.len()].to_string()
}

/// Displacement at which the curve carries `force`, by linear interpolation.
fn displacement_at(r: &CaseResult, force: f64) -> Option<f64> {
    r.curve.samples.windows(2).find_map(|w| {
        let (a, b) = (&w[0], &w[1]);
        (a.axial_force <= force && force <= b.axial_force && b.axial_force > a.axial_force)
            .then(|| a.axial_disp + (force - a.axial_force) / (b.axial_force - a.axial_force) * (b.axial_disp - a.axial_disp))
    })
}

/// Axial force against axial displacement up to capacity, with truncation
/// onset and completion marked.
pub fn stiffness_plot(results: &[&CaseResult], bc: BoundaryCondition) -> String {
    let mut plot = LinePlot {
        title: format!("Axial stiffness ({})", bc.as_str()),
        x_label: "axial displacement [mm]".into(),
        y_label: "axial force [kN]".into(),
        marker_notes: vec![
            (MarkerShape::Circle, "truncation onset".into()),
            (MarkerShape::Square, "truncation complete".into()),
        ],
        ..LinePlot::default()
    };
    for (i, r) in results.iter().enumerate() {
        let c = color(i);
        plot.series.push(Series {
            name: format!("case {} ({})", r.case.case_id, r.case.kind().as_str()),
            points: r.samples_to_capacity().map(|p| (p.axial_disp, p.axial_force / 1e3)).collect(),
            color: c.clone(),
        });
        for (frac, shape) in [
            (r.truncation.onset_fraction, MarkerShape::Circle),
            (r.truncation.complete_fraction, MarkerShape::Square),
        ] {
            if let Some(f) = frac {
                let force = f * r.capacity;
                if let Some(x) = displacement_at(r, force) {
                    plot.markers.push(Marker {
                        x,
                        y: force / 1e3,
                        shape,
                        color: c.clone(),
                    });
                }
            }
        }
    }
    plot.render()
}

/// Contact angle against ball contact force up to capacity.
pub fn contact_angle_plot(results: &[&CaseResult], bc: BoundaryCondition) -> String {
    let mut plot = LinePlot {
        title: format!("Contact angle ({})", bc.as_str()),
        x_label: "contact force Q [kN]".into(),
        y_label: "contact angle [deg]".into(),
        ..LinePlot::default()
    };
    for (i, r) in results.iter().enumerate() {
        plot.series.push(Series {
            name: format!("case {} ({})", r.case.case_id, r.case.kind().as_str()),
            points: r
                .samples_to_capacity()
                .map(|p| (p.contact_force / 1e3, p.contact_angle.to_degrees()))
                .collect(),
            color: color(i),
        });
    }
    plot.render()
}
