//! Contact ellipse position on the finite raceway arc.
//!
//! The ellipse major axis lies across the groove, so its angular half-width
//! on the raceway arc is `a / rr`. Angles in rad.

use crate::error::{Error, Result};
use crate::geometry::BearingGeometry;
use crate::hertz::HertzSolution;
use crate::solver::{OperatingPoint, StiffnessCurve};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipsePlacement {
    pub center_psi: f64,
    pub angular_half_width: f64,
    pub raceway_half_extent: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruncationState {
    None,
    Partial,
    Complete,
}

impl TruncationState {
    pub fn as_str(self) -> &'static str {
        match self {
            TruncationState::None => "none",
            TruncationState::Partial => "partial",
            TruncationState::Complete => "complete",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationStatus {
    pub state: TruncationState,
    /// `extent - (|psi| + half_width)`; positive while the ellipse fits.
    pub onset_margin: f64,
}

pub fn ellipse_placement(op: &OperatingPoint, geometry: &BearingGeometry) -> Result<EllipsePlacement> {
    let groove = geometry.groove_radius(op.governing_side)?;
    Ok(EllipsePlacement {
        center_psi: op.arc_coordinate,
        angular_half_width: op.hertz.semi_major_a / groove,
        raceway_half_extent: geometry.raceway_half_extent,
    })
}

/// Tangency counts as partial.
pub fn truncation_status(p: &EllipsePlacement) -> TruncationStatus {
    let onset_margin = p.raceway_half_extent - (p.center_psi.abs() + p.angular_half_width);
    let state = if onset_margin > 0.0 {
        TruncationState::None
    } else if p.center_psi.abs() >= p.raceway_half_extent {
        TruncationState::Complete
    } else {
        TruncationState::Partial
    };
    TruncationStatus { state, onset_margin }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TruncationLoads {
    /// Fraction of `C0a` at which the ellipse first touches the raceway edge.
    pub onset_fraction: Option<f64>,
    /// Fraction of `C0a` at which the ellipse centre reaches the edge.
    pub complete_fraction: Option<f64>,
}

/// Load at the first sample pair where `margin` turns non-positive,
/// interpolated linearly in the margin.
fn crossing_load(curve: &StiffnessCurve, mut margin: impl FnMut(&OperatingPoint) -> Result<f64>) -> Result<Option<f64>> {
    let mut prev: Option<(f64, f64)> = None;
    for p in &curve.samples {
        let m = margin(p)?;
        if m <= 0.0 {
            return Ok(Some(match prev {
                Some((m0, f0)) => f0 + m0 / (m0 - m) * (p.axial_force - f0),
                None => p.axial_force,
            }));
        }
        prev = Some((m, p.axial_force));
    }
    Ok(None)
}

pub fn truncation_loads(geometry: &BearingGeometry, curve: &StiffnessCurve, c0a: f64) -> Result<TruncationLoads> {
    let reached = curve.max_axial_force();
    if reached < c0a {
        return Err(Error::Coverage { reached, required: c0a });
    }
    let status = |p: &OperatingPoint| -> Result<TruncationStatus> { Ok(truncation_status(&ellipse_placement(p, geometry)?)) };
    let below_capacity = |f: Option<f64>| f.map(|f| f / c0a).filter(|x| *x <= 1.0);
    let onset = crossing_load(curve, |p| Ok(status(p)?.onset_margin))?;
    let complete = crossing_load(curve, |p| Ok(geometry.raceway_half_extent - p.arc_coordinate.abs()))?;
    Ok(TruncationLoads {
        onset_fraction: below_capacity(onset),
        complete_fraction: below_capacity(complete),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedPressure {
    pub rescaled_peak: f64,
    /// Position of the peak along the major axis from the ellipse centre (mm).
    pub peak_position: f64,
    /// Share of the Hertz load that falls inside the raceway.
    pub retained_fraction: f64,
    /// `(x, p)` along the major axis, zero outside the raceway.
    pub profile: Vec<(f64, f64)>,
}

/// Share of a semi-ellipsoidal load lying at normalised major-axis
/// coordinate below `t`.
fn load_below(t: f64) -> f64 {
    let t = t.clamp(-1.0, 1.0);
    (2.0 + 3.0 * t - t * t * t) / 4.0
}

/// Clip the Hertz pressure at the raceway edges and rescale it so the
/// retained part carries the full load.
pub fn truncated_pressure(sol: &HertzSolution, placement: &EllipsePlacement, n_samples: usize) -> Result<TruncatedPressure> {
    if truncation_status(placement).state == TruncationState::None {
        return Err(Error::Precondition("ellipse lies inside the raceway; nothing to truncate".into()));
    }
    if !(sol.load_q > 0.0) || n_samples < 3 {
        return Err(Error::Precondition("truncated profile needs a loaded contact and at least 3 samples".into()));
    }
    let w = placement.angular_half_width;
    let ext = placement.raceway_half_extent;
    let upper = (ext - placement.center_psi) / w;
    let lower = (-ext - placement.center_psi) / w;
    let retained = load_below(upper) - load_below(lower);
    if !(retained > 0.0) {
        return Err(Error::DegenerateTruncation);
    }
    let a = sol.semi_major_a;
    let p0 = sol.peak_pressure_p0;
    let (peak_t, rescaled_peak) = if lower <= 0.0 && upper >= 0.0 {
        (0.0, p0 / retained)
    } else {
        let edge = if upper < 0.0 { upper } else { lower };
        (edge, p0 * (1.0 - edge * edge).max(0.0).sqrt() / retained)
    };
    let last = (n_samples - 1) as f64;
    let profile = (0..n_samples)
        .map(|i| {
            let t = (2.0 * i as f64 - last) / last;
            let p = if t >= lower && t <= upper {
                p0 * ((1.0 - t) * (1.0 + t)).max(0.0).sqrt() / retained
            } else {
                0.0
            };
            (t * a, p)
        })
        .collect();
    Ok(TruncatedPressure {
        rescaled_peak,
        peak_position: peak_t * a,
        retained_fraction: retained,
        profile,
    })
}
