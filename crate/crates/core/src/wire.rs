//! Wire twist on its friction seat and thin-ring hoop compliance.
//!
//! Twist angles are signed in the same sense as the contact angle. The ball
//! force pushes the groove centre so that a loaded wire rotates with negative
//! `phi`; the magnitude is what grows along a loading path.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{RingSection, WireSeatGeometry};
use crate::roots::bisect;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryCondition {
    Clamped,
    Unclamped,
}

impl BoundaryCondition {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryCondition::Clamped => "clamped",
            BoundaryCondition::Unclamped => "unclamped",
        }
    }
}

/// Radial compliance of one ring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingCompliance {
    pub boundary_condition: BoundaryCondition,
    /// `R^2 / (E A)`, radial displacement per unit radial line load (mm^2/N).
    pub hoop_flexibility: f64,
    pub centroid_radius: f64,
}

impl RingCompliance {
    pub fn new(section: &RingSection, boundary_condition: BoundaryCondition) -> Result<Self> {
        section.validate()?;
        let r = section.centroid_radius;
        Ok(Self {
            boundary_condition,
            hoop_flexibility: r * r / (section.elastic_modulus * section.area),
            centroid_radius: r,
        })
    }

    pub fn effective_flexibility(&self) -> f64 {
        match self.boundary_condition {
            BoundaryCondition::Clamped => 0.0,
            BoundaryCondition::Unclamped => self.hoop_flexibility,
        }
    }
}

/// Magnitude of the hoop displacement of one ring under a uniform radial
/// line load (N/mm).
pub fn ring_radial_expansion(total_radial_line_load: f64, compliance: &RingCompliance) -> f64 {
    compliance.effective_flexibility() * total_radial_line_load
}

/// Both rings of the bearing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingPair {
    pub inner: RingCompliance,
    pub outer: RingCompliance,
}

impl RingPair {
    /// Relative radial displacement of the groove centres caused by a total
    /// radial contact force `F_r` spread over both circumferences. Negative
    /// values open the contact.
    pub fn relative_radial_displacement(&self, total_radial_force: f64) -> f64 {
        let u = |ring: &RingCompliance| {
            let q = total_radial_force / (2.0 * PI * ring.centroid_radius);
            ring_radial_expansion(q, ring)
        };
        -(u(&self.inner) + u(&self.outer))
    }

    /// `-d(radial)/d(F_r)`, zero when both rings are clamped.
    pub fn radial_flexibility(&self) -> f64 {
        -self.relative_radial_displacement(1.0)
    }
}

/// Force balance of the rigid wire section on its two seat lines.
///
/// `contact_angle - twist_phi` is the ball force direction in the wire frame.
pub fn seat_reactions(load_q: f64, contact_angle: f64, twist_phi: f64, seat: &WireSeatGeometry) -> Result<(f64, f64)> {
    if load_q.is_nan() || load_q < 0.0 {
        return Err(Error::Precondition(format!("seat load must be non-negative, got {load_q}")));
    }
    if load_q == 0.0 {
        return Ok((0.0, 0.0));
    }
    let beta = seat.seat_half_angle;
    let gamma = contact_angle - twist_phi - seat.seat_axis;
    let s2b = (2.0 * beta).sin();
    let n1 = load_q * (beta + gamma).sin() / s2b;
    let n2 = load_q * (beta - gamma).sin() / s2b;
    match (n1 >= 0.0, n2 >= 0.0) {
        (true, true) => Ok((n1, n2)),
        (true, false) => Ok(((load_q * (gamma - beta).cos()).max(0.0), 0.0)),
        (false, true) => Ok((0.0, (load_q * (gamma + beta).cos()).max(0.0))),
        (false, false) => Err(Error::SeatSeparation {
            angle_deg: gamma.to_degrees(),
        }),
    }
}

/// Twisting moment of the ball force about the wire centre (N mm).
pub fn applied_moment(load_q: f64, contact_angle: f64, twist_phi: f64, seat: &WireSeatGeometry) -> f64 {
    load_q * seat.groove_center_offset * (contact_angle - twist_phi - seat.offset_orientation).sin()
}

/// Largest moment the seat friction can resist (N mm).
pub fn friction_capacity(
    load_q: f64,
    contact_angle: f64,
    twist_phi: f64,
    mu_wire_ring: f64,
    seat: &WireSeatGeometry,
) -> Result<f64> {
    let (n1, n2) = seat_reactions(load_q, contact_angle, twist_phi, seat)?;
    Ok(mu_wire_ring * (n1 + n2) * seat.wire_radius)
}

/// `M / M_cap`; independent of the load magnitude.
pub fn moment_ratio(contact_angle: f64, twist_phi: f64, mu_wire_ring: f64, seat: &WireSeatGeometry) -> Result<f64> {
    let cap = friction_capacity(1.0, contact_angle, twist_phi, mu_wire_ring, seat)?;
    let m = applied_moment(1.0, contact_angle, twist_phi, seat);
    if cap == 0.0 {
        return Ok(if m == 0.0 { 0.0 } else { f64::INFINITY.copysign(m) });
    }
    Ok(m / cap)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct WireState {
    /// rad
    pub twist_phi: f64,
    pub seat_reactions: (f64, f64),
    pub applied_moment: f64,
    pub friction_capacity: f64,
    pub slipping: bool,
}

impl WireState {
    pub fn evaluate(
        load_q: f64,
        contact_angle: f64,
        twist_phi: f64,
        mu_wire_ring: f64,
        seat: &WireSeatGeometry,
        slipping: bool,
    ) -> Result<Self> {
        let seat_reactions = seat_reactions(load_q, contact_angle, twist_phi, seat)?;
        Ok(Self {
            twist_phi,
            seat_reactions,
            applied_moment: applied_moment(load_q, contact_angle, twist_phi, seat),
            friction_capacity: mu_wire_ring * (seat_reactions.0 + seat_reactions.1) * seat.wire_radius,
            slipping,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistOutcome {
    /// rad
    pub twist_phi: f64,
    pub slipping: bool,
}

const PROBE: f64 = 1e-7;
const FIRST_STEP: f64 = 1e-4;
const MOMENT_TOL: f64 = 1e-11;

/// Stick/slip update of the wire twist.
///
/// `alpha_of_phi` returns the contact angle produced by a trial twist; it
/// carries the kinematic coupling between twist and contact position. With
/// a fixed contact angle pass a constant closure.
pub fn twist_equilibrium<F>(
    load_q: f64,
    phi_previous: f64,
    mu_wire_ring: f64,
    seat: &WireSeatGeometry,
    mut alpha_of_phi: F,
) -> Result<TwistOutcome>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(mu_wire_ring > 0.0) {
        return Err(Error::Precondition(format!("wire-ring friction must be positive, got {mu_wire_ring}")));
    }
    let stick = TwistOutcome {
        twist_phi: phi_previous,
        slipping: false,
    };
    if !(load_q > 0.0) {
        return Ok(stick);
    }
    let mut ratio = |phi: f64| -> Result<f64> {
        let alpha = alpha_of_phi(phi)?;
        moment_ratio(alpha, phi, mu_wire_ring, seat)
    };
    let start = ratio(phi_previous)?;
    // a state left on the friction limit by a previous slip still sticks
    if start.abs() <= 1.0 + MOMENT_TOL {
        return Ok(stick);
    }
    let target = start.signum();

    // slide in the direction that relieves the moment
    let slope = ratio(phi_previous + PROBE)? - ratio(phi_previous - PROBE)?;
    let dir = if slope * target > 0.0 { -1.0 } else { 1.0 };
    let mut prev = phi_previous;
    let mut step = FIRST_STEP;
    let found = loop {
        let trial = prev + dir * step;
        if (trial - phi_previous).abs() > FRAC_PI_2 {
            return Err(Error::TwistSaturation {
                phi_from_deg: phi_previous.to_degrees(),
                phi_to_deg: trial.to_degrees(),
                detail: format!("moment ratio still {:.4} after a quarter turn", ratio(trial)?),
            });
        }
        if ratio(trial)? * target <= 1.0 {
            break trial;
        }
        prev = trial;
        step *= 2.0;
    };
    let phi = bisect(|p| Ok(ratio(p)? - target), prev, found, |lo, hi, r| {
        r.abs() <= MOMENT_TOL || (hi - lo).abs() <= 1e-15 * (1.0 + lo.abs())
    })?;
    Ok(TwistOutcome {
        twist_phi: phi,
        slipping: true,
    })
}

/// Twist update at a fixed contact angle.
pub fn twist_equilibrium_at(
    load_q: f64,
    contact_angle: f64,
    phi_previous: f64,
    mu_wire_ring: f64,
    seat: &WireSeatGeometry,
) -> Result<f64> {
    Ok(twist_equilibrium(load_q, phi_previous, mu_wire_ring, seat, |_| Ok(contact_angle))?.twist_phi)
}

/// Change of the groove-centre vector `(axial, radial)` when both loaded
/// wires turn by `phi`.
pub fn twist_groove_shift(phi: f64, seat: &WireSeatGeometry) -> (f64, f64) {
    let o = seat.offset_orientation;
    let d2 = 2.0 * seat.groove_center_offset;
    (d2 * ((o + phi).sin() - o.sin()), d2 * ((o + phi).cos() - o.cos()))
}
