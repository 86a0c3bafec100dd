//! Bearing macro-geometry and the contact kinematics of the loaded diagonal.
//!
//! Angles are stored in radians. Lengths are in mm.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BearingKind {
    Conventional,
    Wire,
}

impl BearingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BearingKind::Conventional => "conventional",
            BearingKind::Wire => "wire",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingSide {
    Inner,
    Outer,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BearingGeometry {
    pub ball_diameter: f64,
    pub pitch_diameter: f64,
    pub ball_count: u32,
    /// Unloaded contact angle (rad).
    pub initial_contact_angle: f64,
    pub osculation_inner: f64,
    pub osculation_outer: f64,
    /// Half-width of the raceway arc seen from its curvature centre (rad).
    pub raceway_half_extent: f64,
    pub kind: BearingKind,
}

impl BearingGeometry {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGeometry(msg));
        if self.ball_count < 1 {
            return bad("ball count must be at least 1".into());
        }
        if !(self.ball_diameter > 0.0 && self.ball_diameter.is_finite()) {
            return bad(format!("ball diameter must be positive, got {}", self.ball_diameter));
        }
        if !(self.pitch_diameter > self.ball_diameter && self.pitch_diameter.is_finite()) {
            return bad(format!(
                "pitch diameter {} must exceed ball diameter {}",
                self.pitch_diameter, self.ball_diameter
            ));
        }
        if !(self.initial_contact_angle > 0.0 && self.initial_contact_angle < FRAC_PI_2) {
            return bad(format!(
                "initial contact angle must lie in (0, 90) deg, got {}",
                self.initial_contact_angle.to_degrees()
            ));
        }
        for s in [self.osculation_inner, self.osculation_outer] {
            check_osculation(s)?;
        }
        if !(self.raceway_half_extent > 0.0 && self.raceway_half_extent < FRAC_PI_2) {
            return bad(format!(
                "raceway half extent must lie in (0, 90) deg, got {}",
                self.raceway_half_extent.to_degrees()
            ));
        }
        Ok(())
    }

    pub fn osculation(&self, side: RingSide) -> f64 {
        match side {
            RingSide::Inner => self.osculation_inner,
            RingSide::Outer => self.osculation_outer,
        }
    }

    pub fn groove_radius(&self, side: RingSide) -> Result<f64> {
        groove_radius(self.osculation(side), self.ball_diameter)
    }

    /// Distance between the two loaded groove curvature centres with no load.
    pub fn unloaded_center_distance(&self) -> Result<f64> {
        let f_sum = 0.5 / self.osculation_inner + 0.5 / self.osculation_outer;
        check_osculation(self.osculation_inner)?;
        check_osculation(self.osculation_outer)?;
        Ok((f_sum - 1.0) * self.ball_diameter)
    }
}

fn check_osculation(s: f64) -> Result<()> {
    if s > 0.0 && s < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidOsculation(s))
    }
}

/// `rr = Dw / (2 s)`.
pub fn groove_radius(osculation_s: f64, ball_diameter: f64) -> Result<f64> {
    check_osculation(osculation_s)?;
    Ok(ball_diameter / (2.0 * osculation_s))
}

/// Raceway curvature in the rolling plane: convex on the inner ring,
/// concave on the outer.
pub fn rolling_direction_curvature(geometry: &BearingGeometry, contact_angle: f64, side: RingSide) -> f64 {
    let c = contact_angle.cos();
    let dw = geometry.ball_diameter;
    let dpw = geometry.pitch_diameter;
    match side {
        RingSide::Inner => 2.0 * c / (dpw - dw * c),
        RingSide::Outer => -2.0 * c / (dpw + dw * c),
    }
}

/// Contact state of one ball given the relative ring displacements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactKinematics {
    /// rad
    pub contact_angle: f64,
    /// Total interference of the series pair along the contact normal (mm).
    pub interference: f64,
    /// Contact centre position on the raceway arc (rad).
    pub arc_coordinate: f64,
}

/// Kinematics of the loaded contact pair. `wire_twist_phi` (rad) must be zero
/// for conventional bearings; any groove-centre shift caused by the twist is
/// expected to be folded into the displacements by the caller.
pub fn contact_kinematics(
    geometry: &BearingGeometry,
    axial_disp: f64,
    radial_disp: f64,
    wire_twist_phi: f64,
) -> Result<ContactKinematics> {
    let a0 = geometry.unloaded_center_distance()?;
    let alpha0 = geometry.initial_contact_angle;
    let (s, c) = alpha0.sin_cos();
    // rotate into the unloaded contact frame so the reference state is exact
    let along = a0 + s * axial_disp + c * radial_disp;
    let across = c * axial_disp - s * radial_disp;
    let length = along.hypot(across);
    let turn = across.atan2(along);
    let sq = axial_disp * axial_disp + radial_disp * radial_disp;
    Ok(ContactKinematics {
        contact_angle: alpha0 + turn,
        interference: (2.0 * a0 * (s * axial_disp + c * radial_disp) + sq) / (length + a0),
        arc_coordinate: turn - wire_twist_phi,
    })
}

/// Wire cross-section and its seat in the ring. Angles in rad, measured in
/// the same frame as the contact angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WireSeatGeometry {
    pub wire_radius: f64,
    /// Distance from the wire centre to the raceway groove curvature centre.
    pub groove_center_offset: f64,
    pub seat_half_angle: f64,
    /// Direction of the seat symmetry axis.
    pub seat_axis: f64,
    /// Direction of the groove-centre offset in the untwisted wire.
    pub offset_orientation: f64,
}

impl WireSeatGeometry {
    pub fn validate(&self) -> Result<()> {
        if !(self.wire_radius > 0.0 && self.wire_radius.is_finite()) {
            return Err(Error::InvalidGeometry(format!("wire radius must be positive, got {}", self.wire_radius)));
        }
        if !(self.groove_center_offset >= 0.0 && self.groove_center_offset.is_finite()) {
            return Err(Error::InvalidGeometry(format!(
                "groove centre offset must be non-negative, got {}",
                self.groove_center_offset
            )));
        }
        if !(self.seat_half_angle > 0.0 && self.seat_half_angle < FRAC_PI_2) {
            return Err(Error::InvalidGeometry(format!(
                "seat half angle must lie in (0, 90) deg, got {}",
                self.seat_half_angle.to_degrees()
            )));
        }
        if !(self.seat_axis.is_finite() && self.offset_orientation.is_finite()) {
            return Err(Error::InvalidGeometry("seat angles must be finite".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSection {
    /// mm^2
    pub area: f64,
    /// mm
    pub centroid_radius: f64,
    /// MPa
    pub elastic_modulus: f64,
}

impl RingSection {
    pub fn validate(&self) -> Result<()> {
        if self.area > 0.0 && self.centroid_radius > 0.0 && self.elastic_modulus > 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidGeometry(format!(
                "ring section needs positive area, radius and modulus, got {self:?}"
            )))
        }
    }
}
