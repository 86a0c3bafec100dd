//! Displacement-controlled equilibrium of the bearing under pure axial load.

use crate::case::CaseDefinition;
use crate::error::{Error, Result};
use crate::geometry::{contact_kinematics, rolling_direction_curvature, BearingKind, ContactKinematics, RingSide};
use crate::hertz::{curvature_analysis, interference_to_load, EffectiveModulus, HertzContact, HertzSolution};
use crate::roots::bisect;
use crate::wire::{twist_equilibrium, twist_groove_shift, TwistOutcome, WireState};

/// Converged state at one imposed axial displacement. Angles in rad.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatingPoint {
    pub axial_disp: f64,
    pub axial_force: f64,
    pub contact_force: f64,
    pub contact_angle: f64,
    pub wire_twist: f64,
    /// Relative radial displacement of the groove centres (mm).
    pub radial_disp: f64,
    pub arc_coordinate: f64,
    /// Total interference of the inner/outer series pair (mm).
    pub interference: f64,
    /// Contact with the highest peak pressure (the inner raceway in practice).
    pub hertz: HertzSolution,
    pub governing_side: RingSide,
    pub wire: Option<WireState>,
}

impl OperatingPoint {
    pub fn is_slipping(&self) -> bool {
        self.wire.is_some_and(|w| w.slipping)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StiffnessCurve {
    pub case_id: u32,
    pub samples: Vec<OperatingPoint>,
}

impl StiffnessCurve {
    pub fn max_axial_force(&self) -> f64 {
        self.samples.iter().map(|p| p.axial_force).fold(0.0, f64::max)
    }
}

/// Inner and outer Hertz contacts at one contact angle.
struct ContactPair {
    inner: HertzContact,
    outer: HertzContact,
    stiffness: f64,
}

impl ContactPair {
    fn load(&self, interference: f64) -> f64 {
        interference_to_load(self.stiffness, interference)
    }

    fn solve(&self, load_q: f64) -> Result<(HertzSolution, RingSide)> {
        let i = self.inner.solve(load_q)?;
        let o = self.outer.solve(load_q)?;
        Ok(if o.peak_pressure_p0 > i.peak_pressure_p0 {
            (o, RingSide::Outer)
        } else {
            (i, RingSide::Inner)
        })
    }
}

struct Trial {
    kin: ContactKinematics,
    twist: TwistOutcome,
    pair: ContactPair,
    load_q: f64,
}

/// Load-independent data of a case, prepared once per sweep.
pub struct CaseModel<'a> {
    case: &'a CaseDefinition,
    groove_inner: f64,
    groove_outer: f64,
    modulus: EffectiveModulus,
    radial_flexibility: f64,
    center_distance: f64,
}

const RADIAL_REL_TOL: f64 = 1e-12;
const CAPACITY_REL_TOL: f64 = 1e-10;

impl<'a> CaseModel<'a> {
    pub fn new(case: &'a CaseDefinition) -> Result<Self> {
        case.validate()?;
        Ok(Self {
            case,
            groove_inner: case.geometry.groove_radius(RingSide::Inner)?,
            groove_outer: case.geometry.groove_radius(RingSide::Outer)?,
            modulus: case.contact_modulus()?,
            radial_flexibility: case.rings()?.radial_flexibility(),
            center_distance: case.geometry.unloaded_center_distance()?,
        })
    }

    pub fn case(&self) -> &CaseDefinition {
        self.case
    }

    fn pair(&self, contact_angle: f64) -> Result<ContactPair> {
        let g = &self.case.geometry;
        let side = |groove: f64, s: RingSide| -> Result<HertzContact> {
            let rolling = rolling_direction_curvature(g, contact_angle, s);
            HertzContact::new(&curvature_analysis(g.ball_diameter, groove, rolling)?, self.modulus)
        };
        let inner = side(self.groove_inner, RingSide::Inner)?;
        let outer = side(self.groove_outer, RingSide::Outer)?;
        let stiffness = (inner.stiffness().powf(-2.0 / 3.0) + outer.stiffness().powf(-2.0 / 3.0)).powf(-1.5);
        Ok(ContactPair { inner, outer, stiffness })
    }

    fn kinematics(&self, axial: f64, radial: f64, phi: f64) -> Result<ContactKinematics> {
        match &self.case.wire_seat {
            Some(seat) if phi != 0.0 => {
                let (sx, sy) = twist_groove_shift(phi, seat);
                contact_kinematics(&self.case.geometry, axial + sx, radial + sy, phi)
            }
            _ => contact_kinematics(&self.case.geometry, axial, radial, phi),
        }
    }

    fn settle(&self, axial: f64, radial: f64, phi_previous: f64) -> Result<Trial> {
        let twist = match (&self.case.wire_seat, self.case.mu_wire_ring) {
            (Some(seat), Some(mu)) if self.case.kind() == BearingKind::Wire => {
                let k0 = self.kinematics(axial, radial, phi_previous)?;
                let q0 = self.pair(k0.contact_angle)?.load(k0.interference);
                twist_equilibrium(q0, phi_previous, mu, seat, |phi| {
                    Ok(self.kinematics(axial, radial, phi)?.contact_angle)
                })?
            }
            _ => TwistOutcome {
                twist_phi: phi_previous,
                slipping: false,
            },
        };
        let kin = self.kinematics(axial, radial, twist.twist_phi)?;
        let pair = self.pair(kin.contact_angle)?;
        let load_q = pair.load(kin.interference);
        Ok(Trial {
            kin,
            twist,
            pair,
            load_q,
        })
    }

    fn finish(&self, axial: f64, radial: f64, t: Trial) -> Result<OperatingPoint> {
        let (hertz, governing_side) = t.pair.solve(t.load_q)?;
        let wire = match (&self.case.wire_seat, self.case.mu_wire_ring) {
            (Some(seat), Some(mu)) => Some(WireState::evaluate(
                t.load_q,
                t.kin.contact_angle,
                t.twist.twist_phi,
                mu,
                seat,
                t.twist.slipping,
            )?),
            _ => None,
        };
        let n = f64::from(self.case.geometry.ball_count);
        Ok(OperatingPoint {
            axial_disp: axial,
            axial_force: n * t.load_q * t.kin.contact_angle.sin(),
            contact_force: t.load_q,
            contact_angle: t.kin.contact_angle,
            wire_twist: t.twist.twist_phi,
            radial_disp: radial,
            arc_coordinate: t.kin.arc_coordinate,
            interference: t.kin.interference,
            hertz,
            governing_side,
            wire,
        })
    }

    /// Equilibrium at `axial_disp` given the twist left by the previous step.
    pub fn operating_point(&self, axial_disp: f64, phi_previous: f64) -> Result<OperatingPoint> {
        self.operating_point_near(axial_disp, phi_previous, 0.0)
    }

    /// As [`CaseModel::operating_point`], searching for the radial balance
    /// from `radial_hint` (typically the previous step's value).
    pub fn operating_point_near(&self, axial_disp: f64, phi_previous: f64, radial_hint: f64) -> Result<OperatingPoint> {
        if !(axial_disp >= 0.0 && axial_disp.is_finite()) {
            return Err(Error::Precondition(format!("axial displacement must be non-negative, got {axial_disp}")));
        }
        let flex = self.radial_flexibility;
        let n = f64::from(self.case.geometry.ball_count);
        let residual = |r: f64| -> Result<f64> {
            let t = self.settle(axial_disp, r, phi_previous)?;
            Ok(r + flex * n * t.load_q * t.kin.contact_angle.cos())
        };
        let mut radial = 0.0;
        if flex > 0.0 {
            let hint = radial_hint.min(0.0);
            let g0 = residual(hint)?;
            if g0 == 0.0 {
                radial = hint;
            } else {
                // closing the rings raises the radial force, so dg/dr >= 1 and
                // one residual-sized step brackets the root
                let (near, other) = bracket_outward(&residual, hint, g0, -g0)?;
                radial = bisect(residual, near, other, |lo, hi, _| {
                    (hi - lo).abs() <= RADIAL_REL_TOL * lo.abs().max(hi.abs())
                })?;
            }
        }
        let t = self.settle(axial_disp, radial, phi_previous)?;
        self.finish(axial_disp, radial, t)
    }

    /// Rigid rings and no twist.
    pub fn rigid_point(&self, axial_disp: f64) -> Result<OperatingPoint> {
        let kin = contact_kinematics(&self.case.geometry, axial_disp, 0.0, 0.0)?;
        let pair = self.pair(kin.contact_angle)?;
        let load_q = pair.load(kin.interference);
        let t = Trial {
            kin,
            twist: TwistOutcome {
                twist_phi: 0.0,
                slipping: false,
            },
            pair,
            load_q,
        };
        let mut p = self.finish(axial_disp, 0.0, t)?;
        p.wire = None;
        Ok(p)
    }

    pub fn stiffness_curve(&self, max_disp: f64, n_steps: usize) -> Result<StiffnessCurve> {
        if n_steps < 2 {
            return Err(Error::Precondition(format!("a sweep needs at least 2 steps, got {n_steps}")));
        }
        if !(max_disp > 0.0 && max_disp.is_finite()) {
            return Err(Error::Precondition(format!("maximum displacement must be positive, got {max_disp}")));
        }
        let mut samples = Vec::with_capacity(n_steps + 1);
        let (mut phi, mut radial) = (0.0, 0.0);
        for step in 0..=n_steps {
            let u = max_disp * step as f64 / n_steps as f64;
            let p = self.operating_point_near(u, phi, radial).map_err(|e| Error::Step {
                step,
                source: Box::new(e),
            })?;
            phi = p.wire_twist;
            radial = p.radial_disp;
            samples.push(p);
        }
        Ok(StiffnessCurve {
            case_id: self.case.case_id,
            samples,
        })
    }

    /// Rigid-ring axial capacity: the load at which the governing peak
    /// pressure reaches the case pressure limit.
    pub fn static_capacity(&self) -> Result<(f64, OperatingPoint)> {
        let limit = self.case.pressure_limit;
        let excess = |u: f64| -> Result<f64> { Ok(self.rigid_point(u)?.hertz.peak_pressure_p0 - limit) };
        let mut hi = 1e-3 * self.center_distance;
        while excess(hi)? < 0.0 {
            hi *= 2.0;
            if hi > 10.0 * self.case.geometry.ball_diameter {
                return Err(Error::Bracket(format!(
                    "peak pressure stays below {limit} MPa up to {hi} mm axial displacement"
                )));
            }
        }
        let u = bisect(excess, 0.0, hi, |lo, hi, f| {
            f.abs() <= CAPACITY_REL_TOL * limit || (hi - lo).abs() <= 1e-15 * hi.abs()
        })?;
        let p = self.rigid_point(u)?;
        Ok((p.axial_force, p))
    }

    /// Sweep of `n_steps` equal steps reaching at least the capacity load.
    /// The end displacement is chosen from coarse sweeps that must carry
    /// `coverage` times the capacity.
    pub fn curve_to_capacity(&self, capacity: &OperatingPoint, n_steps: usize, coverage: f64) -> Result<StiffnessCurve> {
        let c0a = capacity.axial_force;
        let mut max_disp = 1.2 * capacity.axial_disp;
        let target = coverage * c0a;
        for _ in 0..40 {
            let coarse = self.stiffness_curve(max_disp, COARSE_STEPS)?;
            if coarse.max_axial_force() >= target {
                let curve = self.stiffness_curve(max_disp, n_steps)?;
                if curve.max_axial_force() >= c0a {
                    return Ok(curve);
                }
            }
            max_disp *= 1.5;
        }
        Err(Error::Coverage {
            reached: self.stiffness_curve(max_disp, COARSE_STEPS)?.max_axial_force(),
            required: c0a,
        })
    }
}

const COARSE_STEPS: usize = 40;

/// Find a sign change of `f` starting at `x0` (where `f = f0`) with a first
/// step `step`. Trial points that cannot be evaluated pull the search back
/// toward the last good point.
fn bracket_outward<F>(f: &F, x0: f64, f0: f64, step: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let (mut near, mut far) = (x0, x0 + step);
    let mut wall: Option<f64> = None;
    let mut last_err = None;
    for _ in 0..200 {
        match f(far) {
            Ok(v) if v == 0.0 || v.signum() != f0.signum() => return Ok((near, far)),
            Ok(_) => {
                let next = far + 2.0 * (far - near);
                near = far;
                far = match wall {
                    Some(w) if (next - near).abs() >= (w - near).abs() => 0.5 * (near + w),
                    _ => next,
                };
            }
            Err(e) => {
                wall = Some(far);
                far = 0.5 * (near + far);
                last_err = Some(e);
            }
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Bracket(format!("no sign change found from {x0:e} with step {step:e}"))))
}

pub fn operating_point(case: &CaseDefinition, axial_disp: f64, phi_previous: f64) -> Result<OperatingPoint> {
    CaseModel::new(case)?.operating_point(axial_disp, phi_previous)
}

pub fn stiffness_curve(case: &CaseDefinition, max_disp: f64, n_steps: usize) -> Result<StiffnessCurve> {
    CaseModel::new(case)?.stiffness_curve(max_disp, n_steps)
}

pub fn static_capacity(case: &CaseDefinition) -> Result<(f64, OperatingPoint)> {
    CaseModel::new(case)?.static_capacity()
}
