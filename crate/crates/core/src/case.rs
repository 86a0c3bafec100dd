//! A single analysis run: one bearing, one boundary condition.

use crate::error::{Error, Result};
use crate::geometry::{BearingGeometry, BearingKind, RingSection, WireSeatGeometry};
use crate::hertz::{EffectiveModulus, ElasticMaterial};
use crate::wire::{BoundaryCondition, RingCompliance, RingPair};

/// Static pressure criterion defining the axial capacity (MPa).
pub const DEFAULT_PRESSURE_LIMIT: f64 = 4200.0;

#[derive(Debug, Clone, PartialEq)]
pub struct CaseDefinition {
    pub case_id: u32,
    pub geometry: BearingGeometry,
    pub mu_ball_raceway: f64,
    pub mu_wire_ring: Option<f64>,
    pub boundary_condition: BoundaryCondition,
    /// Present for wire bearings only.
    pub wire_seat: Option<WireSeatGeometry>,
    pub ball_material: ElasticMaterial,
    pub raceway_material: ElasticMaterial,
    pub inner_ring: RingSection,
    pub outer_ring: RingSection,
    pub pressure_limit: f64,
}

impl CaseDefinition {
    pub fn kind(&self) -> BearingKind {
        self.geometry.kind
    }

    /// Run label used for file names, e.g. `case3_unclamped`.
    pub fn label(&self) -> String {
        format!("case{}_{}", self.case_id, self.boundary_condition.as_str())
    }

    pub fn contact_modulus(&self) -> Result<EffectiveModulus> {
        EffectiveModulus::from_materials(&self.ball_material, &self.raceway_material)
    }

    pub fn rings(&self) -> Result<RingPair> {
        Ok(RingPair {
            inner: RingCompliance::new(&self.inner_ring, self.boundary_condition)?,
            outer: RingCompliance::new(&self.outer_ring, self.boundary_condition)?,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::ConfigValidation(format!("{}: {msg}", self.label())));
        self.geometry.validate()?;
        self.inner_ring.validate()?;
        self.outer_ring.validate()?;
        for m in [&self.ball_material, &self.raceway_material] {
            if !(m.elastic_modulus > 0.0 && m.poisson_ratio > -1.0 && m.poisson_ratio < 0.5) {
                return fail(format!("invalid elastic constants {m:?}"));
            }
        }
        if !(self.mu_ball_raceway >= 0.0) {
            return fail(format!("mu_ball_raceway must be non-negative, got {}", self.mu_ball_raceway));
        }
        if !(self.pressure_limit > 0.0) {
            return fail(format!("pressure limit must be positive, got {}", self.pressure_limit));
        }
        match (self.kind(), self.mu_wire_ring, &self.wire_seat) {
            (BearingKind::Conventional, None, None) => Ok(()),
            (BearingKind::Conventional, Some(_), _) => fail("mu_wire_ring is only meaningful for wire bearings".into()),
            (BearingKind::Conventional, None, Some(_)) => fail("conventional bearing cannot carry a wire seat".into()),
            (BearingKind::Wire, None, _) => fail("wire bearing needs mu_wire_ring".into()),
            (BearingKind::Wire, Some(_), None) => fail("wire bearing needs a wire seat".into()),
            (BearingKind::Wire, Some(mu), Some(seat)) => {
                if !(mu > 0.0 && mu.is_finite()) {
                    return fail(format!("mu_wire_ring must be positive, got {mu}"));
                }
                seat.validate()
            }
        }
    }
}
