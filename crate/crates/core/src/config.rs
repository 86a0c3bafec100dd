//! TOML case-suite configuration.
//!
//! Files use mm, N, MPa and degrees throughout. Every table rejects unknown
//! keys. See `config/default.toml` for the shipped suite.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::case::{CaseDefinition, DEFAULT_PRESSURE_LIMIT};
use crate::error::{Error, Result};
use crate::geometry::{groove_radius, BearingGeometry, BearingKind, RingSection, RingSide, WireSeatGeometry};
use crate::hertz::ElasticMaterial;
use crate::wire::BoundaryCondition;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverSettings {
    #[serde(default = "default_steps")]
    pub steps: usize,
    #[serde(default = "default_pressure_limit", rename = "pressure_limit_mpa")]
    pub pressure_limit: f64,
    /// Sweeps are extended until they carry this multiple of the capacity.
    #[serde(default = "default_coverage")]
    pub coverage: f64,
}

fn default_steps() -> usize {
    200
}
fn default_pressure_limit() -> f64 {
    DEFAULT_PRESSURE_LIMIT
}
fn default_coverage() -> f64 {
    1.05
}

impl Default for SolverSettings {
    fn default() -> Self {
        Self {
            steps: default_steps(),
            pressure_limit: default_pressure_limit(),
            coverage: default_coverage(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseSuite {
    pub settings: SolverSettings,
    pub cases: Vec<CaseDefinition>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    schema_version: u32,
    #[serde(default)]
    solver: SolverSettings,
    bearing: BearingToml,
    materials: BTreeMap<String, MaterialToml>,
    conventional: ConventionalToml,
    wire: WireToml,
    #[serde(default, rename = "case")]
    cases: Vec<CaseToml>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BearingToml {
    ball_diameter_mm: f64,
    pitch_diameter_mm: f64,
    ball_count: u32,
    initial_contact_angle_deg: f64,
    /// Material of the balls and of every raceway surface.
    contact_material: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MaterialToml {
    elastic_modulus_mpa: f64,
    poisson_ratio: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingToml {
    area_mm2: f64,
    centroid_radius_mm: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConventionalToml {
    raceway_half_extent_deg: f64,
    ring_material: String,
    inner_ring: RingToml,
    outer_ring: RingToml,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireToml {
    raceway_half_extent_deg: f64,
    ring_material: String,
    inner_ring: RingToml,
    outer_ring: RingToml,
    wire_radius_mm: f64,
    /// Wire centre to raceway bottom; the groove centre lies a further
    /// groove radius beyond it.
    raceway_depth_mm: f64,
    seat_half_angle_deg: f64,
    /// Defaults to the initial contact angle.
    seat_axis_deg: Option<f64>,
    /// Defaults to the initial contact angle.
    offset_orientation_deg: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CaseToml {
    id: u32,
    kind: BearingKind,
    osculation: f64,
    /// Outer raceways; defaults to `osculation`.
    osculation_outer: Option<f64>,
    mu_ball_raceway: f64,
    mu_wire_ring: Option<f64>,
    #[serde(default = "both_conditions")]
    boundary_conditions: Vec<BoundaryCondition>,
}

fn both_conditions() -> Vec<BoundaryCondition> {
    vec![BoundaryCondition::Clamped, BoundaryCondition::Unclamped]
}

pub fn load_config(path: impl AsRef<Path>) -> Result<CaseSuite> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<CaseSuite> {
    let file: ConfigFile = toml::from_str(text).map_err(|e| Error::ConfigParse(e.to_string()))?;
    build_suite(file)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::ConfigValidation(msg.into())
}

fn material(file: &ConfigFile, name: &str) -> Result<ElasticMaterial> {
    let m = file
        .materials
        .get(name)
        .ok_or_else(|| invalid(format!("unknown material `{name}`")))?;
    Ok(ElasticMaterial::new(m.elastic_modulus_mpa, m.poisson_ratio))
}

fn ring(r: &RingToml, modulus: f64) -> RingSection {
    RingSection {
        area: r.area_mm2,
        centroid_radius: r.centroid_radius_mm,
        elastic_modulus: modulus,
    }
}

fn build_suite(file: ConfigFile) -> Result<CaseSuite> {
    if file.schema_version != SCHEMA_VERSION {
        return Err(invalid(format!(
            "schema_version {} is not supported (expected {SCHEMA_VERSION})",
            file.schema_version
        )));
    }
    let s = file.solver;
    if s.steps < 2 {
        return Err(invalid(format!("solver.steps must be at least 2, got {}", s.steps)));
    }
    if !(s.coverage >= 1.0) {
        return Err(invalid(format!("solver.coverage must be at least 1, got {}", s.coverage)));
    }
    let contact = material(&file, &file.bearing.contact_material)?;
    let mut cases = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for c in &file.cases {
        for &bc in &c.boundary_conditions {
            if !seen.insert((c.id, bc.as_str())) {
                return Err(invalid(format!("case {} {} defined twice", c.id, bc.as_str())));
            }
            let case = build_case(&file, c, bc, contact, s.pressure_limit)?;
            case.validate().map_err(|e| match e {
                Error::ConfigValidation(_) => e,
                other => invalid(format!("case {} {}: {other}", c.id, bc.as_str())),
            })?;
            cases.push(case);
        }
    }
    Ok(CaseSuite { settings: s, cases })
}

fn build_case(
    file: &ConfigFile,
    c: &CaseToml,
    bc: BoundaryCondition,
    contact: ElasticMaterial,
    pressure_limit: f64,
) -> Result<CaseDefinition> {
    let b = &file.bearing;
    let label = format!("case {} {}", c.id, bc.as_str());
    for s in [Some(c.osculation), c.osculation_outer].into_iter().flatten() {
        if !(s > 0.0 && s < 1.0) {
            return Err(invalid(format!("{label}: osculation must lie in (0, 1), got {s}")));
        }
    }
    if c.kind == BearingKind::Conventional && c.mu_wire_ring.is_some() {
        return Err(invalid(format!("{label}: mu_wire_ring set on a conventional bearing")));
    }
    let (extent, ring_material, inner, outer) = match c.kind {
        BearingKind::Conventional => {
            let k = &file.conventional;
            (k.raceway_half_extent_deg, &k.ring_material, &k.inner_ring, &k.outer_ring)
        }
        BearingKind::Wire => {
            let k = &file.wire;
            (k.raceway_half_extent_deg, &k.ring_material, &k.inner_ring, &k.outer_ring)
        }
    };
    let ring_modulus = material(file, ring_material)?.elastic_modulus;
    let geometry = BearingGeometry {
        ball_diameter: b.ball_diameter_mm,
        pitch_diameter: b.pitch_diameter_mm,
        ball_count: b.ball_count,
        initial_contact_angle: b.initial_contact_angle_deg.to_radians(),
        osculation_inner: c.osculation,
        osculation_outer: c.osculation_outer.unwrap_or(c.osculation),
        raceway_half_extent: extent.to_radians(),
        kind: c.kind,
    };
    let wire_seat = match c.kind {
        BearingKind::Conventional => None,
        BearingKind::Wire => {
            let w = &file.wire;
            let alpha0 = b.initial_contact_angle_deg;
            // both loaded wires are taken alike; use the inner groove
            let rr = groove_radius(geometry.osculation(RingSide::Inner), geometry.ball_diameter)?;
            Some(WireSeatGeometry {
                wire_radius: w.wire_radius_mm,
                groove_center_offset: w.raceway_depth_mm + rr,
                seat_half_angle: w.seat_half_angle_deg.to_radians(),
                seat_axis: w.seat_axis_deg.unwrap_or(alpha0).to_radians(),
                offset_orientation: w.offset_orientation_deg.unwrap_or(alpha0).to_radians(),
            })
        }
    };
    Ok(CaseDefinition {
        case_id: c.id,
        geometry,
        mu_ball_raceway: c.mu_ball_raceway,
        mu_wire_ring: c.mu_wire_ring,
        boundary_condition: bc,
        wire_seat,
        ball_material: contact,
        raceway_material: contact,
        inner_ring: ring(inner, ring_modulus),
        outer_ring: ring(outer, ring_modulus),
        pressure_limit,
    })
}

/// The suite shipped with the crate.
pub const DEFAULT_CONFIG: &str = include_str!("../config/default.toml");

pub fn default_suite() -> Result<CaseSuite> {
    parse_config(DEFAULT_CONFIG)
}
