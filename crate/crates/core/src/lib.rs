//! Reduced-order static analysis of four-point-contact slewing bearings and
//! wire-race bearings under pure axial load.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod case;
pub mod config;
pub mod elliptic;
pub mod error;
pub mod geometry;
pub mod hertz;
pub mod report;
mod roots;
pub mod runner;
pub mod solver;
pub mod svg;
pub mod truncation;
pub mod wire;

pub use case::{CaseDefinition, DEFAULT_PRESSURE_LIMIT};
pub use config::{default_suite, load_config, parse_config, CaseSuite, SolverSettings};
pub use error::{Error, Result};
pub use geometry::{
    contact_kinematics, groove_radius, rolling_direction_curvature, BearingGeometry, BearingKind, ContactKinematics,
    RingSection, RingSide, WireSeatGeometry,
};
pub use hertz::{
    curvature_analysis, interference_to_load, pressure_profile, solve_hertz, CurvatureSet, EffectiveModulus,
    ElasticMaterial, HertzContact, HertzSolution,
};
pub use report::{emit_outputs, read_summary, FileManifest, SummaryRow, STIFFNESS_HEADER};
pub use runner::{run_case, run_cases, CaseFailure, CaseResult, RunReport};
pub use solver::{operating_point, static_capacity, stiffness_curve, CaseModel, OperatingPoint, StiffnessCurve};
pub use truncation::{
    ellipse_placement, truncated_pressure, truncation_loads, truncation_status, EllipsePlacement, TruncatedPressure,
    TruncationLoads, TruncationState, TruncationStatus,
};
pub use wire::{
    ring_radial_expansion, seat_reactions, twist_equilibrium, twist_equilibrium_at, BoundaryCondition, RingCompliance,
    RingPair, WireState,
};
