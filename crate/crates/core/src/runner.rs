//! Execution of a case suite.

use rayon::prelude::*;

use crate::case::CaseDefinition;
use crate::config::SolverSettings;
use crate::error::{Error, Result};
use crate::solver::{CaseModel, OperatingPoint, StiffnessCurve};
use crate::truncation::{truncation_loads, TruncationLoads};

#[derive(Debug, Clone, PartialEq)]
pub struct CaseResult {
    pub case: CaseDefinition,
    /// Static axial capacity (N).
    pub capacity: f64,
    pub capacity_point: OperatingPoint,
    pub truncation: TruncationLoads,
    pub curve: StiffnessCurve,
    /// Axial force at the first sample where the wire slides (N).
    pub twist_onset_load: Option<f64>,
    /// Last sample before the sweep first exceeds the capacity.
    pub final_point: OperatingPoint,
}

impl CaseResult {
    pub fn label(&self) -> String {
        self.case.label()
    }

    pub fn stiffness_file_name(&self) -> String {
        format!("{}_stiffness.csv", self.label())
    }

    pub fn trajectory_file_name(&self) -> String {
        format!("{}_trajectory.csv", self.label())
    }

    /// Leading samples up to the first one carrying more than the capacity.
    pub fn samples_to_capacity(&self) -> impl Iterator<Item = &OperatingPoint> {
        self.curve.samples.iter().take_while(move |p| p.axial_force <= self.capacity)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseFailure {
    pub label: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunReport {
    pub results: Vec<CaseResult>,
    pub failures: Vec<CaseFailure>,
}

impl RunReport {
    pub fn is_success(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_case(case: &CaseDefinition, settings: &SolverSettings) -> Result<CaseResult> {
    let model = CaseModel::new(case)?;
    let (capacity, capacity_point) = model.static_capacity()?;
    let curve = model.curve_to_capacity(&capacity_point, settings.steps, settings.coverage)?;
    let truncation = truncation_loads(&case.geometry, &curve, capacity)?;
    let twist_onset_load = curve.samples.iter().find(|p| p.is_slipping()).map(|p| p.axial_force);
    let final_point = *curve
        .samples
        .iter()
        .take_while(|p| p.axial_force <= capacity)
        .last()
        .ok_or_else(|| Error::Precondition("sweep has no sample below capacity".into()))?;
    Ok(CaseResult {
        case: case.clone(),
        capacity,
        capacity_point,
        truncation,
        curve,
        twist_onset_load,
        final_point,
    })
}

/// Run every case. `parallelism` is the worker count; 0 lets the pool decide
/// and 1 runs serially on the calling thread. Results keep suite order.
pub fn run_cases(cases: &[CaseDefinition], settings: &SolverSettings, parallelism: usize) -> RunReport {
    let outcomes: Vec<Result<CaseResult>> = if parallelism == 1 {
        cases.iter().map(|c| run_case(c, settings)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(parallelism).build();
        match pool {
            Ok(pool) => pool.install(|| cases.par_iter().map(|c| run_case(c, settings)).collect()),
            Err(_) => cases.iter().map(|c| run_case(c, settings)).collect(),
        }
    };
    let mut report = RunReport::default();
    for (case, outcome) in cases.iter().zip(outcomes) {
        match outcome {
            Ok(r) => report.results.push(r),
            Err(e) => report.failures.push(CaseFailure {
                label: case.label(),
                message: error_chain(&e),
            }),
        }
    }
    report
}

fn error_chain(e: &Error) -> String {
    let mut msg = e.to_string();
    let mut src = std::error::Error::source(e);
    while let Some(s) = src {
        let text = s.to_string();
        if !msg.contains(&text) {
            msg.push_str(": ");
            msg.push_str(&text);
        }
        src = s.source();
    }
    msg
}
