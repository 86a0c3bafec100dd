//! Fixtures shared by the benchmarks.

use slewing_core::{default_suite, BoundaryCondition, CaseDefinition};

/// One run of the shipped suite.
pub fn shipped_case(case_id: u32, bc: BoundaryCondition) -> CaseDefinition {
    default_suite()
        .expect("shipped config loads")
        .cases
        .into_iter()
        .find(|c| c.case_id == case_id && c.boundary_condition == bc)
        .expect("case is in the shipped suite")
}
