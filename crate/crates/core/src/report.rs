//! CSV, text and SVG outputs of a run.
//!
//! Floats are written with Rust's shortest round-trip formatting, so parsing
//! a file back yields the in-memory values exactly.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::runner::{CaseFailure, CaseResult};
use crate::solver::OperatingPoint;
use crate::svg;
use crate::truncation::{ellipse_placement, truncation_status};
use crate::wire::BoundaryCondition;

/// Bumped whenever a column is added, removed or renamed.
pub const CSV_SCHEMA_VERSION: u32 = 1;

pub const STIFFNESS_HEADER: &str = "axial_disp_mm,axial_force_N,Q_N,alpha_deg,phi_deg,psi_deg,a_mm,b_mm,p0_MPa,trunc_state";
pub const TRAJECTORY_HEADER: &str = "axial_force_N,Q_N,alpha_deg,phi_deg,psi_deg,slipping";
pub const SUMMARY_HEADER: &str = "case_id,label,kind,boundary_condition,osculation,mu_wire_ring,C0a_N,onset_fraction,complete_fraction,twist_onset_N,final_alpha_deg,final_phi_deg,stiffness_file,trajectory_file";

pub const SUMMARY_CSV: &str = "summary.csv";
pub const SUMMARY_TXT: &str = "summary.txt";
pub const FAILURES_CSV: &str = "failures.csv";
pub const MANIFEST: &str = "manifest.txt";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub case_id: u32,
    pub label: String,
    pub kind: String,
    pub boundary_condition: String,
    pub osculation: f64,
    pub mu_wire_ring: Option<f64>,
    #[serde(rename = "C0a_N")]
    pub c0a_n: f64,
    pub onset_fraction: Option<f64>,
    pub complete_fraction: Option<f64>,
    #[serde(rename = "twist_onset_N")]
    pub twist_onset_n: Option<f64>,
    pub final_alpha_deg: f64,
    pub final_phi_deg: f64,
    pub stiffness_file: String,
    pub trajectory_file: String,
}

impl From<&CaseResult> for SummaryRow {
    fn from(r: &CaseResult) -> Self {
        Self {
            case_id: r.case.case_id,
            label: r.label(),
            kind: r.case.kind().as_str().to_string(),
            boundary_condition: r.case.boundary_condition.as_str().to_string(),
            osculation: r.case.geometry.osculation_inner,
            mu_wire_ring: r.case.mu_wire_ring,
            c0a_n: r.capacity,
            onset_fraction: r.truncation.onset_fraction,
            complete_fraction: r.truncation.complete_fraction,
            twist_onset_n: r.twist_onset_load,
            final_alpha_deg: r.final_point.contact_angle.to_degrees(),
            final_phi_deg: r.final_point.wire_twist.to_degrees(),
            stiffness_file: r.stiffness_file_name(),
            trajectory_file: r.trajectory_file_name(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StiffnessRow {
    pub axial_disp_mm: f64,
    #[serde(rename = "axial_force_N")]
    pub axial_force_n: f64,
    #[serde(rename = "Q_N")]
    pub q_n: f64,
    pub alpha_deg: f64,
    pub phi_deg: f64,
    pub psi_deg: f64,
    pub a_mm: f64,
    pub b_mm: f64,
    #[serde(rename = "p0_MPa")]
    pub p0_mpa: f64,
    pub trunc_state: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRow {
    #[serde(rename = "axial_force_N")]
    pub axial_force_n: f64,
    #[serde(rename = "Q_N")]
    pub q_n: f64,
    pub alpha_deg: f64,
    pub phi_deg: f64,
    pub psi_deg: f64,
    pub slipping: bool,
}

pub fn stiffness_rows(r: &CaseResult) -> Result<Vec<StiffnessRow>> {
    r.curve
        .samples
        .iter()
        .map(|p| {
            let state = truncation_status(&ellipse_placement(p, &r.case.geometry)?).state;
            Ok(StiffnessRow {
                axial_disp_mm: p.axial_disp,
                axial_force_n: p.axial_force,
                q_n: p.contact_force,
                alpha_deg: p.contact_angle.to_degrees(),
                phi_deg: p.wire_twist.to_degrees(),
                psi_deg: p.arc_coordinate.to_degrees(),
                a_mm: p.hertz.semi_major_a,
                b_mm: p.hertz.semi_minor_b,
                p0_mpa: p.hertz.peak_pressure_p0,
                trunc_state: state.as_str().to_string(),
            })
        })
        .collect()
}

pub fn trajectory_rows(r: &CaseResult) -> Vec<TrajectoryRow> {
    r.curve
        .samples
        .iter()
        .map(|p: &OperatingPoint| TrajectoryRow {
            axial_force_n: p.axial_force,
            q_n: p.contact_force,
            alpha_deg: p.contact_angle.to_degrees(),
            phi_deg: p.wire_twist.to_degrees(),
            psi_deg: p.arc_coordinate.to_degrees(),
            slipping: p.is_slipping(),
        })
        .collect()
}

fn write_csv<T: Serialize>(path: &Path, rows: &[T], header: &str) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let body = w.into_inner().map_err(|e| Error::io(path, e.into_error()))?;
    let mut out = Vec::with_capacity(header.len() + 1 + body.len());
    out.extend_from_slice(header.as_bytes());
    out.push(b'\n');
    out.extend_from_slice(&body);
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

fn read_csv<T: for<'de> Deserialize<'de>>(path: &Path, header: &str) -> Result<Vec<T>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let first = text.lines().next().unwrap_or_default();
    if first != header {
        return Err(Error::Precondition(format!(
            "{}: unexpected header `{first}`",
            path.display()
        )));
    }
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    rd.deserialize().map(|r| r.map_err(Error::from)).collect()
}

pub fn read_summary(path: impl AsRef<Path>) -> Result<Vec<SummaryRow>> {
    read_csv(path.as_ref(), SUMMARY_HEADER)
}

pub fn read_stiffness(path: impl AsRef<Path>) -> Result<Vec<StiffnessRow>> {
    read_csv(path.as_ref(), STIFFNESS_HEADER)
}

fn opt(v: Option<f64>, digits: usize) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.digits$}"))
}

/// Fixed-width table for reading in a terminal.
pub fn summary_text(results: &[CaseResult]) -> String {
    let head = [
        "case", "kind", "bc", "s", "mu_wr", "C0a [kN]", "onset", "complete", "twist onset [kN]", "alpha [deg]",
        "phi [deg]",
    ];
    let rows: Vec<[String; 11]> = results
        .iter()
        .map(|r| {
            let row = SummaryRow::from(r);
            [
                row.case_id.to_string(),
                row.kind,
                row.boundary_condition,
                format!("{:.3}", row.osculation),
                opt(row.mu_wire_ring, 2),
                format!("{:.1}", row.c0a_n / 1e3),
                opt(row.onset_fraction, 3),
                opt(row.complete_fraction, 3),
                opt(row.twist_onset_n.map(|f| f / 1e3), 1),
                format!("{:.3}", row.final_alpha_deg),
                format!("{:.3}", row.final_phi_deg),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = head.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: &mut dyn Iterator<Item = &str>, out: &mut String| {
        let parts: Vec<String> = cells.zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut head.iter().copied(), &mut out);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    line(&mut rule.iter().map(String::as_str), &mut out);
    for row in &rows {
        line(&mut row.iter().map(String::as_str), &mut out);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileManifest {
    pub schema_version: u32,
    pub files: Vec<PathBuf>,
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

/// Write every output file for `results` into `out_dir`.
pub fn emit_outputs(results: &[CaseResult], failures: &[CaseFailure], out_dir: &Path, with_svg: bool) -> Result<FileManifest> {
    if results.is_empty() && failures.is_empty() {
        return Err(Error::Precondition("nothing to write: no results".into()));
    }
    ensure_dir(out_dir)?;
    let mut files = Vec::new();
    let put = |name: String, files: &mut Vec<PathBuf>| -> PathBuf {
        let p = out_dir.join(&name);
        files.push(PathBuf::from(name));
        p
    };

    let rows: Vec<SummaryRow> = results.iter().map(SummaryRow::from).collect();
    write_csv(&put(SUMMARY_CSV.into(), &mut files), &rows, SUMMARY_HEADER)?;
    let txt = put(SUMMARY_TXT.into(), &mut files);
    fs::write(&txt, summary_text(results)).map_err(|e| Error::io(&txt, e))?;

    for r in results {
        write_csv(&put(r.stiffness_file_name(), &mut files), &stiffness_rows(r)?, STIFFNESS_HEADER)?;
        write_csv(&put(r.trajectory_file_name(), &mut files), &trajectory_rows(r), TRAJECTORY_HEADER)?;
    }

    if !failures.is_empty() {
        let path = put(FAILURES_CSV.into(), &mut files);
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["label", "error"])?;
        for f in failures {
            w.write_record([f.label.as_str(), f.message.as_str()])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::io(&path, e.into_error()))?;
        fs::write(&path, bytes).map_err(|e| Error::io(&path, e))?;
    }

    if with_svg {
        for bc in [BoundaryCondition::Clamped, BoundaryCondition::Unclamped] {
            let subset: Vec<&CaseResult> = results.iter().filter(|r| r.case.boundary_condition == bc).collect();
            if subset.is_empty() {
                continue;
            }
            let path = put(format!("stiffness_{}.svg", bc.as_str()), &mut files);
            fs::write(&path, svg::stiffness_plot(&subset, bc)).map_err(|e| Error::io(&path, e))?;
            let path = put(format!("contact_angle_{}.svg", bc.as_str()), &mut files);
            fs::write(&path, svg::contact_angle_plot(&subset, bc)).map_err(|e| Error::io(&path, e))?;
        }
    }

    let path = out_dir.join(MANIFEST);
    let mut text = String::new();
    let _ = writeln!(text, "schema_version {CSV_SCHEMA_VERSION}");
    for f in &files {
        let _ = writeln!(text, "{}", f.display());
    }
    fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
    files.push(PathBuf::from(MANIFEST));
    Ok(FileManifest {
        schema_version: CSV_SCHEMA_VERSION,
        files,
    })
}
