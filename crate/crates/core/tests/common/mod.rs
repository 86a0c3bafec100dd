//! Independent reference implementations shared by the integration tests.
//!
//! Nothing here calls into the library's Hertz or kinematics code; the
//! oracles are written from textbook formulas with brute-force numerics.

#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use slewing_core::{default_suite, run_cases, BoundaryCondition, CaseResult, OperatingPoint, RunReport};

/// Complete elliptic integrals `K(m)` and `E(m)` by composite Simpson.
fn elliptic_simpson(m: f64, intervals: usize) -> (f64, f64) {
    let h = FRAC_PI_2 / intervals as f64;
    let (mut k, mut e) = (0.0, 0.0);
    for i in 0..=intervals {
        let s = (i as f64 * h).sin();
        let root = (1.0 - m * s * s).sqrt();
        let w = if i == 0 || i == intervals {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        k += w / root;
        e += w * root;
    }
    (k * h / 3.0, e * h / 3.0)
}

/// Hertz point contact from a dense table of ellipticity against curvature
/// difference, in the Harris dimensionless form.
pub struct HertzOracle {
    ln_kappa: Vec<f64>,
    diff: Vec<f64>,
    first: Vec<f64>,
    second: Vec<f64>,
}

#[derive(Debug, Clone, Copy)]
pub struct OracleContact {
    pub a: f64,
    pub b: f64,
    pub delta: f64,
    pub p0: f64,
}

impl HertzOracle {
    pub fn new() -> Self {
        const N: usize = 6000;
        const KAPPA_MAX: f64 = 200.0;
        let mut t = Self {
            ln_kappa: Vec::with_capacity(N + 1),
            diff: Vec::with_capacity(N + 1),
            first: Vec::with_capacity(N + 1),
            second: Vec::with_capacity(N + 1),
        };
        for i in 0..=N {
            let lk = KAPPA_MAX.ln() * i as f64 / N as f64;
            let kappa = lk.exp();
            let m = 1.0 - 1.0 / (kappa * kappa);
            let (k, e) = elliptic_simpson(m, 6000);
            let f = if i == 0 {
                0.0
            } else {
                ((kappa * kappa + 1.0) * e - 2.0 * k) / ((kappa * kappa - 1.0) * e)
            };
            t.ln_kappa.push(lk);
            t.diff.push(f);
            t.first.push(k);
            t.second.push(e);
        }
        t
    }

    /// `(kappa, K, E)` for a curvature difference.
    pub fn lookup(&self, diff: f64) -> (f64, f64, f64) {
        let j = self.diff.partition_point(|&f| f < diff).clamp(1, self.diff.len() - 1);
        let w = (diff - self.diff[j - 1]) / (self.diff[j] - self.diff[j - 1]);
        let lerp = |v: &[f64]| v[j - 1] + w * (v[j] - v[j - 1]);
        (lerp(&self.ln_kappa).exp(), lerp(&self.first), lerp(&self.second))
    }

    /// Contact of bodies with curvature sum `rho_sum`, difference `diff` and
    /// contact modulus `e_star` under load `q`.
    pub fn solve(&self, rho_sum: f64, diff: f64, e_star: f64, q: f64) -> OracleContact {
        let (kappa, k, e) = self.lookup(diff);
        let a_star = (2.0 * kappa * kappa * e / PI).cbrt();
        let b_star = (2.0 * e / (PI * kappa)).cbrt();
        let d_star = 2.0 * k / PI * (PI / (2.0 * kappa * kappa * e)).cbrt();
        let base = 3.0 * q / (2.0 * rho_sum * e_star);
        let a = a_star * base.cbrt();
        let b = b_star * base.cbrt();
        OracleContact {
            a,
            b,
            delta: d_star * base.powf(2.0 / 3.0) * rho_sum / 2.0,
            p0: 3.0 * q / (2.0 * PI * a * b),
        }
    }

    /// Load-deflection constant of `q = K delta^1.5`.
    pub fn stiffness(&self, rho_sum: f64, diff: f64, e_star: f64) -> f64 {
        self.solve(rho_sum, diff, e_star, 1.0).delta.powf(-1.5)
    }
}

pub fn hertz_oracle() -> &'static HertzOracle {
    static ORACLE: OnceLock<HertzOracle> = OnceLock::new();
    ORACLE.get_or_init(HertzOracle::new)
}

/// Curvature sum and difference of a ball in a ring groove, written out from
/// the principal radii.
pub fn ball_groove_curvature(dw: f64, dpw: f64, alpha: f64, osculation: f64, inner: bool) -> (f64, f64) {
    let ball = 2.0 / dw;
    let groove = -2.0 * osculation / dw;
    let gamma = dw * alpha.cos() / dpw;
    let rolling = if inner {
        2.0 / dw * gamma / (1.0 - gamma)
    } else {
        -2.0 / dw * gamma / (1.0 + gamma)
    };
    let sum = 2.0 * ball + rolling + groove;
    (sum, (rolling - groove) / sum)
}

/// Rigid-ring contact state from the groove-centre triangle.
pub fn rigid_kinematics(dw: f64, s_in: f64, s_out: f64, alpha0: f64, axial: f64) -> (f64, f64) {
    let a0 = (0.5 / s_in + 0.5 / s_out - 1.0) * dw;
    let z = a0 * alpha0.sin() + axial;
    let x = a0 * alpha0.cos();
    (z.atan2(x), z.hypot(x) - a0)
}

/// Ball load that minimises the elastic energy of the inner/outer pair for a
/// total approach `delta`, by scanning the split on a uniform grid.
pub fn energy_min_load(k_in: f64, k_out: f64, delta: f64, grid: usize) -> f64 {
    let energy = |x: f64| 0.4 * (k_in * (x * delta).powf(2.5) + k_out * ((1.0 - x) * delta).powf(2.5));
    let mut best = (f64::INFINITY, 0.0);
    for i in 0..=grid {
        let x = i as f64 / grid as f64;
        let e = energy(x);
        if e < best.0 {
            best = (e, x);
        }
    }
    k_in * (best.1 * delta).powf(1.5)
}

pub fn default_report() -> &'static RunReport {
    static REPORT: OnceLock<RunReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let suite = default_suite().expect("shipped config loads");
        run_cases(&suite.cases, &suite.settings, 0)
    })
}

pub fn result(report: &RunReport, case_id: u32, bc: BoundaryCondition) -> &CaseResult {
    report
        .results
        .iter()
        .find(|r| r.case.case_id == case_id && r.case.boundary_condition == bc)
        .unwrap_or_else(|| panic!("case {case_id} {bc:?} missing from the report"))
}

/// Linear interpolation on an increasing abscissa.
pub fn interp(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let j = xs.partition_point(|&v| v < x).clamp(1, xs.len() - 1);
    let w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    ys[j - 1] + w * (ys[j] - ys[j - 1])
}

/// Axial displacement carrying `load` on a sampled curve.
pub fn disp_at_load(samples: &[OperatingPoint], load: f64) -> f64 {
    let f: Vec<f64> = samples.iter().map(|p| p.axial_force).collect();
    let u: Vec<f64> = samples.iter().map(|p| p.axial_disp).collect();
    interp(&f, &u, load)
}

pub fn force_at_disp(samples: &[OperatingPoint], disp: f64) -> f64 {
    let u: Vec<f64> = samples.iter().map(|p| p.axial_disp).collect();
    let f: Vec<f64> = samples.iter().map(|p| p.axial_force).collect();
    interp(&u, &f, disp)
}

/// RMS residual of a least-squares line through `(x, y)`, divided by the
/// largest `|y|`.
pub fn linear_fit_residual(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let slope = sxy / sxx;
    let ss: f64 = points.iter().map(|p| (p.1 - my - slope * (p.0 - mx)).powi(2)).sum();
    let scale = points.iter().map(|p| p.1.abs()).fold(0.0, f64::max);
    (ss / n).sqrt() / scale
}
