//! Hertzian elliptical point contact between a ball and a raceway.
//!
//! Curvatures follow the usual sign convention: convex surfaces are positive,
//! the concave groove of a raceway is negative. Plane I is the rolling
//! direction, plane II the transverse (groove) direction.
//!
//! Units: mm, N, MPa.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::elliptic::{ellip_e, ellip_k};
use crate::error::{Error, Result};

/// Linear elastic constants of one body.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElasticMaterial {
    /// Young's modulus (MPa).
    pub elastic_modulus: f64,
    pub poisson_ratio: f64,
}

impl ElasticMaterial {
    pub const fn new(elastic_modulus: f64, poisson_ratio: f64) -> Self {
        Self {
            elastic_modulus,
            poisson_ratio,
        }
    }

    fn compliance(&self) -> f64 {
        (1.0 - self.poisson_ratio * self.poisson_ratio) / self.elastic_modulus
    }
}

/// Contact modulus `E*` with `1/E* = (1 - v1^2)/E1 + (1 - v2^2)/E2` (MPa).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveModulus {
    pub e_star: f64,
}

impl EffectiveModulus {
    pub fn new(e_star: f64) -> Result<Self> {
        if !(e_star.is_finite() && e_star > 0.0) {
            return Err(Error::InvalidGeometry(format!("contact modulus must be positive, got {e_star}")));
        }
        Ok(Self { e_star })
    }

    pub fn from_materials(a: &ElasticMaterial, b: &ElasticMaterial) -> Result<Self> {
        Self::new(1.0 / (a.compliance() + b.compliance()))
    }
}

/// Principal curvatures of a ball-raceway pair and the derived sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureSet {
    /// Ball curvature, identical in both planes (1/mm).
    pub ball: f64,
    /// Raceway curvature in the rolling plane (1/mm).
    pub raceway_rolling: f64,
    /// Raceway curvature across the groove (1/mm), negative for a groove.
    pub raceway_transverse: f64,
    /// Curvature sum (1/mm).
    pub rho_sum: f64,
    /// Curvature difference `F(rho)`, in `[0, 1)`.
    pub curvature_difference: f64,
}

impl CurvatureSet {
    fn from_principal(ball: f64, raceway_rolling: f64, raceway_transverse: f64) -> Result<Self> {
        let rho_sum = 2.0 * ball + raceway_rolling + raceway_transverse;
        if !(rho_sum.is_finite() && rho_sum > 0.0) {
            return Err(Error::InvalidGeometry(format!(
                "non-convergent contact: curvature sum {rho_sum:e} 1/mm"
            )));
        }
        let curvature_difference = (raceway_rolling - raceway_transverse).abs() / rho_sum;
        if curvature_difference >= 1.0 {
            return Err(Error::InvalidGeometry(format!(
                "curvature difference {curvature_difference} is not below 1 (fully conforming contact)"
            )));
        }
        Ok(Self {
            ball,
            raceway_rolling,
            raceway_transverse,
            rho_sum,
            curvature_difference,
        })
    }

    /// Recompute `F(rho)` from the stored principal curvatures.
    pub fn recomputed_difference(&self) -> f64 {
        (self.raceway_rolling - self.raceway_transverse).abs()
            / (2.0 * self.ball + self.raceway_rolling + self.raceway_transverse)
    }
}

/// Curvature sum and difference for a ball of diameter `ball_diameter` in a
/// groove of radius `groove_radius` (use `f64::INFINITY` for a flat) whose
/// rolling-plane curvature is `rolling_curvature`.
pub fn curvature_analysis(ball_diameter: f64, groove_radius: f64, rolling_curvature: f64) -> Result<CurvatureSet> {
    if !(ball_diameter > 0.0 && ball_diameter.is_finite()) {
        return Err(Error::InvalidGeometry(format!("ball diameter must be positive, got {ball_diameter}")));
    }
    if groove_radius.is_nan() || groove_radius <= 0.5 * ball_diameter {
        return Err(Error::InvalidGeometry(format!(
            "groove radius {groove_radius} mm must exceed the ball radius {} mm",
            0.5 * ball_diameter
        )));
    }
    CurvatureSet::from_principal(2.0 / ball_diameter, rolling_curvature, -1.0 / groove_radius)
}

/// Result of a Hertz point-contact solve.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HertzSolution {
    /// Semi-major axis (mm).
    pub semi_major_a: f64,
    /// Semi-minor axis (mm).
    pub semi_minor_b: f64,
    /// Mutual approach of the two bodies (mm).
    pub approach_delta: f64,
    /// Peak pressure at the ellipse centre (MPa).
    pub peak_pressure_p0: f64,
    /// Normal load (N).
    pub load_q: f64,
    /// Load-deflection constant in `Q = K * delta^1.5` (N/mm^1.5).
    pub stiffness_k: f64,
}

const ELLIPTICITY_MAX: f64 = 1.0e4;
const ELLIPTICITY_RESIDUAL_TOL: f64 = 1e-12;
const SERIES_SWITCH_M: f64 = 1e-3;

/// `F(rho)` as a function of the parameter `m = 1 - 1/kappa^2`.
fn curvature_difference_of_m(m: f64) -> f64 {
    if m < SERIES_SWITCH_M {
        // the closed form cancels to O(m^2) near the circular limit
        return m * (3.0 / 8.0 + m * (3.0 / 16.0 + m * (111.0 / 1024.0 + m * 141.0 / 2048.0)));
    }
    let kappa_sq = 1.0 / (1.0 - m);
    let e = ellip_e(m);
    let k = ellip_k(m);
    ((kappa_sq + 1.0) * e - 2.0 * k) / ((kappa_sq - 1.0) * e)
}

/// Ellipticity `kappa = a/b` for a given curvature difference, by bisection
/// on `ln kappa` over `[0, ln 1e4]`.
pub fn ellipticity(curvature_difference: f64) -> Result<f64> {
    let target = curvature_difference;
    if target <= 1e-15 {
        return Ok(1.0);
    }
    let residual = |ln_kappa: f64| {
        let kappa: f64 = ln_kappa.exp();
        let m = 1.0 - 1.0 / (kappa * kappa);
        curvature_difference_of_m(m) - target
    };
    let hi = ELLIPTICITY_MAX.ln();
    let r_hi = residual(hi);
    if r_hi < 0.0 {
        return Err(Error::EllipticityNonConvergence {
            curvature_difference: target,
            residual: r_hi,
        });
    }
    let (mut lo, mut hi) = (0.0_f64, hi);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let r = residual(mid);
        if r.abs() <= ELLIPTICITY_RESIDUAL_TOL * target.max(1e-300) || hi - lo < 1e-16 {
            return Ok(mid.exp());
        }
        if r < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::EllipticityNonConvergence {
        curvature_difference: target,
        residual: residual(0.5 * (lo + hi)),
    })
}

/// Load-independent part of a Hertz contact: ellipticity, elliptic integrals
/// and the load-deflection constant. Solve for any load with [`HertzContact::solve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HertzContact {
    pub curvature: CurvatureSet,
    pub modulus: EffectiveModulus,
    pub ellipticity: f64,
    first_kind: f64,
    second_kind: f64,
    stiffness_k: f64,
}

impl HertzContact {
    pub fn new(curvature: &CurvatureSet, modulus: EffectiveModulus) -> Result<Self> {
        let kappa = ellipticity(curvature.curvature_difference)?;
        let m = 1.0 - 1.0 / (kappa * kappa);
        let mut contact = Self {
            curvature: *curvature,
            modulus,
            ellipticity: kappa,
            first_kind: ellip_k(m),
            second_kind: ellip_e(m),
            stiffness_k: 0.0,
        };
        contact.stiffness_k = contact.approach(1.0).powf(-1.5);
        Ok(contact)
    }

    pub fn stiffness(&self) -> f64 {
        self.stiffness_k
    }

    fn approach(&self, load: f64) -> f64 {
        let r = 1.0 / self.curvature.rho_sum;
        let w = load / (2.0 * PI * self.ellipticity * self.modulus.e_star);
        self.first_kind * (9.0 / (2.0 * self.second_kind * r) * w * w).cbrt()
    }

    pub fn solve(&self, load_q: f64) -> Result<HertzSolution> {
        if load_q.is_nan() || load_q < 0.0 {
            return Err(Error::Precondition(format!("contact load must be non-negative, got {load_q}")));
        }
        if load_q == 0.0 {
            return Ok(HertzSolution {
                stiffness_k: self.stiffness_k,
                ..HertzSolution::default()
            });
        }
        let kappa = self.ellipticity;
        let r = 1.0 / self.curvature.rho_sum;
        let base = 3.0 * self.second_kind * load_q * r / (PI * self.modulus.e_star);
        let semi_major_a = (kappa * kappa * base).cbrt();
        let semi_minor_b = (base / kappa).cbrt();
        Ok(HertzSolution {
            semi_major_a,
            semi_minor_b,
            approach_delta: self.approach(load_q),
            peak_pressure_p0: 3.0 * load_q / (2.0 * PI * semi_major_a * semi_minor_b),
            load_q,
            stiffness_k: self.stiffness_k,
        })
    }

    /// Load at which the peak pressure equals `p0` (closed-form inverse of
    /// `p0 ~ Q^(1/3)`).
    pub fn load_for_peak_pressure(&self, p0: f64) -> f64 {
        let reference = self.solve(1.0).expect("unit load is valid").peak_pressure_p0;
        (p0 / reference).powi(3)
    }
}

pub fn solve_hertz(curv: &CurvatureSet, modulus: EffectiveModulus, load_q: f64) -> Result<HertzSolution> {
    HertzContact::new(curv, modulus)?.solve(load_q)
}

/// `Q = K * delta^1.5` for positive interference, zero otherwise.
pub fn interference_to_load(stiffness_k: f64, delta: f64) -> f64 {
    if delta > 0.0 {
        stiffness_k * delta.powf(1.5)
    } else {
        0.0
    }
}

/// Semi-ellipsoidal pressure sampled along the major axis from `-a` to `a`.
pub fn pressure_profile(sol: &HertzSolution, n_samples: usize) -> Result<Vec<(f64, f64)>> {
    if !(sol.load_q > 0.0) {
        return Err(Error::Precondition("pressure profile needs a loaded contact".into()));
    }
    if n_samples < 3 {
        return Err(Error::Precondition(format!("need at least 3 samples, got {n_samples}")));
    }
    let a = sol.semi_major_a;
    let last = (n_samples - 1) as f64;
    Ok((0..n_samples)
        .map(|i| {
            let t = (2.0 * i as f64 - last) / last;
            (t * a, sol.peak_pressure_p0 * ((1.0 - t) * (1.0 + t)).max(0.0).sqrt())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn steel() -> EffectiveModulus {
        let s = ElasticMaterial::new(200_000.0, 0.3);
        EffectiveModulus::from_materials(&s, &s).unwrap()
    }

    #[test]
    fn sphere_on_flat_curvatures() {
        let c = curvature_analysis(20.0, f64::INFINITY, 0.0).unwrap();
        assert_relative_eq!(c.rho_sum, 0.2, max_relative = 1e-15);
        assert_eq!(c.curvature_difference, 0.0);
    }

    #[test]
    fn conformal_groove_curvatures() {
        // hand evaluation: 1/rr = 2*0.943/20 = 0.0943, sum = 0.2 - 0.0943
        let rr = 20.0 / (2.0 * 0.943);
        let c = curvature_analysis(20.0, rr, 0.0).unwrap();
        assert_relative_eq!(c.rho_sum, 0.1057, max_relative = 1e-12);
        assert_relative_eq!(c.curvature_difference, 0.0943 / 0.1057, max_relative = 1e-12);
        assert!(c.curvature_difference > 0.0 && c.curvature_difference < 1.0);
        assert_relative_eq!(c.recomputed_difference(), c.curvature_difference, max_relative = 1e-12);
    }

    #[test]
    fn fully_conforming_groove_is_rejected() {
        let err = curvature_analysis(20.0, 10.0, 0.0).unwrap_err();
        assert!(matches!(err, Error::InvalidGeometry(_)));
    }

    #[test]
    fn effective_modulus_for_identical_bodies() {
        assert_relative_eq!(steel().e_star, 200_000.0 / (2.0 * (1.0 - 0.09)), max_relative = 1e-15);
    }

    #[test]
    fn zero_load_keeps_stiffness() {
        let c = curvature_analysis(20.0, 10.604, 0.0).unwrap();
        let s = solve_hertz(&c, steel(), 0.0).unwrap();
        assert_eq!(s.semi_major_a, 0.0);
        assert_eq!(s.semi_minor_b, 0.0);
        assert_eq!(s.approach_delta, 0.0);
        assert_eq!(s.peak_pressure_p0, 0.0);
        assert!(s.stiffness_k > 0.0);
    }

    #[test]
    fn negative_load_is_rejected() {
        let c = curvature_analysis(20.0, 10.604, 0.0).unwrap();
        assert!(solve_hertz(&c, steel(), -1.0).is_err());
    }

    #[test]
    fn circular_contact_matches_closed_form() {
        let c = curvature_analysis(20.0, f64::INFINITY, 0.0).unwrap();
        let e = steel().e_star;
        let s = solve_hertz(&c, steel(), 1000.0).unwrap();
        let r = 10.0;
        let p0 = (6.0 * 1000.0 * e * e / (PI.powi(3) * r * r)).cbrt();
        assert_relative_eq!(s.semi_major_a, s.semi_minor_b, max_relative = 1e-15);
        assert_relative_eq!(s.peak_pressure_p0, p0, max_relative = 1e-9);
        let a = (3.0 * 1000.0 * r / (4.0 * e)).cbrt();
        assert_relative_eq!(s.semi_major_a, a, max_relative = 1e-12);
        assert_relative_eq!(s.approach_delta, a * a / r, max_relative = 1e-12);
    }

    #[test]
    fn solution_identities() {
        let c = curvature_analysis(15.875, 15.875 / (2.0 * 0.87), 2.0e-3).unwrap();
        let s = solve_hertz(&c, steel(), 12_345.0).unwrap();
        assert!(s.semi_major_a >= s.semi_minor_b);
        assert_relative_eq!(
            s.peak_pressure_p0,
            3.0 * s.load_q / (2.0 * PI * s.semi_major_a * s.semi_minor_b),
            max_relative = 1e-12
        );
        assert_relative_eq!(s.load_q, s.stiffness_k * s.approach_delta.powf(1.5), max_relative = 1e-9);
    }

    #[test]
    fn interference_law() {
        assert_eq!(interference_to_load(1.0e5, 0.0), 0.0);
        assert_eq!(interference_to_load(1.0e5, -0.01), 0.0);
        let c = curvature_analysis(20.0, 10.4, 1.4e-3).unwrap();
        let s = solve_hertz(&c, steel(), 7_500.0).unwrap();
        assert_relative_eq!(interference_to_load(s.stiffness_k, s.approach_delta), 7_500.0, max_relative = 1e-9);
    }

    #[test]
    fn profile_peak_and_edges() {
        let c = curvature_analysis(20.0, 10.4, 0.0).unwrap();
        let s = solve_hertz(&c, steel(), 5_000.0).unwrap();
        let prof = pressure_profile(&s, 101).unwrap();
        assert_eq!(prof[0].1, 0.0);
        assert_eq!(prof[100].1, 0.0);
        assert_relative_eq!(prof[50].1, s.peak_pressure_p0, max_relative = 1e-15);
        assert_relative_eq!(prof[0].0, -s.semi_major_a);
        for i in 0..50 {
            assert_relative_eq!(prof[i].1, prof[100 - i].1, max_relative = 1e-12);
        }
        assert!(pressure_profile(&s, 2).is_err());
        assert!(pressure_profile(&HertzSolution::default(), 10).is_err());
    }

    #[test]
    fn profile_integrates_to_load() {
        // 2-D midpoint quadrature over the ellipse
        let c = curvature_analysis(20.0, 10.4, 0.0).unwrap();
        let s = solve_hertz(&c, steel(), 5_000.0).unwrap();
        let (a, b) = (s.semi_major_a, s.semi_minor_b);
        let n = 800;
        let mut total = 0.0;
        for i in 0..n {
            let x = -a + (i as f64 + 0.5) * 2.0 * a / n as f64;
            for j in 0..n {
                let y = -b + (j as f64 + 0.5) * 2.0 * b / n as f64;
                let t = 1.0 - (x / a).powi(2) - (y / b).powi(2);
                if t > 0.0 {
                    total += s.peak_pressure_p0 * t.sqrt();
                }
            }
        }
        total *= (2.0 * a / n as f64) * (2.0 * b / n as f64);
        assert_relative_eq!(total, s.load_q, max_relative = 1e-3);
    }

    #[test]
    fn ellipticity_is_continuous_at_circular_limit() {
        let mut prev = 1.0;
        for exp in (4..=14).rev() {
            let f = 10f64.powi(-exp);
            let k = ellipticity(f).unwrap();
            assert!(k >= prev - 1e-15, "kappa not monotone near F=0");
            assert!(k - 1.0 < 10.0 * f.sqrt().max(f));
            prev = k;
        }
        assert_eq!(ellipticity(0.0).unwrap(), 1.0);
    }

    #[test]
    fn load_for_pressure_inverts_solve() {
        let c = curvature_analysis(15.875, 8.42, 3.0e-3).unwrap();
        let h = HertzContact::new(&c, steel()).unwrap();
        let q = h.load_for_peak_pressure(4200.0);
        assert_relative_eq!(h.solve(q).unwrap().peak_pressure_p0, 4200.0, max_relative = 1e-12);
    }
}
