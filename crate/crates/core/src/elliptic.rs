//! Complete elliptic integrals by the arithmetic-geometric mean.
//!
//! Both functions take the parameter `m = k^2` (not the modulus `k`).

use std::f64::consts::FRAC_PI_2;

const AGM_TOL: f64 = 1e-15;
const AGM_MAX_ITER: usize = 64;

/// Complete elliptic integral of the first kind, `K(m)` for `0 <= m < 1`.
pub fn ellip_k(m: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&m), "ellip_k parameter out of range: {m}");
    let mut a = 1.0;
    let mut g = (1.0 - m).sqrt();
    for _ in 0..AGM_MAX_ITER {
        if (a - g).abs() <= AGM_TOL * a {
            break;
        }
        let next = 0.5 * (a + g);
        g = (a * g).sqrt();
        a = next;
    }
    FRAC_PI_2 / a
}

/// Complete elliptic integral of the second kind, `E(m)` for `0 <= m <= 1`.
pub fn ellip_e(m: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&m), "ellip_e parameter out of range: {m}");
    if m == 1.0 {
        return 1.0;
    }
    let mut a = 1.0;
    let mut g = (1.0 - m).sqrt();
    // E = K * (1 - sum 2^(n-1) c_n^2), c_0^2 = m
    let mut sum = 0.5 * m;
    let mut pow = 0.5;
    for _ in 0..AGM_MAX_ITER {
        if (a - g).abs() <= AGM_TOL * a {
            break;
        }
        let c = 0.5 * (a - g);
        let next = 0.5 * (a + g);
        g = (a * g).sqrt();
        a = next;
        pow *= 2.0;
        sum += pow * c * c;
    }
    FRAC_PI_2 / a * (1.0 - sum)
}
