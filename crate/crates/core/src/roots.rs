//! Bracketed scalar root finding.

use crate::error::{Error, Result};

pub(crate) const MAX_BISECTIONS: usize = 500;

/// Bisection on `[lo, hi]` until `done(lo, hi, f_mid)` holds or the bracket
/// collapses to adjacent floats. The endpoints must straddle a sign change.
pub(crate) fn bisect<F, D>(mut f: F, mut lo: f64, mut hi: f64, mut done: D) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
    D: FnMut(f64, f64, f64) -> bool,
{
    let mut f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket(format!(
            "f({lo:e}) = {f_lo:e} and f({hi:e}) = {f_hi:e} have the same sign"
        )));
    }
    let mut trace = Vec::new();
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo.min(hi) || mid >= lo.max(hi) {
            return Ok(mid);
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 || done(lo, hi, f_mid) {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        trace.push(f_mid);
        if trace.len() > 8 {
            trace.remove(0);
        }
    }
    Err(Error::Divergence {
        iterations: MAX_BISECTIONS,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = bisect(|x| Ok(x * x - 2.0), 0.0, 2.0, |lo, hi, _| (hi - lo).abs() < 1e-14).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn reversed_bracket_is_fine() {
        let r = bisect(|x| Ok(x - 0.25), 1.0, 0.0, |lo, hi, _| (hi - lo).abs() < 1e-15).unwrap();
        assert!((r - 0.25).abs() < 1e-14);
    }

    #[test]
    fn rejects_unbracketed() {
        let err = bisect(|x| Ok(x * x + 1.0), -1.0, 1.0, |_, _, _| false).unwrap_err();
        assert!(matches!(err, Error::Bracket(_)));
    }
}
