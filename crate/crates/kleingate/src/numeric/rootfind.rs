//! Bracketed bisection.

use crate::error::{Error, Result};

/// Bisection on `[lo, hi]`, requiring `f(lo)` and `f(hi)` to have opposite
/// signs. Runs until the bracket width drops below `tol` (absolute) or
/// `max_iter` halvings, whichever comes first, and returns the midpoint.
pub fn bisect<F>(mut lo: f64, mut hi: f64, f: F, tol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::BracketFailure { lo, hi });
    }

    let mut flo = flo;
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() < tol || mid == lo || mid == hi {
            return Ok(mid);
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
