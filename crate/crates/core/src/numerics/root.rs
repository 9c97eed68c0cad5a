//! Bracketing root finder (Brent's method).

use crate::error::{Error, Result};

/// Absolute tolerance on the root location used by interval constructions.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Iteration cap for [`find_root`].
pub const MAX_ITER: usize = 200;

/// A search interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo < hi && lo.is_finite() && hi.is_finite() {
            Ok(Self { lo, hi })
        } else {
            Err(Error::Domain(format!("invalid bracket [{lo}, {hi}]")))
        }
    }
}

/// Finds a root of `objective` inside `bracket`.
///
/// The objective must take opposite signs at the bracket ends. Infinite
/// values are accepted (e.g. a log-likelihood at 0 or 1); interpolation is
/// skipped while any retained value is infinite, and bisection takes over.
/// The returned point lies within `tol` of a sign change. The same inputs
/// always produce the same bits.
pub fn find_root<F>(objective: F, bracket: Bracket, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let Bracket { lo, hi } = bracket;
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (objective(a), objective(b));
    if fa.is_nan() || fb.is_nan() {
        return Err(Error::Domain(format!("objective is NaN at bracket end [{lo}, {hi}]")));
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracket { lo, hi, f_lo: fa, f_hi: fb });
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        let finite = fa.is_finite() && fb.is_finite() && fc.is_finite();
        if finite && e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                // secant
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                // inverse quadratic interpolation
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = objective(b);
        if fb.is_nan() {
            return Err(Error::Domain(format!("objective is NaN at {b}")));
        }
    }
    let (lo, hi) = if b < c { (b, c) } else { (c, b) };
    Err(Error::Convergence { iterations: MAX_ITER, lo, hi })
}
