//! Intervals obtained by inverting binomial tail equations.
//!
//! All three share one pair of equations, parameterized by how much of the
//! observed outcome's probability enters each tail:
//!
//! ```text
//! upper:  Pr_p(X <= x - 1) + w_up · Pr_p(X = x) = α/2
//! lower:  Pr_p(X >= x + 1) + w_lo · Pr_p(X = x) = α/2
//! ```
//!
//! Clopper-Pearson uses `w_up = w_lo = 1`, Mid-P uses `1/2`, and the Stevens
//! interval for the continuous statistic `X + U` uses `w_up = u`,
//! `w_lo = 1 - u`. Both left-hand sides are monotone in `p`. When an
//! equation has no root in `(0, 1)` the endpoint is clamped to 0 or 1.

use super::{ConfidenceSpec, Interval, Method, SampleSummary};
use crate::error::{domain, Result};
use crate::numerics::{cdf_unchecked, find_root, log_pmf_unchecked, sf_unchecked, Bracket};

/// Root tolerance for tail inversions; zero asks the root finder for
/// machine precision.
pub(crate) const ENDPOINT_TOL: f64 = 0.0;

/// Left-hand side of the upper-endpoint equation; nonincreasing in `p`.
fn upper_tail_mass(x: u64, n: u64, p: f64, weight: f64) -> f64 {
    let below = cdf_unchecked(x as i64 - 1, n, p);
    if weight == 0.0 {
        return below;
    }
    below + weight * log_pmf_unchecked(x, n, p).exp()
}

/// Left-hand side of the lower-endpoint equation; nondecreasing in `p`.
fn lower_tail_mass(x: u64, n: u64, p: f64, weight: f64) -> f64 {
    let above = sf_unchecked(x as i64 + 1, n, p);
    if weight == 0.0 {
        return above;
    }
    above + weight * log_pmf_unchecked(x, n, p).exp()
}

fn solve_upper(x: u64, n: u64, target: f64, weight: f64) -> Result<f64> {
    let at_one = if x == n { weight } else { 0.0 };
    if at_one >= target {
        return Ok(1.0);
    }
    let at_zero = if x == 0 { weight } else { 1.0 };
    if at_zero <= target {
        return Ok(0.0);
    }
    find_root(
        |p| upper_tail_mass(x, n, p, weight) - target,
        Bracket::new(0.0, 1.0)?,
        ENDPOINT_TOL,
    )
}

fn solve_lower(x: u64, n: u64, target: f64, weight: f64) -> Result<f64> {
    let at_zero = if x == 0 { weight } else { 0.0 };
    if at_zero >= target {
        return Ok(0.0);
    }
    let at_one = if x == n { weight } else { 1.0 };
    if at_one <= target {
        return Ok(1.0);
    }
    find_root(
        |p| lower_tail_mass(x, n, p, weight) - target,
        Bracket::new(0.0, 1.0)?,
        ENDPOINT_TOL,
    )
}

fn tail_interval(
    method: Method,
    sample: &SampleSummary,
    spec: &ConfidenceSpec,
    w_lower: f64,
    w_upper: f64,
    aux_u: Option<f64>,
) -> Result<Interval> {
    let (n, x) = (sample.n(), sample.x());
    let target = spec.alpha() / 2.0;
    let lower = solve_lower(x, n, target, w_lower)?;
    let upper = solve_upper(x, n, target, w_upper)?;
    Ok(Interval { lower, upper, method, sample: *sample, spec: *spec, aux_u })
}

/// Clopper-Pearson interval. Lower endpoint 0 at `x = 0`, upper endpoint 1
/// at `x = n`.
pub fn clopper_pearson(sample: &SampleSummary, spec: &ConfidenceSpec) -> Result<Interval> {
    tail_interval(Method::ClopperPearson, sample, spec, 1.0, 1.0, None)
}

/// Mid-P interval: Clopper-Pearson with the observed outcome counted at half
/// weight in each tail.
pub fn mid_p(sample: &SampleSummary, spec: &ConfidenceSpec) -> Result<Interval> {
    tail_interval(Method::MidP, sample, spec, 0.5, 0.5, None)
}

/// Stevens randomized interval for the observation `X + U = x + u`.
///
/// Its coverage is exactly `1 - α` for every `p` once `u` is drawn uniformly
/// on `[0, 1]`. At `u = 1/2` it coincides with [`mid_p`].
pub fn stevens(sample: &SampleSummary, spec: &ConfidenceSpec, u: f64) -> Result<Interval> {
    if !(0.0..=1.0).contains(&u) {
        return domain(format!("randomization value u = {u} outside [0, 1]"));
    }
    tail_interval(Method::StevensXU, sample, spec, 1.0 - u, u, Some(u))
}
