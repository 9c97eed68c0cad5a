//! Jeffreys and likelihood-ratio intervals.

use super::{ConfidenceSpec, Interval, Method, SampleSummary};
use super::exact::ENDPOINT_TOL;
use crate::error::Result;
use crate::numerics::{beta_quantile, find_root, Bracket};

/// Equal-tailed interval from the `Beta(x + 1/2, n - x + 1/2)` posterior.
/// Lower endpoint 0 at `x = 0`, upper endpoint 1 at `x = n`.
pub fn jeffreys(sample: &SampleSummary, spec: &ConfidenceSpec) -> Result<Interval> {
    let (n, x) = (sample.n(), sample.x());
    let a = x as f64 + 0.5;
    let b = (n - x) as f64 + 0.5;
    let half_alpha = spec.alpha() / 2.0;
    let lower = if x == 0 { 0.0 } else { beta_quantile(half_alpha, a, b)? };
    let upper = if x == n { 1.0 } else { beta_quantile(1.0 - half_alpha, a, b)? };
    Ok(Interval { lower, upper, method: Method::Jeffreys, sample: *sample, spec: *spec, aux_u: None })
}

/// Binomial log-likelihood `x ln p + (n - x) ln(1 - p)`, with `0 ln 0 = 0`.
pub fn log_likelihood(x: u64, n: u64, p: f64) -> f64 {
    let succ = if x == 0 { 0.0 } else { x as f64 * p.ln() };
    let fail = if x == n { 0.0 } else { (n - x) as f64 * (-p).ln_1p() };
    succ + fail
}

/// Likelihood-ratio interval: `{p : 2[ℓ(p̂) - ℓ(p)] <= κ²}`.
pub fn likelihood_ratio(sample: &SampleSummary, spec: &ConfidenceSpec) -> Result<Interval> {
    let (n, x) = (sample.n(), sample.x());
    let k2 = spec.kappa() * spec.kappa();
    let p_hat = sample.p_hat();
    // At x = 0 the deviance is -2n ln(1 - p); x = n mirrors it.
    let edge = (-k2 / (2.0 * n as f64)).exp();
    let (lower, upper) = if x == 0 {
        (0.0, 1.0 - edge)
    } else if x == n {
        (edge, 1.0)
    } else {
        let level = log_likelihood(x, n, p_hat) - 0.5 * k2;
        let objective = |p: f64| log_likelihood(x, n, p) - level;
        let lower = find_root(objective, Bracket::new(0.0, p_hat)?, ENDPOINT_TOL)?;
        let upper = find_root(objective, Bracket::new(p_hat, 1.0)?, ENDPOINT_TOL)?;
        (lower, upper)
    };
    Ok(Interval { lower, upper, method: Method::LikelihoodRatio, sample: *sample, spec: *spec, aux_u: None })
}
