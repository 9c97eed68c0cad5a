//! Binomial probabilities computed in log space.
//!
//! Tail probabilities are summed from whichever side of the mean keeps the
//! summed terms monotonically decreasing, anchored at one log-space term and
//! extended by the ratio recurrence. Nothing here goes through the incomplete
//! beta function.

use super::gamma::ln_choose;
use crate::error::{domain, Result};

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        domain(format!("probability {p} outside [0, 1]"))
    }
}

/// `ln Pr(X = k)` for `X ~ B(n, p)`, with `0 * ln 0 = 0`.
pub fn log_binomial_pmf(k: u64, n: u64, p: f64) -> Result<f64> {
    check_p(p)?;
    if k > n {
        return domain(format!("k = {k} outside 0..={n}"));
    }
    Ok(log_pmf_unchecked(k, n, p))
}

pub(crate) fn log_pmf_unchecked(k: u64, n: u64, p: f64) -> f64 {
    if p == 0.0 {
        return if k == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    if p == 1.0 {
        return if k == n { 0.0 } else { f64::NEG_INFINITY };
    }
    ln_choose(n, k) + k as f64 * p.ln() + (n - k) as f64 * (-p).ln_1p()
}

/// `Pr(X = k)` for `X ~ B(n, p)`.
pub fn binomial_pmf(k: u64, n: u64, p: f64) -> Result<f64> {
    log_binomial_pmf(k, n, p).map(f64::exp)
}

/// All of `Pr(X = 0), ..., Pr(X = n)`.
///
/// Anchored at the mode in log space and filled outwards by the ratio
/// recurrence, so the cost is one log-gamma evaluation per call.
pub fn binomial_pmfs(n: u64, p: f64) -> Result<Vec<f64>> {
    check_p(p)?;
    let len = n as usize + 1;
    let mut out = vec![0.0; len];
    if p == 0.0 {
        out[0] = 1.0;
        return Ok(out);
    }
    if p == 1.0 {
        out[n as usize] = 1.0;
        return Ok(out);
    }
    let mode = (((n + 1) as f64 * p).floor() as u64).min(n);
    out[mode as usize] = log_pmf_unchecked(mode, n, p).exp();
    let odds = p / (1.0 - p);
    for k in mode..n {
        let ratio = (n - k) as f64 / (k + 1) as f64 * odds;
        out[k as usize + 1] = out[k as usize] * ratio;
    }
    for k in (1..=mode).rev() {
        let ratio = k as f64 / (n - k + 1) as f64 / odds;
        out[k as usize - 1] = out[k as usize] * ratio;
    }
    Ok(out)
}

/// Sum of `Pr(X = j)` for `j = anchor, anchor - 1, ..., 0`. Only accurate when
/// `anchor` sits at or below the mode.
fn lower_sum(anchor: u64, n: u64, p: f64) -> f64 {
    let log_anchor = log_pmf_unchecked(anchor, n, p);
    if log_anchor == f64::NEG_INFINITY {
        return 0.0;
    }
    let inv_odds = (1.0 - p) / p;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut j = anchor;
    while j > 0 {
        term *= j as f64 / (n - j + 1) as f64 * inv_odds;
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
        j -= 1;
    }
    (log_anchor + sum.ln()).exp()
}

/// Sum of `Pr(X = j)` for `j = anchor, ..., n`. Only accurate when `anchor`
/// sits at or above the mode.
fn upper_sum(anchor: u64, n: u64, p: f64) -> f64 {
    let log_anchor = log_pmf_unchecked(anchor, n, p);
    if log_anchor == f64::NEG_INFINITY {
        return 0.0;
    }
    let odds = p / (1.0 - p);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut j = anchor;
    while j < n {
        term *= (n - j) as f64 / (j + 1) as f64 * odds;
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
        j += 1;
    }
    (log_anchor + sum.ln()).exp()
}

pub(crate) fn cdf_unchecked(k: i64, n: u64, p: f64) -> f64 {
    if k < 0 {
        return 0.0;
    }
    let k = k as u64;
    if k >= n {
        return 1.0;
    }
    if p == 0.0 {
        return 1.0;
    }
    if p == 1.0 {
        return 0.0;
    }
    if (k as f64) < n as f64 * p {
        lower_sum(k, n, p)
    } else {
        1.0 - upper_sum(k + 1, n, p)
    }
}

pub(crate) fn sf_unchecked(k: i64, n: u64, p: f64) -> f64 {
    if k <= 0 {
        return 1.0;
    }
    let k = k as u64;
    if k > n {
        return 0.0;
    }
    if p == 0.0 {
        return 0.0;
    }
    if p == 1.0 {
        return 1.0;
    }
    if (k as f64) > n as f64 * p {
        upper_sum(k, n, p)
    } else {
        1.0 - lower_sum(k - 1, n, p)
    }
}

/// `Pr(X <= k)` for `X ~ B(n, p)`. `k = -1` (or any negative `k`) gives 0.
pub fn binomial_cdf(k: i64, n: u64, p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(cdf_unchecked(k, n, p))
}

/// Upper tail `Pr(X >= k)` for `X ~ B(n, p)`. `k > n` gives 0.
pub fn binomial_sf(k: i64, n: u64, p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(sf_unchecked(k, n, p))
}
