//! Closed-form intervals built on the normal approximation.

use super::{Interval, Method, SampleSummary, ConfidenceSpec};

fn make(method: Method, sample: &SampleSummary, spec: &ConfidenceSpec, lower: f64, upper: f64) -> Interval {
    Interval {
        lower: lower.clamp(0.0, 1.0),
        upper: upper.clamp(0.0, 1.0),
        method,
        sample: *sample,
        spec: *spec,
        aux_u: None,
    }
}

/// Standard Wald interval `p̂ ± κ sqrt(p̂ q̂ / n)`, clamped to `[0, 1]`.
///
/// Degenerates to the single point `p̂` when `x` is 0 or `n`.
pub fn wald(sample: &SampleSummary, spec: &ConfidenceSpec) -> Interval {
    let n = sample.n() as f64;
    let p_hat = sample.p_hat();
    let half = spec.kappa() * (p_hat * sample.q_hat() / n).sqrt();
    make(Method::Wald, sample, spec, p_hat - half, p_hat + half)
}

/// Shrinkage center `(x + κ²/2) / (n + κ²)` shared by Wilson and
/// Agresti-Coull.
pub fn score_center(sample: &SampleSummary, kappa: f64) -> f64 {
    let k2 = kappa * kappa;
    (sample.x() as f64 + 0.5 * k2) / (sample.n() as f64 + k2)
}

/// Wilson score interval: the two roots of `(p̂ - p)² = κ² p (1 - p) / n`.
pub fn wilson(sample: &SampleSummary, spec: &ConfidenceSpec) -> Interval {
    let n = sample.n() as f64;
    let kappa = spec.kappa();
    let k2 = kappa * kappa;
    let center = score_center(sample, kappa);
    let half = kappa * n.sqrt() / (n + k2) * (sample.p_hat() * sample.q_hat() + k2 / (4.0 * n)).sqrt();
    // p = 0 (resp. 1) is an exact root when x = 0 (resp. n).
    let lower = if sample.x() == 0 { 0.0 } else { center - half };
    let upper = if sample.x() == sample.n() { 1.0 } else { center + half };
    make(Method::Wilson, sample, spec, lower, upper)
}

/// Agresti-Coull interval: a Wald interval around the score center with
/// `ñ = n + κ²` trials. With `κ = 2` this is "add two successes and two
/// failures".
pub fn agresti_coull(sample: &SampleSummary, spec: &ConfidenceSpec) -> Interval {
    let kappa = spec.kappa();
    let n_tilde = sample.n() as f64 + kappa * kappa;
    let center = score_center(sample, kappa);
    let half = kappa * (center * (1.0 - center) / n_tilde).sqrt();
    make(Method::AgrestiCoull, sample, spec, center - half, center + half)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u64, x: u64) -> SampleSummary {
        SampleSummary::new(n, x).unwrap()
    }

    #[test]
    fn wald_examples() {
        let k2 = ConfidenceSpec::with_kappa(0.05, 2.0).unwrap();
        let ci = wald(&s(100, 50), &k2);
        assert!((ci.lower - 0.4).abs() < 1e-15 && (ci.upper - 0.6).abs() < 1e-15);

        let spec = ConfidenceSpec::new(0.05).unwrap();
        let ci = wald(&s(40, 0), &spec);
        assert_eq!((ci.lower, ci.upper), (0.0, 0.0));
        let ci = wald(&s(40, 40), &spec);
        assert_eq!((ci.lower, ci.upper), (1.0, 1.0));
    }

    #[test]
    fn wilson_forced_arithmetic() {
        let k2 = ConfidenceSpec::with_kappa(0.05, 2.0).unwrap();
        let ci = wilson(&s(4, 0), &k2);
        assert_eq!(ci.lower, 0.0);
        assert!((ci.upper - 0.5).abs() < 1e-15);
    }

    #[test]
    fn agresti_coull_plus_two() {
        let k2 = ConfidenceSpec::with_kappa(0.05, 2.0).unwrap();
        let ci = agresti_coull(&s(96, 48), &k2);
        assert!((ci.lower - 0.4).abs() < 1e-15 && (ci.upper - 0.6).abs() < 1e-15);
        for n in 1..30u64 {
            for x in 0..=n {
                assert_eq!(score_center(&s(n, x), 2.0), (x as f64 + 2.0) / (n as f64 + 4.0));
            }
        }
    }

    #[test]
    fn ac_contains_wilson_at_moderate_n() {
        let spec = ConfidenceSpec::new(0.05).unwrap();
        let w = wilson(&s(40, 10), &spec);
        let ac = agresti_coull(&s(40, 10), &spec);
        let mid = |ci: &Interval| (ci.lower + ci.upper) / 2.0;
        assert!((mid(&w) - mid(&ac)).abs() < 1e-15);
        assert!(ac.width() >= w.width());
    }
}
