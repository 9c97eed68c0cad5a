//! The eight interval constructions for a binomial proportion.

mod exact;
mod likelihood;
mod normal_approx;
mod types;

pub use exact::{clopper_pearson, mid_p, stevens};
pub use likelihood::{jeffreys, likelihood_ratio, log_likelihood};
pub use normal_approx::{agresti_coull, score_center, wald, wilson};
pub use types::{ConfidenceSpec, Interval, Method, SampleSummary};

use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::seeded_rng;

/// Computes the interval for any deterministic method.
///
/// Stevens needs a randomization value and goes through [`compute`] or
/// [`stevens`] instead.
pub fn deterministic(method: Method, sample: &SampleSummary, spec: &ConfidenceSpec) -> Result<Interval> {
    match method {
        Method::Wald => Ok(wald(sample, spec)),
        Method::Wilson => Ok(wilson(sample, spec)),
        Method::AgrestiCoull => Ok(agresti_coull(sample, spec)),
        Method::ClopperPearson => clopper_pearson(sample, spec),
        Method::MidP => mid_p(sample, spec),
        Method::Jeffreys => jeffreys(sample, spec),
        Method::LikelihoodRatio => likelihood_ratio(sample, spec),
        Method::StevensXU => Err(Error::Usage(
            "the Stevens interval needs a randomization value u (or a seed)".into(),
        )),
    }
}

/// Uniform entry point over all eight methods.
///
/// For Stevens, `u` is used when given; otherwise one uniform draw is taken
/// from a generator seeded with `seed`. Supplying `u` or `seed` to a
/// deterministic method is a usage error.
pub fn compute(
    method: Method,
    sample: &SampleSummary,
    spec: &ConfidenceSpec,
    u: Option<f64>,
    seed: Option<u64>,
) -> Result<Interval> {
    if !method.is_randomized() {
        if u.is_some() || seed.is_some() {
            return Err(Error::Usage(format!(
                "u and seed only apply to the stevens method, not {method}"
            )));
        }
        return deterministic(method, sample, spec);
    }
    let u = match (u, seed) {
        (Some(u), _) => u,
        (None, Some(seed)) => seeded_rng(seed).random::<f64>(),
        (None, None) => {
            return Err(Error::Usage("the stevens method needs --u or --seed".into()));
        }
    };
    stevens(sample, spec, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch() {
        let k2 = ConfidenceSpec::with_kappa(0.05, 2.0).unwrap();
        let s = SampleSummary::new(100, 50).unwrap();
        let ci = compute(Method::Wald, &s, &k2, None, None).unwrap();
        assert!((ci.lower - 0.4).abs() < 1e-15 && (ci.upper - 0.6).abs() < 1e-15);

        let spec = ConfidenceSpec::new(0.05).unwrap();
        let s = SampleSummary::new(10, 0).unwrap();
        let ci = compute(Method::ClopperPearson, &s, &spec, None, None).unwrap();
        assert_eq!(ci.lower, 0.0);
        assert!((ci.upper - 0.30850).abs() < 1e-5);
    }

    #[test]
    fn seeded_stevens_is_reproducible() {
        let spec = ConfidenceSpec::new(0.05).unwrap();
        let s = SampleSummary::new(20, 5).unwrap();
        let a = compute(Method::StevensXU, &s, &spec, None, Some(7)).unwrap();
        let b = compute(Method::StevensXU, &s, &spec, None, Some(7)).unwrap();
        assert_eq!(a.lower.to_bits(), b.lower.to_bits());
        assert_eq!(a.upper.to_bits(), b.upper.to_bits());
        assert_eq!(a.aux_u, b.aux_u);
        let u = a.aux_u.unwrap();
        assert!((0.0..1.0).contains(&u));
    }

    #[test]
    fn usage_errors() {
        let spec = ConfidenceSpec::new(0.05).unwrap();
        let s = SampleSummary::new(20, 5).unwrap();
        assert!(matches!(compute(Method::StevensXU, &s, &spec, None, None), Err(Error::Usage(_))));
        assert!(matches!(compute(Method::Wald, &s, &spec, Some(0.3), None), Err(Error::Usage(_))));
        assert!(matches!(compute(Method::Wilson, &s, &spec, None, Some(1)), Err(Error::Usage(_))));
        assert!(matches!(deterministic(Method::StevensXU, &s, &spec), Err(Error::Usage(_))));
    }
}
