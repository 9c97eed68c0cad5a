use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::normal_quantile;

/// Observed binomial data: `x` successes in `n` trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SampleSummary {
    n: u64,
    x: u64,
}

impl SampleSummary {
    pub fn new(n: u64, x: u64) -> Result<Self> {
        if n == 0 {
            return domain("sample size n must be positive");
        }
        if x > n {
            return domain(format!("success count x = {x} exceeds n = {n}"));
        }
        Ok(Self { n, x })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    /// Observed proportion `x / n`.
    pub fn p_hat(&self) -> f64 {
        self.x as f64 / self.n as f64
    }

    pub fn q_hat(&self) -> f64 {
        (self.n - self.x) as f64 / self.n as f64
    }

    /// The sample with successes and failures exchanged.
    pub fn mirrored(&self) -> Self {
        Self { n: self.n, x: self.n - self.x }
    }
}

/// Nominal level: two-sided miscoverage `alpha` and critical value `kappa`.
///
/// `kappa` defaults to the standard normal quantile at `1 - alpha / 2`; it
/// can be pinned to another value (2 is the usual classroom rounding).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceSpec {
    alpha: f64,
    kappa: f64,
}

impl ConfidenceSpec {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self { alpha, kappa: normal_quantile(1.0 - alpha / 2.0)? })
    }

    pub fn with_kappa(alpha: f64, kappa: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(kappa > 0.0 && kappa.is_finite()) {
            return domain(format!("kappa must be positive and finite, got {kappa}"));
        }
        Ok(Self { alpha, kappa })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `1 - alpha`.
    pub fn level(&self) -> f64 {
        1.0 - self.alpha
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        domain(format!("alpha must lie in (0, 1), got {alpha}"))
    }
}

/// The interval constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Wald,
    Wilson,
    AgrestiCoull,
    ClopperPearson,
    MidP,
    Jeffreys,
    LikelihoodRatio,
    #[serde(rename = "stevens")]
    StevensXU,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Wald,
        Method::Wilson,
        Method::AgrestiCoull,
        Method::ClopperPearson,
        Method::MidP,
        Method::Jeffreys,
        Method::LikelihoodRatio,
        Method::StevensXU,
    ];

    /// Every method whose interval is a function of the data alone.
    pub fn deterministic() -> impl Iterator<Item = Method> {
        Self::ALL.into_iter().filter(|m| !m.is_randomized())
    }

    /// Stable lowercase name used on the command line and in CSV/JSON.
    pub fn name(self) -> &'static str {
        match self {
            Method::Wald => "wald",
            Method::Wilson => "wilson",
            Method::AgrestiCoull => "agresti_coull",
            Method::ClopperPearson => "clopper_pearson",
            Method::MidP => "mid_p",
            Method::Jeffreys => "jeffreys",
            Method::LikelihoodRatio => "likelihood_ratio",
            Method::StevensXU => "stevens",
        }
    }

    pub fn is_randomized(self) -> bool {
        self == Method::StevensXU
    }

    /// Parses a comma-separated list of method names; `all` expands to
    /// every method.
    pub fn parse_list(list: &str) -> Result<Vec<Method>> {
        let mut out = Vec::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                for m in Self::ALL {
                    if !out.contains(&m) {
                        out.push(m);
                    }
                }
                continue;
            }
            let m: Method = item.parse()?;
            if !out.contains(&m) {
                out.push(m);
            }
        }
        if out.is_empty() {
            return Err(Error::Usage("empty method list".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|m| m.name()).collect();
                Error::Usage(format!("unknown method '{s}' (expected one of {})", names.join(", ")))
            })
    }
}

/// A computed confidence interval with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
    pub method: Method,
    pub sample: SampleSummary,
    pub spec: ConfidenceSpec,
    /// Auxiliary uniform draw; set exactly when `method` is Stevens.
    pub aux_u: Option<f64>,
}

impl Interval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Closed membership `lower <= p <= upper`.
    pub fn contains(&self, p: f64) -> bool {
        self.lower <= p && p <= self.upper
    }
}
