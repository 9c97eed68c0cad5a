//! Exact evaluation of interval methods by enumerating `X ∈ {0, ..., n}`.
//!
//! For a deterministic method the `n + 1` intervals are computed once per
//! `(method, n, spec)` and reused for every `p` of a sweep. The Stevens
//! interval is handled in closed form: at fixed `p` the set of `u` whose
//! interval covers `p` is an explicit sub-interval of `[0, 1]`.

use std::str::FromStr;

use rand::Rng;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::intervals::{self, ConfidenceSpec, Method, SampleSummary};
use crate::numerics::{binomial_pmfs, gauss_legendre_unit};
use crate::rng::seeded_rng;

/// Default Gauss–Legendre order for integrating Stevens lengths over `u`.
pub const DEFAULT_QUAD_POINTS: usize = 16;
/// Default width of the moving-average window in `p`.
pub const DEFAULT_WINDOW: f64 = 0.05;
/// Default number of points averaged inside the window.
pub const DEFAULT_GRID_DENSITY: usize = 201;

/// One point of an evaluation curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalPoint {
    pub p: f64,
    pub value: f64,
}

/// `count` equally spaced abscissae from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    start: f64,
    stop: f64,
    count: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self> {
        if !(start > 0.0 && start <= stop && stop < 1.0) {
            return domain(format!("grid must satisfy 0 < start <= stop < 1, got {start}..{stop}"));
        }
        if count == 0 {
            return domain("grid count must be positive");
        }
        Ok(Self { start, stop, count })
    }

    /// A single-point grid.
    pub fn single(p: f64) -> Result<Self> {
        Self::new(p, p, 1)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn stop(&self) -> f64 {
        self.stop
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let span = self.stop - self.start;
        let last = self.count - 1;
        (0..self.count)
            .map(|i| if i == last { self.stop } else { self.start + span * i as f64 / last as f64 })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    /// Parses `start:stop:count`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Usage(format!("grid '{s}' is not of the form start:stop:count"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let stop: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
        Grid::new(start, stop, count)
    }
}

fn check_open_unit(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        domain(format!("p must lie in (0, 1), got {p}"))
    }
}

/// The `n + 1` intervals of a deterministic method.
#[derive(Debug, Clone)]
pub struct EndpointTable {
    method: Method,
    n: u64,
    bounds: Vec<(f64, f64)>,
}

impl EndpointTable {
    pub fn build(method: Method, n: u64, spec: &ConfidenceSpec) -> Result<Self> {
        if method.is_randomized() {
            return Err(Error::Usage(
                "stevens coverage is randomized; use stevens_exact_coverage".into(),
            ));
        }
        let bounds = (0..=n)
            .map(|x| {
                let ci = intervals::deterministic(method, &SampleSummary::new(n, x)?, spec)?;
                Ok((ci.lower, ci.upper))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { method, n, bounds })
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(lower, upper)` for `x = 0..=n`.
    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    pub fn coverage(&self, p: f64) -> Result<f64> {
        let pmf = binomial_pmfs(self.n, p)?;
        Ok(pmf
            .iter()
            .zip(&self.bounds)
            .filter(|(_, &(lo, hi))| lo <= p && p <= hi)
            .map(|(w, _)| w)
            .sum())
    }

    pub fn expected_length(&self, p: f64) -> Result<f64> {
        let pmf = binomial_pmfs(self.n, p)?;
        Ok(pmf.iter().zip(&self.bounds).map(|(w, (lo, hi))| w * (hi - lo)).sum())
    }
}

/// Stevens endpoints tabulated on a Gauss–Legendre rule in `u` for every `x`.
#[derive(Debug, Clone)]
pub struct StevensLengthTable {
    n: u64,
    /// Per `x`: `∫₀¹ (upper(x, u) - lower(x, u)) du` by quadrature.
    mean_width: Vec<f64>,
}

impl StevensLengthTable {
    pub fn build(n: u64, spec: &ConfidenceSpec, quad_points: usize) -> Result<Self> {
        if quad_points == 0 {
            return domain("quad_points must be positive");
        }
        let (nodes, weights) = gauss_legendre_unit(quad_points);
        // At x = 0 and x = n an endpoint sits clamped at 0 or 1 until u
        // crosses α/2 or 1 - α/2, which puts a kink in the width. The rule
        // is applied on each piece between those points.
        let half = spec.alpha() / 2.0;
        let pieces = [0.0, half.min(1.0 - half), half.max(1.0 - half), 1.0];
        let mean_width = (0..=n)
            .map(|x| {
                let sample = SampleSummary::new(n, x)?;
                let mut total = 0.0;
                for ab in pieces.windows(2) {
                    let (a, b) = (ab[0], ab[1]);
                    if b <= a {
                        continue;
                    }
                    for (&t, &w) in nodes.iter().zip(&weights) {
                        let ci = intervals::stevens(&sample, spec, a + (b - a) * t)?;
                        total += (b - a) * w * ci.width();
                    }
                }
                Ok(total)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, mean_width })
    }

    pub fn expected_length(&self, p: f64) -> Result<f64> {
        let pmf = binomial_pmfs(self.n, p)?;
        Ok(pmf.iter().zip(&self.mean_width).map(|(w, l)| w * l).sum())
    }
}

/// Exact coverage `Pr_p(p ∈ [lower(X), upper(X)])` of a deterministic method.
pub fn coverage_probability(method: Method, n: u64, p: f64, spec: &ConfidenceSpec) -> Result<f64> {
    check_open_unit(p)?;
    EndpointTable::build(method, n, spec)?.coverage(p)
}

/// Length of `{u ∈ [0, 1] : lower(k, u) <= target <= upper(k, u)}` given
/// the tail masses at `target`.
fn covering_u_measure(below: f64, at: f64, above: f64, half_alpha: f64) -> f64 {
    if at <= 0.0 {
        // Pr(X = k) underflowed; the weight multiplying this term is zero.
        return 0.0;
    }
    let u_min = ((half_alpha - below) / at).clamp(0.0, 1.0);
    let u_max = 1.0 - ((half_alpha - above) / at).clamp(0.0, 1.0);
    (u_max - u_min).max(0.0)
}

/// Probability under `B(n, p_true)` and `U ~ Uniform(0, 1)` that the Stevens
/// interval contains `p_target`.
///
/// With `p_target = p_true` this is the coverage; otherwise it is a
/// false-coverage probability.
pub fn stevens_inclusion_probability(
    n: u64,
    p_true: f64,
    p_target: f64,
    spec: &ConfidenceSpec,
) -> Result<f64> {
    check_open_unit(p_true)?;
    check_open_unit(p_target)?;
    if n == 0 {
        return domain("n must be positive");
    }
    let weights = binomial_pmfs(n, p_true)?;
    let at_target = binomial_pmfs(n, p_target)?;
    let half_alpha = spec.alpha() / 2.0;
    // Tail masses at p_target, by running sums in both directions.
    let mut above = vec![0.0; n as usize + 2];
    for k in (0..=n as usize).rev() {
        above[k] = above[k + 1] + at_target[k];
    }
    let mut below = 0.0;
    let mut total = 0.0;
    for k in 0..=n as usize {
        let m = covering_u_measure(below, at_target[k], above[k + 1], half_alpha);
        total += weights[k] * m;
        below += at_target[k];
    }
    Ok(total)
}

/// Exact coverage of the Stevens interval; equals `1 - α` for every `p`.
pub fn stevens_exact_coverage(n: u64, p: f64, spec: &ConfidenceSpec) -> Result<f64> {
    stevens_inclusion_probability(n, p, p, spec)
}

/// Coverage at each grid point (closed-form for Stevens).
pub fn coverage_curve(method: Method, n: u64, spec: &ConfidenceSpec, grid: &Grid) -> Result<Vec<EvalPoint>> {
    let model = CoverageModel::new(method, n, spec)?;
    grid.points()
        .into_par_iter()
        .map(|p| Ok(EvalPoint { p, value: model.coverage(p)? }))
        .collect()
}

/// `E_p[upper(X) - lower(X)]`; for Stevens the expectation also runs over
/// `U`, integrated with a `quad_points`-node Gauss–Legendre rule on each of
/// `[0, α/2]`, `[α/2, 1 - α/2]` and `[1 - α/2, 1]`.
pub fn expected_length(
    method: Method,
    n: u64,
    p: f64,
    spec: &ConfidenceSpec,
    quad_points: usize,
) -> Result<f64> {
    check_open_unit(p)?;
    LengthModel::new(method, n, spec, quad_points)?.expected_length(p)
}

pub fn length_curve(
    method: Method,
    n: u64,
    spec: &ConfidenceSpec,
    grid: &Grid,
    quad_points: usize,
) -> Result<Vec<EvalPoint>> {
    let model = LengthModel::new(method, n, spec, quad_points)?;
    grid.points()
        .into_par_iter()
        .map(|p| Ok(EvalPoint { p, value: model.expected_length(p)? }))
        .collect()
}

/// Coverage evaluator with the endpoint table built once.
#[derive(Debug, Clone)]
pub enum CoverageModel {
    Table(EndpointTable),
    Stevens { n: u64, spec: ConfidenceSpec },
}

impl CoverageModel {
    pub fn new(method: Method, n: u64, spec: &ConfidenceSpec) -> Result<Self> {
        if n == 0 {
            return domain("n must be positive");
        }
        if method.is_randomized() {
            Ok(Self::Stevens { n, spec: *spec })
        } else {
            EndpointTable::build(method, n, spec).map(Self::Table)
        }
    }

    pub fn coverage(&self, p: f64) -> Result<f64> {
        check_open_unit(p)?;
        match self {
            Self::Table(t) => t.coverage(p),
            Self::Stevens { n, spec } => stevens_exact_coverage(*n, p, spec),
        }
    }
}

/// Expected-length evaluator with endpoints tabulated once.
#[derive(Debug, Clone)]
pub enum LengthModel {
    Table(EndpointTable),
    Stevens(StevensLengthTable),
}

impl LengthModel {
    pub fn new(method: Method, n: u64, spec: &ConfidenceSpec, quad_points: usize) -> Result<Self> {
        if n == 0 {
            return domain("n must be positive");
        }
        if method.is_randomized() {
            StevensLengthTable::build(n, spec, quad_points).map(Self::Stevens)
        } else {
            EndpointTable::build(method, n, spec).map(Self::Table)
        }
    }

    pub fn expected_length(&self, p: f64) -> Result<f64> {
        check_open_unit(p)?;
        match self {
            Self::Table(t) => t.expected_length(p),
            Self::Stevens(t) => t.expected_length(p),
        }
    }
}

fn window_points(p: f64, window: f64, grid_density: usize) -> Result<Vec<f64>> {
    if !(window >= 0.0 && window.is_finite()) {
        return domain(format!("window must be nonnegative, got {window}"));
    }
    if grid_density == 0 {
        return domain("grid density must be positive");
    }
    let (lo, hi) = (p - window / 2.0, p + window / 2.0);
    if !(lo > 0.0 && hi < 1.0) {
        return domain(format!("window [{lo}, {hi}] around p = {p} leaves (0, 1)"));
    }
    if grid_density == 1 {
        return Ok(vec![p]);
    }
    let last = (grid_density - 1) as f64;
    Ok((0..grid_density).map(|i| lo + window * i as f64 / last).collect())
}

fn smoothed_bias_with(model: &CoverageModel, spec: &ConfidenceSpec, p: f64, window: f64, grid_density: usize) -> Result<f64> {
    let points = window_points(p, window, grid_density)?;
    let mut sum = 0.0;
    for &q in &points {
        sum += model.coverage(q)? - spec.level();
    }
    Ok(sum / points.len() as f64)
}

/// Moving average of `coverage - (1 - α)` over a window of width `window`
/// centred on `p`. The average cancels the fast oscillation of the coverage
/// curve and leaves its systematic bias.
pub fn smoothed_bias(
    method: Method,
    n: u64,
    spec: &ConfidenceSpec,
    p: f64,
    window: f64,
    grid_density: usize,
) -> Result<f64> {
    let model = CoverageModel::new(method, n, spec)?;
    smoothed_bias_with(&model, spec, p, window, grid_density)
}

/// Smoothed bias at every grid point.
pub fn bias_curve(
    method: Method,
    n: u64,
    spec: &ConfidenceSpec,
    grid: &Grid,
    window: f64,
    grid_density: usize,
) -> Result<Vec<EvalPoint>> {
    let model = CoverageModel::new(method, n, spec)?;
    grid.points()
        .into_par_iter()
        .map(|p| Ok(EvalPoint { p, value: smoothed_bias_with(&model, spec, p, window, grid_density)? }))
        .collect()
}

/// Mean over the grid of `|coverage(p) - (1 - α) - smoothed_bias(p)|`: the
/// average distance of the coverage curve from its local moving average.
pub fn oscillation_amplitude(
    method: Method,
    n: u64,
    spec: &ConfidenceSpec,
    grid: &Grid,
    window: f64,
) -> Result<f64> {
    let model = CoverageModel::new(method, n, spec)?;
    let residuals = grid
        .points()
        .into_par_iter()
        .map(|p| {
            let bias = smoothed_bias_with(&model, spec, p, window, DEFAULT_GRID_DENSITY)?;
            Ok((model.coverage(p)? - spec.level() - bias).abs())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(residuals.iter().sum::<f64>() / residuals.len() as f64)
}

/// Mean of the Wald statistic, exact versus first-order approximation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WaldMoment {
    /// `E[√n (p̂ - p) / √(p̂ q̂) | 0 < X < n]`, by enumeration.
    pub exact_conditional: f64,
    /// `(p - 1/2) / √(n p (1 - p))`.
    pub approx: f64,
}

/// Compares the exact mean of the Wald statistic with its leading-order
/// expansion. The statistic is undefined at `X ∈ {0, n}`, so the exact mean
/// is conditional on `0 < X < n`.
pub fn wald_moment_diagnostic(n: u64, p: f64) -> Result<WaldMoment> {
    check_open_unit(p)?;
    if n < 2 {
        return domain("the Wald moment diagnostic needs n >= 2");
    }
    let pmf = binomial_pmfs(n, p)?;
    let nf = n as f64;
    let (mut mass, mut moment) = (0.0, 0.0);
    for k in 1..n {
        let p_hat = k as f64 / nf;
        let w = nf.sqrt() * (p_hat - p) / (p_hat * (1.0 - p_hat)).sqrt();
        mass += pmf[k as usize];
        moment += pmf[k as usize] * w;
    }
    Ok(WaldMoment {
        exact_conditional: moment / mass,
        approx: (p - 0.5) / (nf * p * (1.0 - p)).sqrt(),
    })
}

/// A Monte-Carlo coverage estimate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub std_error: f64,
}

/// Simulated coverage: draws `X ~ B(n, p)` (and `U ~ Uniform(0, 1)` for
/// Stevens), builds the interval and counts how often it contains `p`.
pub fn monte_carlo_coverage(
    method: Method,
    n: u64,
    p: f64,
    spec: &ConfidenceSpec,
    draws: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    check_open_unit(p)?;
    if draws == 0 {
        return domain("draws must be positive");
    }
    let binomial = Binomial::new(n, p).map_err(|e| Error::Domain(e.to_string()))?;
    let mut rng = seeded_rng(seed);
    let mut hits: u64 = 0;
    if method.is_randomized() {
        for _ in 0..draws {
            let x = binomial.sample(&mut rng);
            let u: f64 = rng.random();
            if intervals::stevens(&SampleSummary::new(n, x)?, spec, u)?.contains(p) {
                hits += 1;
            }
        }
    } else {
        let intervals = (0..=n)
            .map(|x| intervals::deterministic(method, &SampleSummary::new(n, x)?, spec))
            .collect::<Result<Vec<_>>>()?;
        for _ in 0..draws {
            let x = binomial.sample(&mut rng) as usize;
            if intervals[x].contains(p) {
                hits += 1;
            }
        }
    }
    let estimate = hits as f64 / draws as f64;
    let std_error = (estimate * (1.0 - estimate) / draws as f64).sqrt();
    Ok(MonteCarloEstimate { estimate, std_error })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec05() -> ConfidenceSpec {
        ConfidenceSpec::new(0.05).unwrap()
    }

    #[test]
    fn grid_points() {
        let g: Grid = "0.001:0.999:999".parse().unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 999);
        assert_eq!(pts[0], 0.001);
        assert_eq!(pts[998], 0.999);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert!((pts[499] - 0.5).abs() < 1e-15);
        assert_eq!(Grid::single(0.5).unwrap().points(), vec![0.5]);
        assert!("0:0.5:3".parse::<Grid>().is_err());
        assert!("0.1:0.5".parse::<Grid>().is_err());
        assert!("0.5:0.1:3".parse::<Grid>().is_err());
        assert!("0.1:0.5:0".parse::<Grid>().is_err());
        assert!(matches!("a:b:c".parse::<Grid>(), Err(Error::Usage(_))));
    }

    #[test]
    fn n_one_cases() {
        assert_eq!(coverage_probability(Method::Wald, 1, 0.5, &spec05()).unwrap(), 0.0);
        assert!((coverage_probability(Method::ClopperPearson, 1, 0.5, &spec05()).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(expected_length(Method::Wald, 1, 0.5, &spec05(), 16).unwrap(), 0.0);
    }

    #[test]
    fn stevens_rejected_by_deterministic_coverage() {
        let err = coverage_probability(Method::StevensXU, 10, 0.5, &spec05()).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn domain_checks() {
        assert!(coverage_probability(Method::Wald, 10, 0.0, &spec05()).is_err());
        assert!(coverage_probability(Method::Wald, 10, 1.0, &spec05()).is_err());
        assert!(smoothed_bias(Method::Wald, 10, &spec05(), 0.01, 0.05, 201).is_err());
        assert!(smoothed_bias(Method::Wald, 10, &spec05(), 0.99, 0.05, 201).is_err());
        assert!(wald_moment_diagnostic(1, 0.3).is_err());
        assert!(monte_carlo_coverage(Method::Wald, 10, 0.3, &spec05(), 0, 1).is_err());
        assert!(expected_length(Method::StevensXU, 10, 0.3, &spec05(), 0).is_err());
    }

    #[test]
    fn singleton_curves_match_pointwise() {
        let g = Grid::single(0.5).unwrap();
        for m in Method::ALL {
            let c = coverage_curve(m, 40, &spec05(), &g).unwrap();
            assert_eq!(c.len(), 1);
            let direct = if m.is_randomized() {
                stevens_exact_coverage(40, 0.5, &spec05()).unwrap()
            } else {
                coverage_probability(m, 40, 0.5, &spec05()).unwrap()
            };
            assert_eq!(c[0].value, direct);
            let l = length_curve(m, 40, &spec05(), &g, 16).unwrap();
            assert_eq!(l[0].value, expected_length(m, 40, 0.5, &spec05(), 16).unwrap());
        }
    }

    #[test]
    fn stevens_coverage_is_exact() {
        for &(n, p) in &[(40, 0.5), (40, 0.123), (1, 0.3), (20, 0.3), (200, 0.01)] {
            let c = stevens_exact_coverage(n, p, &spec05()).unwrap();
            assert!((c - 0.95).abs() < 1e-9, "n={n} p={p}: {c}");
        }
    }

    #[test]
    fn covering_measure_agrees_with_constructed_intervals() {
        // For fixed (k, p), scan u and check the constructed interval against
        // the closed-form set of covering u.
        let spec = spec05();
        let (n, p) = (12u64, 0.37);
        for k in 0..=n {
            let sample = SampleSummary::new(n, k).unwrap();
            let pmf = binomial_pmfs(n, p).unwrap();
            let below: f64 = pmf[..k as usize].iter().sum();
            let above: f64 = pmf[k as usize + 1..].iter().sum();
            let half = spec.alpha() / 2.0;
            let u_min = ((half - below) / pmf[k as usize]).clamp(0.0, 1.0);
            let u_max = 1.0 - ((half - above) / pmf[k as usize]).clamp(0.0, 1.0);
            for i in 0..=200 {
                let u = i as f64 / 200.0;
                if (u - u_min).abs() < 1e-9 || (u - u_max).abs() < 1e-9 {
                    continue;
                }
                let covers = intervals::stevens(&sample, &spec, u).unwrap().contains(p);
                assert_eq!(covers, u_min <= u && u <= u_max, "k={k} u={u}");
            }
        }
    }

    #[test]
    fn wald_moment_examples() {
        let d = wald_moment_diagnostic(40, 0.5).unwrap();
        assert!(d.exact_conditional.abs() < 1e-15);
        assert_eq!(d.approx, 0.0);
        let d = wald_moment_diagnostic(40, 0.3).unwrap();
        assert!((d.approx - (-0.2 / (8.4f64).sqrt())).abs() < 1e-15);
        assert!((d.approx - (-0.069_006_555)).abs() < 1e-8);
    }

    #[test]
    fn single_draw_is_zero_or_one() {
        for m in Method::ALL {
            let e = monte_carlo_coverage(m, 15, 0.4, &spec05(), 1, 3).unwrap().estimate;
            assert!(e == 0.0 || e == 1.0);
        }
    }

    #[test]
    fn monte_carlo_cp_n_one() {
        let e = monte_carlo_coverage(Method::ClopperPearson, 1, 0.5, &spec05(), 100_000, 11).unwrap();
        assert_eq!(e.estimate, 1.0);
        assert_eq!(e.std_error, 0.0);
    }
}
