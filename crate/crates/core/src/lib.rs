//! Confidence intervals for a binomial proportion, and the machinery to
//! evaluate them exactly.
//!
//! Eight constructions are provided (Wald, Wilson, Agresti-Coull,
//! Clopper-Pearson, Mid-P, Jeffreys, likelihood ratio and the randomized
//! Stevens `X + U` interval). The [`evaluate`] module computes true coverage
//! probability, expected length, a smoothed coverage bias and the oscillation
//! amplitude of any method by enumerating the binomial support.
//!
//! ```
//! use binom_ci::{intervals, ConfidenceSpec, SampleSummary};
//!
//! let sample = SampleSummary::new(40, 10)?;
//! let spec = ConfidenceSpec::new(0.05)?;
//! let ci = intervals::wilson(&sample, &spec);
//! assert!(ci.lower < 0.25 && 0.25 < ci.upper);
//! # Ok::<(), binom_ci::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod evaluate;
pub mod intervals;
pub mod numerics;
pub mod rng;

pub use error::{Error, Result};
pub use evaluate::{EvalPoint, Grid};
pub use intervals::{ConfidenceSpec, Interval, Method, SampleSummary};
