//! Special functions and root finding shared by every interval construction.
//!
//! Everything here is a pure function of its arguments.

mod beta;
mod binomial;
mod gamma;
mod gauss;
mod normal;
mod root;

pub use beta::{beta_quantile, reg_inc_beta};
pub use binomial::{binomial_cdf, binomial_pmf, binomial_pmfs, binomial_sf, log_binomial_pmf};
pub use gamma::{ln_beta, ln_choose, ln_factorial, ln_gamma};
pub use gauss::gauss_legendre_unit;
pub use normal::normal_quantile;
pub use root::{find_root, Bracket, DEFAULT_TOL, MAX_ITER};

pub(crate) use binomial::{cdf_unchecked, log_pmf_unchecked, sf_unchecked};
