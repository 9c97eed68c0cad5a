// The numerical building blocks on their own.
//
// $ cargo run --example special_functions
use binom_ci::numerics::{
    beta_quantile, binomial_cdf, binomial_sf, find_root, normal_quantile, reg_inc_beta, Bracket,
};

fn main() -> binom_ci::Result<()> {
    println!("z(0.975)            = {:.12}", normal_quantile(0.975)?);
    println!("z(1e-10)            = {:.12}", normal_quantile(1e-10)?);
    println!("I_0.3(10.5, 30.5)   = {:.12}", reg_inc_beta(0.3, 10.5, 30.5)?);
    println!("Beta(10.5, 30.5) q  = {:.12}", beta_quantile(0.025, 10.5, 30.5)?);
    println!("Pr(X <= 5), B(10,.5) = {:.12}", binomial_cdf(5, 10, 0.5)?);
    println!("Pr(X >= 990), B(1000,.5) = {:.6e}", binomial_sf(990, 1000, 0.5)?);

    // (1 - p)^10 = 0.025
    let root = find_root(|p| (1.0 - p).powi(10) - 0.025, Bracket::new(0.0, 1.0)?, 0.0)?;
    println!("root                = {root:.12} (closed form {:.12})", 1.0 - 0.025f64.powf(0.1));
    Ok(())
}
