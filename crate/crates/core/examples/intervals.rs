// All eight intervals for one sample.
//
// $ cargo run --example intervals -- 40 10
use binom_ci::intervals::{self, ConfidenceSpec, Method, SampleSummary};

fn main() -> binom_ci::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("n and x must be integers"));
    let n = args.next().unwrap_or(40);
    let x = args.next().unwrap_or(10);
    let sample = SampleSummary::new(n, x)?;
    let spec = ConfidenceSpec::new(0.05)?;

    println!("x = {x} of n = {n}, 95% intervals");
    for method in Method::deterministic() {
        let ci = intervals::deterministic(method, &sample, &spec)?;
        println!("{:<18} [{:.5}, {:.5}]  width {:.5}", method.name(), ci.lower, ci.upper, ci.width());
    }
    // Stevens needs an auxiliary uniform draw
    let ci = intervals::compute(Method::StevensXU, &sample, &spec, None, Some(42))?;
    println!("{:<18} [{:.5}, {:.5}]  width {:.5}  (u = {:.4})", "stevens", ci.lower, ci.upper, ci.width(), ci.aux_u.unwrap());

    // Wilson and Agresti-Coull share a center; with kappa = 2 it is (x+2)/(n+4)
    let two = ConfidenceSpec::with_kappa(0.05, 2.0)?;
    let ac = intervals::agresti_coull(&sample, &two);
    println!("AC center at kappa=2: {:.5} vs (x+2)/(n+4) = {:.5}", 0.5 * (ac.lower + ac.upper), (x + 2) as f64 / (n + 4) as f64);
    Ok(())
}
