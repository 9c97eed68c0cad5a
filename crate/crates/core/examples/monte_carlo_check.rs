// Enumerated coverage against seeded simulation.
//
// $ cargo run --release --example monte_carlo_check -- 100000
use binom_ci::evaluate::{monte_carlo_coverage, CoverageModel};
use binom_ci::intervals::{ConfidenceSpec, Method};

fn main() -> binom_ci::Result<()> {
    let draws = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100_000);
    let spec = ConfidenceSpec::new(0.05)?;
    let (n, p) = (40, 0.2);
    println!("n = {n}, p = {p}, {draws} draws");
    for (i, m) in Method::ALL.into_iter().enumerate() {
        let exact = CoverageModel::new(m, n, &spec)?.coverage(p)?;
        let mc = monte_carlo_coverage(m, n, p, &spec, draws, i as u64)?;
        println!(
            "{:<18} exact {:.5}   simulated {:.5} ± {:.5}   z = {:+.2}",
            m.name(),
            exact,
            mc.estimate,
            mc.std_error,
            (mc.estimate - exact) / mc.std_error
        );
    }
    Ok(())
}
