// The randomized X + U interval: exact coverage, its dependence on u, and
// the link to mid-p at u = 1/2.
//
// $ cargo run --example stevens_randomized
use binom_ci::evaluate::{coverage_probability, stevens_exact_coverage};
use binom_ci::intervals::{self, ConfidenceSpec, Method, SampleSummary};

fn main() -> binom_ci::Result<()> {
    let spec = ConfidenceSpec::new(0.05)?;
    let sample = SampleSummary::new(25, 7)?;
    for u in [0.0, 0.2, 0.5, 0.8, 1.0] {
        let ci = intervals::stevens(&sample, &spec, u)?;
        println!("u = {u:.1}: [{:.5}, {:.5}]", ci.lower, ci.upper);
    }
    let mp = intervals::mid_p(&sample, &spec)?;
    println!("mid-p:   [{:.5}, {:.5}]", mp.lower, mp.upper);

    println!("\ncoverage at n = 25:");
    for p in [0.05, 0.123, 0.3, 0.5] {
        println!(
            "  p = {p:<6} stevens {:.10}   mid-p {:.4}   clopper-pearson {:.4}",
            stevens_exact_coverage(25, p, &spec)?,
            coverage_probability(Method::MidP, 25, p, &spec)?,
            coverage_probability(Method::ClopperPearson, 25, p, &spec)?,
        );
    }
    Ok(())
}
