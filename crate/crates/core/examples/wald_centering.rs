// Mean of the Wald statistic against its first-order approximation.
//
// $ cargo run --example wald_centering
use binom_ci::evaluate::wald_moment_diagnostic;

fn main() -> binom_ci::Result<()> {
    println!("{:>6}{:>6}{:>14}{:>14}{:>12}", "n", "p", "exact", "approx", "gap");
    for p in [0.1, 0.3, 0.5] {
        for n in [20, 40, 100, 400, 1000] {
            let d = wald_moment_diagnostic(n, p)?;
            println!(
                "{n:>6}{p:>6}{:>14.6}{:>14.6}{:>12.2e}",
                d.exact_conditional,
                d.approx,
                (d.exact_conditional - d.approx).abs()
            );
        }
    }
    Ok(())
}
