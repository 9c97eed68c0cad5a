// Splits coverage into a smoothed bias and the oscillation around it.
//
// $ cargo run --example bias_and_oscillation
use binom_ci::evaluate::{oscillation_amplitude, smoothed_bias, Grid, DEFAULT_GRID_DENSITY, DEFAULT_WINDOW};
use binom_ci::intervals::{ConfidenceSpec, Method};

fn main() -> binom_ci::Result<()> {
    let spec = ConfidenceSpec::new(0.05)?;
    let grid = Grid::new(0.1, 0.9, 161)?;
    let methods = [Method::Wald, Method::Wilson, Method::AgrestiCoull, Method::Jeffreys, Method::LikelihoodRatio];
    for n in [40, 120] {
        println!("n = {n}");
        println!("  {:<18}{:>10}{:>10}{:>10}{:>12}", "method", "bias .15", "bias .3", "bias .5", "amplitude");
        for m in methods {
            let b = |p| smoothed_bias(m, n, &spec, p, DEFAULT_WINDOW, DEFAULT_GRID_DENSITY);
            let amp = oscillation_amplitude(m, n, &spec, &grid, DEFAULT_WINDOW)?;
            println!("  {:<18}{:>10.4}{:>10.4}{:>10.4}{:>12.4}", m.name(), b(0.15)?, b(0.3)?, b(0.5)?, amp);
        }
    }
    Ok(())
}
