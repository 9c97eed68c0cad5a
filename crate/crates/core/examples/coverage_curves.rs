// Exact coverage of Wald, Agresti-Coull and Clopper-Pearson at n = 40,
// written as CSV and SVG.
//
// $ cargo run --example coverage_curves -- /tmp/coverage
// writes /tmp/coverage.csv and /tmp/coverage.svg
use std::path::PathBuf;

use binom_ci::cli::{render_curves, render_svg, write_atomic, PlotRequest};
use binom_ci::evaluate::{coverage_curve, Grid};
use binom_ci::intervals::{ConfidenceSpec, Method};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let stem = std::env::args().nth(1).unwrap_or_else(|| "coverage".into());
    let spec = ConfidenceSpec::new(0.05)?;
    let grid: Grid = "0.001:0.999:999".parse()?;
    let methods = [Method::Wald, Method::AgrestiCoull, Method::ClopperPearson];

    let series = methods
        .iter()
        .map(|&m| Ok((m, coverage_curve(m, 40, &spec, &grid)?)))
        .collect::<binom_ci::Result<Vec<_>>>()?;
    for (m, curve) in &series {
        let middle: Vec<f64> = curve.iter().filter(|e| (0.1..=0.9).contains(&e.p)).map(|e| e.value).collect();
        let min = curve.iter().map(|e| e.value).fold(f64::INFINITY, f64::min);
        println!("{:<16} mean on [0.1, 0.9] {:.4}   min {:.4}", m.name(), middle.iter().sum::<f64>() / middle.len() as f64, min);
    }

    let csv = PathBuf::from(format!("{stem}.csv"));
    let svg = PathBuf::from(format!("{stem}.svg"));
    write_atomic(&csv, render_curves("coverage", &series).as_bytes())?;
    let plot = PlotRequest {
        series: series.into_iter().map(|(m, c)| (m.name().to_string(), c)).collect(),
        y_range: Some((0.8, 1.0)),
        nominal_line: Some(spec.level()),
        output_path: svg.clone(),
    };
    write_atomic(&svg, render_svg(&plot)?.as_bytes())?;
    println!("wrote {} and {}", csv.display(), svg.display());
    Ok(())
}
