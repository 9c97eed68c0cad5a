//! Command-line front end: compute, coverage, length, bias and compare.
//!
//! The binary is a thin wrapper over [`run`]; everything here writes to a
//! caller-supplied stream so it can be driven from tests.

mod csv_out;
mod svg;

pub use csv_out::{format_float, parse_curves, render_curves, CurveRow};
pub use svg::{render_svg, PlotRequest};

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::error::Error;
use crate::evaluate::{self, EvalPoint, Grid, DEFAULT_GRID_DENSITY, DEFAULT_QUAD_POINTS, DEFAULT_WINDOW};
use crate::intervals::{self, ConfidenceSpec, Interval, Method, SampleSummary};

/// Failure of a CLI command, mapped onto the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Usage(msg) => CliError::Usage(msg),
            other => CliError::Compute(other),
        }
    }
}

fn stdout_err(e: io::Error) -> CliError {
    CliError::Io { path: PathBuf::from("<stdout>"), source: e }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "binom-ci", version, about = "Binomial proportion confidence intervals and their exact coverage")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one interval.
    Compute(ComputeArgs),
    /// Exact coverage probability curves.
    Coverage(CurveArgs),
    /// Expected length curves.
    Length(LengthArgs),
    /// Smoothed coverage bias curve.
    Bias(BiasArgs),
    /// All eight intervals side by side for one sample.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Args)]
pub struct LevelArgs {
    /// Two-sided miscoverage.
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Critical value; defaults to the normal quantile at 1 - alpha/2.
    #[arg(long)]
    pub kappa: Option<f64>,
}

impl LevelArgs {
    fn spec(&self) -> Result<ConfidenceSpec, Error> {
        match self.kappa {
            Some(k) => ConfidenceSpec::with_kappa(self.alpha, k),
            None => ConfidenceSpec::new(self.alpha),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub method: Method,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub x: u64,
    #[command(flatten)]
    pub level: LevelArgs,
    /// Randomization value for the stevens method.
    #[arg(long)]
    pub u: Option<f64>,
    /// Seed for drawing u (stevens only).
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    /// Comma-separated method names, or `all`.
    #[arg(long, value_parser = parse_methods)]
    pub methods: MethodList,
    #[arg(long)]
    pub n: u64,
    #[command(flatten)]
    pub level: LevelArgs,
    /// start:stop:count, endpoints included.
    #[arg(long)]
    pub grid: Grid,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Optional SVG chart destination.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct LengthArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Gauss–Legendre nodes for integrating the stevens length over u.
    #[arg(long, default_value_t = DEFAULT_QUAD_POINTS)]
    pub quad_points: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BiasArgs {
    #[arg(long)]
    pub method: Method,
    #[arg(long)]
    pub n: u64,
    #[command(flatten)]
    pub level: LevelArgs,
    #[arg(long)]
    pub grid: Grid,
    /// Width of the moving-average window in p.
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    pub window: f64,
    /// Points averaged inside each window.
    #[arg(long, default_value_t = DEFAULT_GRID_DENSITY)]
    pub grid_density: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub x: u64,
    #[command(flatten)]
    pub level: LevelArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

/// Parsed `--methods` value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodList(pub Vec<Method>);

fn parse_methods(s: &str) -> Result<MethodList, Error> {
    Method::parse_list(s).map(MethodList)
}

/// JSON/CSV view of an [`Interval`].
#[derive(Debug, Clone, Serialize)]
pub struct IntervalRecord {
    pub lower: f64,
    pub upper: f64,
    pub method: &'static str,
    pub n: u64,
    pub x: u64,
    pub alpha: f64,
    pub kappa: f64,
    pub u: Option<f64>,
}

impl From<&Interval> for IntervalRecord {
    fn from(ci: &Interval) -> Self {
        Self {
            lower: ci.lower,
            upper: ci.upper,
            method: ci.method.name(),
            n: ci.sample.n(),
            x: ci.sample.x(),
            alpha: ci.spec.alpha(),
            kappa: ci.spec.kappa(),
            u: ci.aux_u,
        }
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory followed by a rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let io_err = |source| CliError::Io { path: path.to_path_buf(), source };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

/// Runs a parsed command, writing human-facing output to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Compute(args) => cmd_compute(&args, out),
        Command::Coverage(args) => cmd_coverage(&args, out),
        Command::Length(args) => cmd_length(&args, out),
        Command::Bias(args) => cmd_bias(&args, out),
        Command::Compare(args) => cmd_compare(&args, out),
    }
}

pub fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = args.level.spec()?;
    let sample = SampleSummary::new(args.n, args.x)?;
    let ci = intervals::compute(args.method, &sample, &spec, args.u, args.seed)?;
    let record = IntervalRecord::from(&ci);
    let text = match args.format {
        OutputFormat::Json => format!("{}\n", serde_json::to_string(&record).expect("record serializes")),
        OutputFormat::Csv => format!(
            "method,n,x,alpha,kappa,u,lower,upper\n{},{},{},{},{},{},{},{}\n",
            record.method,
            record.n,
            record.x,
            format_float(record.alpha),
            format_float(record.kappa),
            record.u.map(format_float).unwrap_or_default(),
            format_float(record.lower),
            format_float(record.upper)
        ),
        OutputFormat::Text => {
            let mut s = format!(
                "method: {}\nn: {}\nx: {}\nalpha: {}\nkappa: {}\n",
                record.method,
                record.n,
                record.x,
                format_float(record.alpha),
                format_float(record.kappa)
            );
            if let Some(u) = record.u {
                s.push_str(&format!("u: {}\n", format_float(u)));
            }
            s.push_str(&format!("lower: {}\nupper: {}\n", format_float(record.lower), format_float(record.upper)));
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(stdout_err)
}

fn emit_curves(
    metric: &str,
    series: &[(Method, Vec<EvalPoint>)],
    csv_path: Option<&Path>,
    svg: Option<(&Path, Option<f64>)>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let text = render_curves(metric, series);
    let rows: usize = series.iter().map(|(_, pts)| pts.len()).sum();
    match csv_path {
        Some(path) => {
            write_atomic(path, text.as_bytes())?;
            writeln!(out, "wrote {rows} rows to {}", path.display()).map_err(stdout_err)?;
        }
        None => out.write_all(text.as_bytes()).map_err(stdout_err)?,
    }
    if let Some((path, nominal_line)) = svg {
        let req = PlotRequest {
            series: series.iter().map(|(m, pts)| (m.name().to_string(), pts.clone())).collect(),
            y_range: None,
            nominal_line,
            output_path: path.to_path_buf(),
        };
        let doc = render_svg(&req)?;
        write_atomic(&req.output_path, doc.as_bytes())?;
        if csv_path.is_some() {
            writeln!(out, "wrote chart to {}", path.display()).map_err(stdout_err)?;
        }
    }
    Ok(())
}

pub fn cmd_coverage(args: &CurveArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = args.level.spec()?;
    let series = args
        .methods
        .0
        .iter()
        .map(|&m| Ok((m, evaluate::coverage_curve(m, args.n, &spec, &args.grid)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    emit_curves(
        "coverage",
        &series,
        args.out.as_deref(),
        args.svg.as_deref().map(|p| (p, Some(spec.level()))),
        out,
    )
}

pub fn cmd_length(args: &LengthArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let c = &args.curve;
    let spec = c.level.spec()?;
    let series = c
        .methods
        .0
        .iter()
        .map(|&m| Ok((m, evaluate::length_curve(m, c.n, &spec, &c.grid, args.quad_points)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    emit_curves("expected_length", &series, c.out.as_deref(), c.svg.as_deref().map(|p| (p, None)), out)
}

pub fn cmd_bias(args: &BiasArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = args.level.spec()?;
    let curve = evaluate::bias_curve(args.method, args.n, &spec, &args.grid, args.window, args.grid_density)?;
    emit_curves("smoothed_bias", &[(args.method, curve)], args.out.as_deref(), None, out)
}

/// All eight intervals for one sample; Stevens is taken at `u = 1/2`.
pub fn compare_intervals(sample: &SampleSummary, spec: &ConfidenceSpec) -> Result<Vec<Interval>, Error> {
    Method::ALL
        .iter()
        .map(|&m| match m {
            Method::StevensXU => intervals::stevens(sample, spec, 0.5),
            m => intervals::deterministic(m, sample, spec),
        })
        .collect()
}

#[derive(Serialize)]
struct CompareRecord {
    #[serde(flatten)]
    interval: IntervalRecord,
    width: f64,
}

pub fn cmd_compare(args: &CompareArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = args.level.spec()?;
    let sample = SampleSummary::new(args.n, args.x)?;
    let rows = compare_intervals(&sample, &spec)?;
    let text = match args.format {
        OutputFormat::Json => {
            let records: Vec<_> = rows
                .iter()
                .map(|ci| CompareRecord { interval: IntervalRecord::from(ci), width: ci.width() })
                .collect();
            format!("{}\n", serde_json::to_string(&records).expect("records serialize"))
        }
        OutputFormat::Csv => {
            let mut s = String::from("method,lower,upper,width\n");
            for ci in &rows {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    ci.method,
                    format_float(ci.lower),
                    format_float(ci.upper),
                    format_float(ci.width())
                ));
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!(
                "n = {}, x = {}, alpha = {}, kappa = {}\n{:<18} {:>16} {:>16} {:>16}\n",
                sample.n(),
                sample.x(),
                format_float(spec.alpha()),
                format_float(spec.kappa()),
                "method",
                "lower",
                "upper",
                "width"
            );
            for ci in &rows {
                let name = if ci.method.is_randomized() { format!("{}*", ci.method) } else { ci.method.to_string() };
                s.push_str(&format!(
                    "{:<18} {:>16} {:>16} {:>16}\n",
                    name,
                    format_float(ci.lower),
                    format_float(ci.upper),
                    format_float(ci.width())
                ));
            }
            s.push_str("* stevens shown at u = 0.5, where it coincides with mid_p\n");
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(stdout_err)
}
