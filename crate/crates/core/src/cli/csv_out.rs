//! CSV dialect for evaluation curves: comma separated, `\n` line endings,
//! header `p,method,<metric>`, floats with 12 significant digits.

use csv::{ReaderBuilder, Terminator, WriterBuilder};

use crate::error::{Error, Result};
use crate::evaluate::EvalPoint;
use crate::intervals::Method;

const SIG_DIGITS: i32 = 12;

/// Renders `v` with 12 significant digits, trailing zeros dropped.
/// Plain decimal notation is used for magnitudes in `[1e-6, 1e15)`,
/// scientific notation otherwise.
pub fn format_float(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    if !(-6..15).contains(&exponent) {
        let s = format!("{:.*e}", (SIG_DIGITS - 1) as usize, v);
        let (mantissa, exp) = s.split_once('e').expect("scientific format has an exponent");
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (SIG_DIGITS - 1 - exponent).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// One parsed CSV data row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub method: Method,
    pub point: EvalPoint,
}

/// Renders curves, one block of rows per series in the given order.
pub fn render_curves(metric: &str, series: &[(Method, Vec<EvalPoint>)]) -> String {
    let mut out = WriterBuilder::new().terminator(Terminator::Any(b'\n')).from_writer(Vec::new());
    out.write_record(["p", "method", metric]).expect("writing to memory");
    for (method, points) in series {
        for pt in points {
            out.write_record([format_float(pt.p).as_str(), method.name(), format_float(pt.value).as_str()])
                .expect("writing to memory");
        }
    }
    String::from_utf8(out.into_inner().expect("flushing to memory")).expect("CSV output is ASCII")
}

/// Parses the output of [`render_curves`]; returns the metric column name
/// and the rows.
pub fn parse_curves(text: &str) -> Result<(String, Vec<CurveRow>)> {
    let bad = |msg: String| Error::Domain(format!("malformed curve CSV: {msg}"));
    let mut reader = ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    if headers.len() != 3 || &headers[0] != "p" || &headers[1] != "method" {
        return Err(bad(format!("unexpected header {headers:?}")));
    }
    let metric = headers[2].to_string();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        let p = record[0].parse().map_err(|_| bad(format!("bad p '{}'", &record[0])))?;
        let method = record[1].parse()?;
        let value = record[2].parse().map_err(|_| bad(format!("bad value '{}'", &record[2])))?;
        rows.push(CurveRow { method, point: EvalPoint { p, value } });
    }
    Ok((metric, rows))
}
