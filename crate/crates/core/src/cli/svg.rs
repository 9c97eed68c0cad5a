//! Minimal self-contained SVG line charts.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use crate::error::{domain, Result};
use crate::evaluate::EvalPoint;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 50.0;
const PALETTE: [&str; 8] = [
    "#d62728", "#2ca02c", "#e377c2", "#8c564b", "#17becf", "#7f7f7f", "#1f77b4", "#ff7f0e",
];

/// A chart to render: labelled series, optional y range and an optional
/// horizontal reference line (typically the nominal level).
#[derive(Debug, Clone)]
pub struct PlotRequest {
    pub series: Vec<(String, Vec<EvalPoint>)>,
    pub y_range: Option<(f64, f64)>,
    pub nominal_line: Option<f64>,
    pub output_path: PathBuf,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
        .replace('\'', "&apos;")
}

fn validate(req: &PlotRequest) -> Result<()> {
    if req.series.is_empty() {
        return domain("plot needs at least one series");
    }
    let mut seen = HashSet::new();
    for (label, points) in &req.series {
        if points.is_empty() {
            return domain(format!("series '{label}' is empty"));
        }
        if !seen.insert(label.as_str()) {
            return domain(format!("duplicate series label '{label}'"));
        }
    }
    Ok(())
}

fn extent(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

fn padded((lo, hi): (f64, f64)) -> (f64, f64) {
    if hi > lo {
        let pad = 0.05 * (hi - lo);
        (lo - pad, hi + pad)
    } else {
        (lo - 0.5, hi + 0.5)
    }
}

/// Renders the chart as an SVG document.
pub fn render_svg(req: &PlotRequest) -> Result<String> {
    validate(req)?;
    let all = || req.series.iter().flat_map(|(_, pts)| pts.iter());
    let (x_lo, x_hi) = padded(extent(all().map(|pt| pt.p)));
    let (y_lo, y_hi) = match req.y_range {
        Some(r) if r.1 > r.0 => r,
        Some(r) => return domain(format!("invalid y range {r:?}")),
        None => padded(extent(all().map(|pt| pt.value).chain(req.nominal_line))),
    };
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |y: f64| MARGIN_TOP + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h;

    let mut svg = String::new();
    let w = &mut svg;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(w, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#).unwrap();
    writeln!(
        w,
        r#"<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    )
    .unwrap();

    // ticks
    for i in 0..=5 {
        let t = i as f64 / 5.0;
        let xv = x_lo + t * (x_hi - x_lo);
        let yv = y_lo + t * (y_hi - y_lo);
        let (px, py) = (sx(xv), sy(yv));
        let base = MARGIN_TOP + plot_h;
        writeln!(w, r#"<line x1="{px:.2}" y1="{base}" x2="{px:.2}" y2="{:.2}" stroke="black"/>"#, base + 5.0).unwrap();
        writeln!(
            w,
            r#"<text x="{px:.2}" y="{:.2}" font-size="11" text-anchor="middle">{xv:.3}</text>"#,
            base + 18.0
        )
        .unwrap();
        writeln!(
            w,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{MARGIN_LEFT}" y2="{py:.2}" stroke="black"/>"#,
            MARGIN_LEFT - 5.0
        )
        .unwrap();
        writeln!(
            w,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">{yv:.4}</text>"#,
            MARGIN_LEFT - 8.0,
            py + 4.0
        )
        .unwrap();
    }
    writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" font-size="13" text-anchor="middle">p</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    )
    .unwrap();

    if let Some(level) = req.nominal_line {
        let py = sy(level);
        writeln!(
            w,
            r#"<line class="nominal" x1="{MARGIN_LEFT}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="black" stroke-dasharray="6,4"/>"#,
            MARGIN_LEFT + plot_w
        )
        .unwrap();
    }

    for (i, (label, points)) in req.series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let coords: Vec<String> = points.iter().map(|pt| format!("{:.2},{:.2}", sx(pt.p), sy(pt.value))).collect();
        writeln!(
            w,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{}"><title>{}</title></polyline>"#,
            coords.join(" "),
            escape(label)
        )
        .unwrap();
        let ly = MARGIN_TOP + 15.0 + 18.0 * i as f64;
        let lx = MARGIN_LEFT + plot_w + 15.0;
        writeln!(w, r#"<rect x="{lx}" y="{:.2}" width="14" height="4" fill="{color}"/>"#, ly - 4.0).unwrap();
        writeln!(w, r#"<text x="{:.2}" y="{ly:.2}" font-size="12">{}</text>"#, lx + 20.0, escape(label)).unwrap();
    }
    writeln!(w, "</svg>").unwrap();
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts() -> Vec<EvalPoint> {
        vec![EvalPoint { p: 0.1, value: 0.9 }, EvalPoint { p: 0.2, value: 0.95 }]
    }

    #[test]
    fn rejects_bad_requests() {
        let mut req = PlotRequest { series: vec![], y_range: None, nominal_line: None, output_path: "x.svg".into() };
        assert!(render_svg(&req).is_err());
        req.series = vec![("a".into(), pts()), ("a".into(), pts())];
        assert!(render_svg(&req).is_err());
        req.series = vec![("a".into(), vec![])];
        assert!(render_svg(&req).is_err());
    }

    #[test]
    fn escapes_labels() {
        let req = PlotRequest {
            series: vec![("a<b & c".into(), pts())],
            y_range: Some((0.8, 1.0)),
            nominal_line: Some(0.95),
            output_path: "x.svg".into(),
        };
        let svg = render_svg(&req).unwrap();
        assert!(svg.contains("a&lt;b &amp; c"));
        assert_eq!(svg.matches("<polyline").count(), 1);
    }
}
