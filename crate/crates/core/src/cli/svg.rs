//! Deterministic SVG rendering of fixed-point reports: markers colored by
//! classification, a ring for weakly repelling points, composition arrows
//! for h-fixed points, and per-point multiplier labels.

use super::document::{AnalysisDocument, HFixedPointJson};
use num_complex::Complex64;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlotError {
    #[error("report contains no finite points to plot")]
    EmptyReport,
}

#[derive(Debug, Clone, Copy)]
pub struct PlotOptions {
    pub width: u32,
    pub height: u32,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            width: 800,
            height: 800,
        }
    }
}

fn class_fill(class: &str) -> &'static str {
    match class {
        "super-attracting" => "#1f77b4",
        "attracting" => "#2ca02c",
        "indifferent" => "#ff7f0e",
        "repelling" => "#d62728",
        _ => "#7f7f7f",
    }
}

/// Fixed-precision coordinate formatting keeps the output byte-stable.
fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    // "-0.0000" and "0.0000" must render identically
    if s == "-0.0000" {
        "0.0000".to_owned()
    } else {
        s
    }
}

fn label_num(x: f64) -> String {
    let rounded = (x * 1e4).round() / 1e4;
    let mut s = format!("{rounded}");
    if s == "-0" {
        s = "0".to_owned();
    }
    s
}

fn label_complex(z: Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", label_num(z.re), label_num(-z.im))
    } else {
        format!("{}+{}i", label_num(z.re), label_num(z.im))
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Frame {
    /// Pixel position of a complex point (y grows downward in SVG).
    fn pt(&self, z: Complex64) -> (f64, f64) {
        (
            (z.re - self.min_x) * self.scale,
            (self.max_y - z.im) * self.scale,
        )
    }
}

/// Render the finite content of a document to SVG bytes. Axes span the
/// bounding box of finite points padded 20%; a single point gets a 1-unit
/// viewport.
pub fn render_plot(doc: &AnalysisDocument, options: &PlotOptions) -> Result<Vec<u8>, PlotError> {
    let mut anchors: Vec<Complex64> = Vec::new();
    for fp in &doc.fixed_points {
        if let Some(z) = fp.location.finite() {
            anchors.push(z);
        }
    }
    for hp in &doc.h_fixed_points {
        if let Some(z) = hp.zeta.finite() {
            anchors.push(z);
            if let Some(mu) = hp.mu.finite() {
                anchors.push(mu);
            }
            if let Some(omega) = hp.omega.finite() {
                anchors.push(omega.conj());
            }
        }
    }
    if anchors.is_empty() {
        return Err(PlotError::EmptyReport);
    }

    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for z in &anchors {
        min_x = min_x.min(z.re);
        max_x = max_x.max(z.re);
        min_y = min_y.min(z.im);
        max_y = max_y.max(z.im);
    }
    let span = (max_x - min_x).max(max_y - min_y);
    let (min_x, max_x, min_y, max_y) = if span <= 1e-12 {
        // degenerate viewport rule: one unit around the single point
        let cx = (min_x + max_x) * 0.5;
        let cy = (min_y + max_y) * 0.5;
        (cx - 0.5, cx + 0.5, cy - 0.5, cy + 0.5)
    } else {
        // square the box, then pad 20%
        let cx = (min_x + max_x) * 0.5;
        let cy = (min_y + max_y) * 0.5;
        let half = span * 0.5;
        (cx - half, cx + half, cy - half, cy + half)
    };
    let pad = (max_x - min_x) * 0.2;
    let (min_x, max_x, min_y, max_y) = (min_x - pad, max_x + pad, min_y - pad, max_y + pad);

    let width = options.width as f64;
    let height = options.height as f64;
    let scale = width / (max_x - min_x);
    let frame = Frame { min_x, max_y, scale };

    let marker_r = 6.0;
    let font = 13.0;

    let mut svg = String::new();
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        options.width, options.height, num(width), num(height)
    );
    svg.push_str("<defs>\n<marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\n<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#555555\"/>\n</marker>\n</defs>\n");
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");

    // axes through the origin when visible
    if min_x <= 0.0 && 0.0 <= max_x {
        let (x, _) = frame.pt(Complex64::new(0.0, 0.0));
        let _ = write!(
            svg,
            "<line id=\"axis-y\" x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"{}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
            num(x), num(x), num(height)
        );
    }
    if min_y <= 0.0 && 0.0 <= max_y {
        let (_, y) = frame.pt(Complex64::new(0.0, 0.0));
        let _ = write!(
            svg,
            "<line id=\"axis-x\" x1=\"0\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
            num(y), num(width), num(y)
        );
    }

    for (i, fp) in doc.fixed_points.iter().enumerate() {
        let Some(z) = fp.location.finite() else {
            continue;
        };
        let (x, y) = frame.pt(z);
        let fill = class_fill(&fp.class);
        let _ = write!(
            svg,
            "<circle id=\"fp-{i}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n",
            num(x),
            num(y),
            num(marker_r),
            fill
        );
        if fp.weakly_repelling {
            let _ = write!(
                svg,
                "<circle id=\"fp-{i}-ring\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                num(x),
                num(y),
                num(marker_r * 1.8),
                fill
            );
        }
        let _ = write!(
            svg,
            "<text id=\"fp-{i}-label\" x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"{}\" fill=\"#333333\">{} m={}</text>\n",
            num(x + marker_r * 2.2),
            num(y - marker_r),
            num(font),
            xml_escape(&format!("lambda={}", label_complex(fp.multiplier.into()))),
            fp.multiplicity
        );
    }

    for (i, hp) in doc.h_fixed_points.iter().enumerate() {
        let Some(zeta) = hp.zeta.finite() else {
            continue;
        };
        let (x, y) = frame.pt(zeta);
        draw_component_arrows(&mut svg, &frame, i, hp, zeta);
        let _ = write!(
            svg,
            "<rect id=\"hfp-{i}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#9467bd\" transform=\"rotate(45 {} {})\"/>\n",
            num(x - marker_r),
            num(y - marker_r),
            num(marker_r * 2.0),
            num(marker_r * 2.0),
            num(x),
            num(y)
        );
        let _ = write!(
            svg,
            "<text id=\"hfp-{i}-label\" x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"{}\" fill=\"#333333\">{}</text>\n",
            num(x + marker_r * 2.2),
            num(y + marker_r * 2.2),
            num(font),
            xml_escape(&format!(
                "lambda={}, theta={}",
                label_complex(hp.lambda.into()),
                label_complex(hp.theta.into())
            ))
        );
    }

    // legend
    let legend = [
        ("super-attracting", class_fill("super-attracting")),
        ("attracting", class_fill("attracting")),
        ("indifferent", class_fill("indifferent")),
        ("repelling", class_fill("repelling")),
    ];
    for (row, (name, color)) in legend.iter().enumerate() {
        let y = 18.0 + row as f64 * 18.0;
        let _ = write!(
            svg,
            "<circle id=\"legend-{row}-mark\" cx=\"14\" cy=\"{}\" r=\"5\" fill=\"{}\"/>\n",
            num(y),
            color
        );
        let _ = write!(
            svg,
            "<text id=\"legend-{row}-text\" x=\"26\" y=\"{}\" font-family=\"monospace\" font-size=\"{}\" fill=\"#333333\">{}</text>\n",
            num(y + 4.0),
            num(font),
            name
        );
    }
    let _ = write!(
        svg,
        "<text id=\"legend-ring\" x=\"26\" y=\"{}\" font-family=\"monospace\" font-size=\"{}\" fill=\"#333333\">ring = weakly repelling</text>\n",
        num(18.0 + legend.len() as f64 * 18.0 + 4.0),
        num(font)
    );

    svg.push_str("</svg>\n");
    Ok(svg.into_bytes())
}

/// Arrows mu -> h(mu) = mu and conj(omega) -> zeta showing how the point is
/// assembled; for induced points the map arrows collapse, so the composition
/// arrows from the component points to zeta carry the picture.
fn draw_component_arrows(
    svg: &mut String,
    frame: &Frame,
    i: usize,
    hp: &HFixedPointJson,
    zeta: Complex64,
) {
    let (zx, zy) = frame.pt(zeta);
    if let Some(mu) = hp.mu.finite() {
        let (mx, my) = frame.pt(mu);
        if (mx - zx).abs() > 1e-9 || (my - zy).abs() > 1e-9 {
            let _ = write!(
                svg,
                "<line id=\"hfp-{i}-mu-arrow\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#555555\" stroke-width=\"1\" marker-end=\"url(#arrow)\"/>\n",
                num(mx), num(my), num(zx), num(zy)
            );
        }
        let _ = write!(
            svg,
            "<circle id=\"hfp-{i}-mu\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#555555\"/>\n",
            num(mx),
            num(my)
        );
    }
    if let Some(omega) = hp.omega.finite() {
        let (ox, oy) = frame.pt(omega.conj());
        if (ox - zx).abs() > 1e-9 || (oy - zy).abs() > 1e-9 {
            let _ = write!(
                svg,
                "<line id=\"hfp-{i}-omega-arrow\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\" marker-end=\"url(#arrow)\"/>\n",
                num(ox), num(oy), num(zx), num(zy)
            );
        }
        let _ = write!(
            svg,
            "<circle id=\"hfp-{i}-omega\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#999999\"/>\n",
            num(ox),
            num(oy)
        );
    }
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
