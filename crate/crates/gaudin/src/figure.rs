//! Figure emission: SVG for viewing, CSV and JSON for machine consumption.
//! The coordinate frame puts `J` horizontal and `H` vertical; elliptic
//! curves are drawn solid, hyperbolic ones dashed, cusps as star markers,
//! and rank-0 values as dots colored by their class.

use crate::linear::EigenClass;
use crate::momentum::{BifurcationEvent, CriticalKind, OccupancyBitmap, TracedCurves};
use crate::GaudinError;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

/// Output formats of `emit_figure`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureFormat {
    Svg,
    Csv,
    Json,
}

impl FigureFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "svg" => Some(Self::Svg),
            "csv" => Some(Self::Csv),
            "json" => Some(Self::Json),
            _ => None,
        }
    }

    pub fn extension(&self) -> &'static str {
        match self {
            Self::Svg => "svg",
            Self::Csv => "csv",
            Self::Json => "json",
        }
    }
}

/// Everything one panel shows.
#[derive(Clone, Debug)]
pub struct FigureData {
    pub occupancy: Option<OccupancyBitmap>,
    pub curves: TracedCurves,
    pub events: Vec<BifurcationEvent>,
    pub title: String,
}

/// Formats a float with 17 significant digits, the fixed width the
/// determinism checks compare byte-for-byte.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn class_color(class: EigenClass) -> &'static str {
    match class {
        EigenClass::EllipticElliptic => "#1a7f37",
        EigenClass::FocusFocus => "#c01c28",
        EigenClass::EllipticHyperbolic => "#b58900",
        EigenClass::HyperbolicHyperbolic => "#6f42c1",
        EigenClass::DegenerateCollision => "#0550ae",
    }
}

struct Frame {
    j_min: f64,
    j_max: f64,
    h_min: f64,
    h_max: f64,
    width: f64,
    height: f64,
    margin: f64,
}

impl Frame {
    fn x(&self, j: f64) -> f64 {
        self.margin + (j - self.j_min) / (self.j_max - self.j_min) * self.width
    }
    /// SVG y grows downward; `H` grows upward.
    fn y(&self, h: f64) -> f64 {
        self.margin + (self.h_max - h) / (self.h_max - self.h_min) * self.height
    }
}

fn figure_frame(data: &FigureData) -> Frame {
    let mut j_min = f64::INFINITY;
    let mut j_max = f64::NEG_INFINITY;
    let mut h_min = f64::INFINITY;
    let mut h_max = f64::NEG_INFINITY;
    if let Some(b) = &data.occupancy {
        j_min = j_min.min(b.j_min);
        j_max = j_max.max(b.j_max);
        h_min = h_min.min(b.h_min);
        h_max = h_max.max(b.h_max);
    }
    for seg in &data.curves.segments {
        for &(j, _, h) in &seg.points {
            j_min = j_min.min(j);
            j_max = j_max.max(j);
            h_min = h_min.min(h);
            h_max = h_max.max(h);
        }
    }
    for m in &data.curves.rank0 {
        j_min = j_min.min(m.j);
        j_max = j_max.max(m.j);
        h_min = h_min.min(m.h);
        h_max = h_max.max(m.h);
    }
    if !j_min.is_finite() {
        (j_min, j_max, h_min, h_max) = (-1.0, 1.0, -1.0, 1.0);
    }
    if j_max - j_min < 1e-9 {
        j_max = j_min + 1.0;
    }
    if h_max - h_min < 1e-9 {
        h_max = h_min + 1.0;
    }
    let pad_j = 0.04 * (j_max - j_min);
    let pad_h = 0.04 * (h_max - h_min);
    Frame {
        j_min: j_min - pad_j,
        j_max: j_max + pad_j,
        h_min: h_min - pad_h,
        h_max: h_max + pad_h,
        width: 640.0,
        height: 480.0,
        margin: 48.0,
    }
}

fn star_path(x: f64, y: f64, r: f64) -> String {
    let mut d = String::new();
    for i in 0..10 {
        let angle = std::f64::consts::PI * (0.5 + i as f64 / 5.0);
        let rad = if i % 2 == 0 { r } else { 0.4 * r };
        let (px, py) = (x + rad * angle.cos(), y - rad * angle.sin());
        let _ = write!(d, "{}{:.2},{:.2} ", if i == 0 { "M" } else { "L" }, px, py);
    }
    d.push('Z');
    d
}

/// Renders a panel as an SVG document (deterministic byte-for-byte for
/// identical data, apart from nothing: no timestamps are embedded).
pub fn render_svg(data: &FigureData) -> String {
    let f = figure_frame(data);
    let total_w = f.width + 2.0 * f.margin;
    let total_h = f.height + 2.0 * f.margin;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" viewBox="0 0 {total_w} {total_h}">"#
    );
    let _ = writeln!(s, r#"<rect width="{total_w}" height="{total_h}" fill="white"/>"#);
    let _ = writeln!(s, r#"<title>{}</title>"#, data.title);

    if let Some(bmp) = &data.occupancy {
        // draw the occupancy as row-run rectangles to keep files small
        let cw = f.width / bmp.nx as f64 * (bmp.j_max - bmp.j_min) / (f.j_max - f.j_min);
        let ch = f.height / bmp.ny as f64 * (bmp.h_max - bmp.h_min) / (f.h_max - f.h_min);
        let _ = writeln!(s, r##"<g fill="#d7e3f4" stroke="none">"##);
        for iy in 0..bmp.ny {
            let mut ix = 0;
            while ix < bmp.nx {
                if bmp.occupied(ix, iy) {
                    let start = ix;
                    while ix < bmp.nx && bmp.occupied(ix, iy) {
                        ix += 1;
                    }
                    let j0 = bmp.j_min + (bmp.j_max - bmp.j_min) * start as f64 / bmp.nx as f64;
                    let h1 = bmp.h_min + (bmp.h_max - bmp.h_min) * (iy + 1) as f64 / bmp.ny as f64;
                    let _ = writeln!(
                        s,
                        r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"/>"#,
                        f.x(j0),
                        f.y(h1),
                        cw * (ix - start) as f64,
                        ch
                    );
                } else {
                    ix += 1;
                }
            }
        }
        let _ = writeln!(s, "</g>");
        // double-covered cells darker
        let _ = writeln!(s, r##"<g fill="#9db8dd" stroke="none">"##);
        for iy in 0..bmp.ny {
            let mut ix = 0;
            while ix < bmp.nx {
                if bmp.cells[bmp.index(ix, iy)] & 2 != 0 {
                    let start = ix;
                    while ix < bmp.nx && bmp.cells[bmp.index(ix, iy)] & 2 != 0 {
                        ix += 1;
                    }
                    let j0 = bmp.j_min + (bmp.j_max - bmp.j_min) * start as f64 / bmp.nx as f64;
                    let h1 = bmp.h_min + (bmp.h_max - bmp.h_min) * (iy + 1) as f64 / bmp.ny as f64;
                    let _ = writeln!(
                        s,
                        r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"/>"#,
                        f.x(j0),
                        f.y(h1),
                        cw * (ix - start) as f64,
                        ch
                    );
                } else {
                    ix += 1;
                }
            }
        }
        let _ = writeln!(s, "</g>");
    }

    for seg in &data.curves.segments {
        if seg.points.len() < 2 {
            continue;
        }
        let (color, dash) = match seg.kind {
            CriticalKind::HyperbolicRegular => ("#444444", r#" stroke-dasharray="6,4""#),
            _ => ("#111111", ""),
        };
        let mut d = String::new();
        for (i, &(j, _, h)) in seg.points.iter().enumerate() {
            let _ = write!(d, "{}{:.2},{:.2} ", if i == 0 { "M" } else { "L" }, f.x(j), f.y(h));
        }
        let _ = writeln!(
            s,
            r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="1.6"{dash}/>"#
        );
    }

    for c in &data.curves.cusps {
        let _ = writeln!(
            s,
            r##"<path d="{}" fill="#0550ae" stroke="none"/>"##,
            star_path(f.x(c.j), f.y(c.h), 7.0)
        );
    }

    for m in &data.curves.rank0 {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{}"><title>{} ({})</title></circle>"#,
            f.x(m.j),
            f.y(m.h),
            class_color(m.class),
            m.fixed_point.name(),
            m.class.name()
        );
    }

    for e in &data.events {
        let _ = writeln!(
            s,
            r##"<circle cx="{:.2}" cy="{:.2}" r="5" fill="none" stroke="#c01c28" stroke-width="1.5"><title>{:?} at t4={}</title></circle>"##,
            f.x(e.j),
            f.y(e.h),
            e.kind,
            fmt_f64(e.t4)
        );
    }

    // axes
    let x0 = f.x(f.j_min);
    let x1 = f.x(f.j_max);
    let y0 = f.y(f.h_min);
    let y1 = f.y(f.h_max);
    let _ = writeln!(
        s,
        r##"<rect x="{x0:.2}" y="{y1:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#222222" stroke-width="1"/>"##,
        x1 - x0,
        y0 - y1
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="14" text-anchor="middle">J</text>"#,
        (x0 + x1) / 2.0,
        y0 + 34.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="14" text-anchor="middle" transform="rotate(-90 {:.2} {:.2})">H</text>"#,
        x0 - 30.0,
        (y0 + y1) / 2.0,
        x0 - 30.0,
        (y0 + y1) / 2.0
    );
    for (v, label_axis) in [(f.j_min, true), (f.j_max, true), (f.h_min, false), (f.h_max, false)] {
        if label_axis {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle">{v:.3}</text>"#,
                f.x(v),
                y0 + 16.0
            );
        } else {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="end">{v:.3}</text>"#,
                x0 - 6.0,
                f.y(v) + 4.0
            );
        }
    }
    let _ = writeln!(s, "</svg>");
    s
}

/// CSV dump: one row per polyline point plus marker rows.
pub fn render_csv(data: &FigureData) -> String {
    let mut s = String::from("record,segment,kind,branch,j,k,h\n");
    for (si, seg) in data.curves.segments.iter().enumerate() {
        let kind = match seg.kind {
            CriticalKind::EllipticRegular => "elliptic-regular",
            CriticalKind::HyperbolicRegular => "hyperbolic-regular",
            CriticalKind::Cusp => "cusp",
            CriticalKind::RankZero => "rank-zero",
        };
        for &(j, k, h) in &seg.points {
            let _ = writeln!(
                s,
                "curve,{si},{kind},{},{},{},{}",
                seg.branch,
                fmt_f64(j),
                fmt_f64(k),
                fmt_f64(h)
            );
        }
    }
    for c in &data.curves.cusps {
        let _ = writeln!(
            s,
            "cusp,,cusp,{},{},{},{}",
            c.branch,
            fmt_f64(c.j),
            fmt_f64(c.k),
            fmt_f64(c.h)
        );
    }
    for m in &data.curves.rank0 {
        let _ = writeln!(
            s,
            "rank0,,{},,{},,{}",
            m.class.name(),
            fmt_f64(m.j),
            fmt_f64(m.h)
        );
    }
    for e in &data.events {
        let _ = writeln!(
            s,
            "event,,{:?},,{},{},{}",
            e.kind,
            fmt_f64(e.j),
            fmt_f64(e.k),
            fmt_f64(e.h)
        );
    }
    s
}

/// JSON dump of curves, markers, and events (floats with 17 significant
/// digits so repeated runs are byte-identical).
pub fn render_json(data: &FigureData) -> Result<String, GaudinError> {
    let value = serde_json::json!({
        "title": data.title,
        "curves": data.curves,
        "events": data.events,
        "occupancy_summary": data.occupancy.as_ref().map(|b| serde_json::json!({
            "nx": b.nx,
            "ny": b.ny,
            "j_min": b.j_min,
            "j_max": b.j_max,
            "h_min": b.h_min,
            "h_max": b.h_max,
            "occupied": b.occupied_count(),
            "double_cover": b.double_cover_count(),
        })),
    });
    crate::figure::to_json_string(&value)
}

/// Serializes JSON with every float printed at 17 significant digits.
pub fn to_json_string<T: serde::Serialize>(value: &T) -> Result<String, GaudinError> {
    let mut out = Vec::new();
    let fmt = SigDigitFormatter;
    let mut ser = serde_json::Serializer::with_formatter(&mut out, fmt);
    value.serialize(&mut ser)?;
    let mut s = String::from_utf8(out).expect("json is utf8");
    s.push('\n');
    Ok(s)
}

#[derive(Clone, Copy)]
struct SigDigitFormatter;

impl serde_json::ser::Formatter for SigDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            write!(writer, "null")
        }
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        self.write_f64(writer, value as f64)
    }
}

/// Writes a figure in the requested format.
pub fn emit_figure(data: &FigureData, format: FigureFormat, path: &Path) -> Result<(), GaudinError> {
    let content = match format {
        FigureFormat::Svg => render_svg(data),
        FigureFormat::Csv => render_csv(data),
        FigureFormat::Json => render_json(data)?,
    };
    let mut file = std::fs::File::create(path)?;
    file.write_all(content.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelParams;
    use crate::momentum::{sample_image, trace_curves};

    fn data() -> FigureData {
        let p = ModelParams::new(1.0, 1.0, 1.0, [0.0, 0.5, 0.0, 0.5, -1.5]).unwrap();
        let grid: Vec<f64> = (0..=120).map(|i| -1.99 + 3.98 * i as f64 / 120.0).collect();
        FigureData {
            occupancy: Some(sample_image(&p, 64).unwrap()),
            curves: trace_curves(&p, &grid).unwrap(),
            events: Vec::new(),
            title: "flap stage".into(),
        }
    }

    #[test]
    fn svg_contains_dashed_hyperbolic_and_stars() {
        let svg = render_svg(&data());
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.matches("<path d=\"M").count() >= 2);
        assert!(svg.contains("</svg>"));
    }

    #[test]
    fn empty_figure_is_still_valid() {
        let empty = FigureData {
            occupancy: None,
            curves: Default::default(),
            events: Vec::new(),
            title: "empty".into(),
        };
        let svg = render_svg(&empty);
        assert!(svg.contains("</svg>"));
        let csv = render_csv(&empty);
        assert!(csv.starts_with("record,"));
        render_json(&empty).unwrap();
    }

    #[test]
    fn outputs_are_deterministic() {
        let d = data();
        assert_eq!(render_svg(&d), render_svg(&d));
        assert_eq!(render_csv(&d), render_csv(&d));
        assert_eq!(render_json(&d).unwrap(), render_json(&d).unwrap());
    }

    #[test]
    fn json_floats_carry_17_significant_digits() {
        let s = to_json_string(&serde_json::json!({"x": 0.1})).unwrap();
        assert!(s.contains("1.0000000000000001e-1"), "{s}");
    }
}
