//! Deterministic SVG figures.

use std::fmt::Write;

use tricenter::Point2;

use crate::document::ResultDocument;

pub const CANVAS: f64 = 600.0;
pub const MARGIN: f64 = 30.0;

const COLORS: [(&str, &str); 7] = [
    ("equiareal", "#1f77b4"),
    ("illuminating", "#ff7f0e"),
    ("thermodynamic", "#d62728"),
    ("incenter", "#2ca02c"),
    ("centroid", "#9467bd"),
    ("circumcenter", "#8c564b"),
    ("orthocenter", "#e377c2"),
];

fn color(name: &str) -> &'static str {
    COLORS
        .iter()
        .find(|(n, _)| *n == name)
        .map_or("#000000", |(_, c)| c)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Maps plane coordinates onto the canvas, y pointing up.
struct View {
    scale: f64,
    min: Point2,
    max: Point2,
    offset: Point2,
}

impl View {
    fn fit(points: &[Point2]) -> View {
        let (mut min, mut max) = (points[0], points[0]);
        for p in points {
            min = Point2::new(min.x.min(p.x), min.y.min(p.y));
            max = Point2::new(max.x.max(p.x), max.y.max(p.y));
        }
        let inner = CANVAS - 2.0 * MARGIN;
        let scale = inner / (max.x - min.x).max(max.y - min.y);
        let offset = Point2::new(
            MARGIN + 0.5 * (inner - scale * (max.x - min.x)),
            MARGIN + 0.5 * (inner - scale * (max.y - min.y)),
        );
        View {
            scale,
            min,
            max,
            offset,
        }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        (
            self.offset.x + self.scale * (p.x - self.min.x),
            self.offset.y + self.scale * (self.max.y - p.y),
        )
    }
}

/// Triangle outline, the disk (center, radius) if given, and one labeled
/// marker per center in the document.
pub fn render(doc: &ResultDocument, disk: Option<(Point2, f64)>) -> String {
    let vertices: Vec<Point2> = doc
        .triangle
        .vertices
        .iter()
        .map(|v| Point2::new(v[0], v[1]))
        .collect();
    let mut bounds = vertices.clone();
    if let Some((c, radius)) = disk {
        let r = Point2::new(radius, radius);
        bounds.extend([c - r, c + r]);
    }
    let view = View::fit(&bounds);

    let mut markers: Vec<(&str, Point2)> = doc
        .centers
        .iter()
        .filter_map(|(name, _)| Some((name.as_str(), doc.point(name)?)))
        .collect();
    markers.extend(
        doc.classical
            .iter()
            .map(|(name, c)| (name.as_str(), Point2::new(c.point[0], c.point[1]))),
    );

    let mut svg = String::new();
    let size = CANVAS as u32;
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(svg, "<title>{}</title>", escape(&doc.triangle.label));
    let _ = writeln!(
        svg,
        r#"<rect width="{size}" height="{size}" fill="white"/>"#
    );
    let points: Vec<String> = vertices
        .iter()
        .map(|&v| {
            let (x, y) = view.map(v);
            format!("{x:.4},{y:.4}")
        })
        .collect();
    let _ = writeln!(
        svg,
        r#"<polygon id="triangle" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        points.join(" ")
    );
    if let Some((c, radius)) = disk {
        let (x, y) = view.map(c);
        let _ = writeln!(
            svg,
            r##"<circle id="equal-area-disk" cx="{x:.4}" cy="{y:.4}" r="{:.4}" fill="#1f77b4" fill-opacity="0.12" stroke="#1f77b4" stroke-dasharray="5 3"/>"##,
            view.scale * radius
        );
    }
    for (name, p) in markers {
        let (x, y) = view.map(p);
        let c = color(name);
        let _ = writeln!(
            svg,
            r#"<circle class="marker" data-center="{name}" cx="{x:.4}" cy="{y:.4}" r="3" fill="{c}"/>"#
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.4}" y="{:.4}" font-family="sans-serif" font-size="11" fill="{c}">{name}</text>"#,
            x + 5.0,
            y - 5.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}
