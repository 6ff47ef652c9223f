use std::fmt::Write;

use super::frame::{Frame, Geometry, Primitive, PrimitiveKind};
use super::keyframes::fmt3;
use crate::layout::{palette_color, Viewport};

const BACKGROUND: &str = "#ffffff";
const LINK_COLOR: &str = "#999999";
const AXIS_COLOR: &str = "#333333";

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn color(p: &Primitive) -> &'static str {
    match (p.kind, p.color_index) {
        (PrimitiveKind::Link, _) => LINK_COLOR,
        (_, Some(i)) => palette_color(i),
        (_, None) => AXIS_COLOR,
    }
}

fn write_primitive(out: &mut String, p: &Primitive) {
    let id = escape(&p.element_id);
    let stroke = color(p);
    let opacity = fmt3(p.opacity);
    let width = fmt3(p.stroke_width);
    match (&p.geometry, p.kind) {
        (Geometry::Circle { center, radius }, _) => {
            let _ = writeln!(
                out,
                r#"<circle data-id="{id}" cx="{}" cy="{}" r="{}" fill="{stroke}" opacity="{opacity}"/>"#,
                fmt3(center.x),
                fmt3(center.y),
                fmt3(*radius)
            );
        }
        (Geometry::Points { points }, PrimitiveKind::Polyline) => {
            let coords: Vec<String> = points.iter().map(|v| format!("{},{}", fmt3(v.x), fmt3(v.y))).collect();
            let _ = writeln!(
                out,
                r#"<polyline data-id="{id}" points="{}" fill="none" stroke="{stroke}" stroke-width="{width}" stroke-linecap="round" stroke-linejoin="round" opacity="{opacity}"/>"#,
                coords.join(" ")
            );
        }
        (Geometry::Points { points }, _) => {
            let (a, b) = (points[0], points[points.len() - 1]);
            let _ = writeln!(
                out,
                r#"<line data-id="{id}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{width}" stroke-linecap="round" opacity="{opacity}"/>"#,
                fmt3(a.x),
                fmt3(a.y),
                fmt3(b.x),
                fmt3(b.y)
            );
        }
        (Geometry::Text { anchor, text }, _) => {
            let _ = writeln!(
                out,
                r#"<text data-id="{id}" x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle" fill="{stroke}" opacity="{opacity}">{}</text>"#,
                fmt3(anchor.x),
                fmt3(anchor.y),
                escape(text)
            );
        }
    }
}

/// SVG 1.1 document with one element per primitive, in frame order.
pub fn emit_svg(frame: &Frame, viewport: &Viewport) -> String {
    let (w, h) = (fmt3(viewport.width), fmt3(viewport.height));
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{w}" height="{h}" fill="{BACKGROUND}"/>"#
    );
    for p in &frame.primitives {
        write_primitive(&mut out, p);
    }
    out.push_str("</svg>\n");
    out
}
