//! Deterministic SVG drawing of a log datum polygon.

use std::fmt::Write;

use logmut_core::{Datum, Error, Result};

/// Rendering options.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    /// Pixels per lattice unit, at least 1.
    pub scale: u32,
    pub label_edges: bool,
    pub show_lattice_points: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            scale: 40,
            label_edges: true,
            show_lattice_points: true,
        }
    }
}

const MARGIN: i64 = 1;
const FONT: u32 = 12;

fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// The polygon through the partial sums of the edges, labels at edge
/// midpoints pushed outward, and lattice points of the bounding box.
pub fn render_svg(s: &Datum, spec: &RenderSpec) -> Result<String> {
    if spec.scale == 0 {
        return Err(Error::Parse("scale must be at least 1".into()));
    }
    let verts = s
        .polygon()?
        .iter()
        .map(|p| Ok((to_i64(p.x)?, to_i64(p.y)?)))
        .collect::<Result<Vec<_>>>()?;
    let min_x = verts.iter().map(|p| p.0).min().unwrap_or(0) - MARGIN;
    let max_x = verts.iter().map(|p| p.0).max().unwrap_or(0) + MARGIN;
    let min_y = verts.iter().map(|p| p.1).min().unwrap_or(0) - MARGIN;
    let max_y = verts.iter().map(|p| p.1).max().unwrap_or(0) + MARGIN;
    let scale = i64::from(spec.scale);
    // screen y grows downward
    let px = |x: i64| (x - min_x) * scale;
    let py = |y: i64| (max_y - y) * scale;
    let width = (max_x - min_x) * scale;
    let height = (max_y - min_y) * scale;

    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        w,
        r#"  <rect width="{width}" height="{height}" fill="white"/>"#
    );

    if spec.show_lattice_points {
        let _ = writeln!(w, r#"  <g fill="gray">"#);
        for y in (min_y..=max_y).rev() {
            for x in min_x..=max_x {
                let _ = writeln!(w, r#"    <circle cx="{}" cy="{}" r="2"/>"#, px(x), py(y));
            }
        }
        let _ = writeln!(w, "  </g>");
    }

    let points: Vec<String> = verts
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        w,
        r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        points.join(" ")
    );
    let _ = writeln!(w, r#"  <g fill="black">"#);
    for &(x, y) in &verts {
        let _ = writeln!(w, r#"    <circle cx="{}" cy="{}" r="4"/>"#, px(x), py(y));
    }
    let _ = writeln!(w, "  </g>");

    if spec.label_edges {
        let _ = writeln!(
            w,
            r#"  <g font-family="monospace" font-size="{FONT}" text-anchor="middle">"#
        );
        for (i, edge) in s.edges().iter().enumerate() {
            let (x0, y0) = verts[i];
            let (ex, ey) = (to_i64(edge.vector().x)?, to_i64(edge.vector().y)?);
            // outward normal of a counterclockwise polygon is the clockwise turn
            let (nx, ny) = (ey as f64, -ex as f64);
            let norm = (nx * nx + ny * ny).sqrt();
            let off = f64::from(FONT);
            let cx = (px(x0) + px(x0 + ex)) as f64 / 2.0 + nx / norm * off;
            let cy = (py(y0) + py(y0 + ey)) as f64 / 2.0 - ny / norm * off + off / 3.0;
            let _ = writeln!(w, r#"    <text x="{cx:.1}" y="{cy:.1}">{edge}</text>"#);
        }
        let _ = writeln!(w, "  </g>");
    }
    let _ = writeln!(w, "</svg>");
    Ok(out)
}
