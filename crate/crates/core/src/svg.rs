//! SVG drawings of point sets. Larger y is drawn higher up.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::verify::convex_hull;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub canvas_width_px: u32,
    pub point_radius_px: f64,
    pub show_hull: bool,
    pub show_blocks: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { canvas_width_px: 800, point_radius_px: 4.0, show_hull: false, show_blocks: false }
    }
}

const PALETTE: [&str; 10] =
    ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"];

struct Frame {
    min_x: BigInt,
    max_y: BigInt,
    scale: f64,
    margin: f64,
}

impl Frame {
    fn map(&self, x: &BigInt, y: &BigInt) -> (f64, f64) {
        let dx = (x - &self.min_x).to_f64().unwrap_or(f64::MAX);
        let dy = (&self.max_y - y).to_f64().unwrap_or(f64::MAX);
        (self.margin + dx * self.scale, self.margin + dy * self.scale)
    }
}

pub fn render_svg(s: &PointSet, options: &RenderOptions) -> Result<Vec<u8>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let pts = s.points();
    let min_x = pts.iter().map(|p| &p.x).min().expect("non-empty").clone();
    let max_y = pts.iter().map(|p| &p.y).max().expect("non-empty").clone();
    let bounds = s.bounding_box()?;
    let (w, h) = (bounds.width.to_f64().unwrap_or(f64::MAX), bounds.height.to_f64().unwrap_or(f64::MAX));
    let r = options.point_radius_px.max(0.5);
    let margin = (3.0 * r).max(10.0);
    let inner = (options.canvas_width_px as f64 - 2.0 * margin).max(1.0);
    let longest = w.max(h);
    let scale = if longest > 0.0 { inner / longest } else { 1.0 };
    let frame = Frame { min_x, max_y, scale, margin };
    let canvas_w = options.canvas_width_px.max(1) as f64;
    let canvas_h = h * scale + 2.0 * margin;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{canvas_w:.0}\" height=\"{canvas_h:.2}\" viewBox=\"0 0 {canvas_w:.2} {canvas_h:.2}\">"
    );
    let label = s.params().map(|p| p.to_string()).unwrap_or_else(|| "point set".into());
    let _ = writeln!(out, "<title>{} ({} points, {})</title>", escape(&label), pts.len(), bounds);
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    if options.show_hull && pts.len() >= 2 {
        let hull = convex_hull(pts);
        let mut coords: Vec<String> = hull
            .iter()
            .chain(hull.first())
            .map(|&i| {
                let (x, y) = frame.map(&pts[i].x, &pts[i].y);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        coords.dedup();
        let _ = writeln!(
            out,
            "<polyline class=\"hull\" points=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>",
            coords.join(" ")
        );
    }

    // each point belongs to exactly one group
    let mut groups: Vec<(String, Vec<usize>)> = Vec::new();
    let mut covered = vec![false; pts.len()];
    if options.show_blocks {
        for span in s.spans() {
            let members: Vec<usize> = span.range.clone().filter(|&i| !covered[i]).collect();
            members.iter().for_each(|&i| covered[i] = true);
            groups.push((span.label.clone(), members));
        }
    }
    let rest: Vec<usize> = (0..pts.len()).filter(|&i| !covered[i]).collect();
    if !rest.is_empty() {
        groups.push(("points".into(), rest));
    }
    let colored = options.show_blocks && !s.spans().is_empty();
    for (g, (name, members)) in groups.iter().enumerate() {
        let fill = if colored { PALETTE[g % PALETTE.len()] } else { "black" };
        let _ = writeln!(out, "<g class=\"block\" data-label=\"{}\" fill=\"{fill}\">", escape(name));
        for &i in members {
            let (x, y) = frame.map(&pts[i].x, &pts[i].y);
            let _ = writeln!(out, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{r:.2}\"/>");
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out.into_bytes())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_es_optimized;

    fn text(s: &PointSet, o: &RenderOptions) -> String {
        String::from_utf8(render_svg(s, o).unwrap()).unwrap()
    }

    #[test]
    fn single_point() {
        let s = PointSet::from_coords(&[(5, 7)]).unwrap();
        let svg = text(&s, &RenderOptions { show_hull: true, ..Default::default() });
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("polyline"));
    }

    #[test]
    fn blocks_get_colors() {
        let s = build_es_optimized(6, true).unwrap();
        let svg = text(&s, &RenderOptions { show_blocks: true, show_hull: true, ..Default::default() });
        assert_eq!(svg.matches("<circle").count(), 16);
        assert_eq!(svg.matches("<g class=\"block\"").count(), 5);
        for c in &PALETTE[..5] {
            assert!(svg.contains(c));
        }
        assert!(svg.contains("<polyline"));
        assert_eq!(svg, text(&s, &RenderOptions { show_blocks: true, show_hull: true, ..Default::default() }));
    }

    #[test]
    fn y_axis_points_up() {
        let s = PointSet::from_coords(&[(0, 0), (10, 20)]).unwrap();
        let svg = text(&s, &RenderOptions::default());
        let cy: Vec<f64> =
            svg.match_indices("cy=\"").map(|(i, _)| svg[i + 4..].split('"').next().unwrap().parse().unwrap()).collect();
        assert!(cy[0] > cy[1]);
    }

    #[test]
    fn empty_set() {
        let s = PointSet::new(vec![]).unwrap();
        assert_eq!(render_svg(&s, &RenderOptions::default()), Err(Error::EmptySet));
    }
}
