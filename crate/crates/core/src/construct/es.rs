//! Sets of `2^(t-2)` points with no convex `t`-gon, assembled from the
//! blocks `S_{t-i, i+2}` for `i = 0..=t-2`.

use num_bigint::BigInt;

use super::placement::place_blocks;
use super::skl::{block_label, skl_baseline_points, Pt, SklOptimizer};
use crate::arith::Point;
use crate::error::Result;
use crate::pointset::{ConstructionParams, PointSet, Span};

/// `3t²(t+1)·4^(t+1)`, the side of the grid holding the baseline set.
pub fn es_baseline_grid_bound(t: u32) -> BigInt {
    BigInt::from(3u64 * t as u64 * t as u64 * (t as u64 + 1)) << (2 * (t + 1))
}

fn assemble(blocks: Vec<(String, Vec<Point>)>, params: ConstructionParams) -> Result<PointSet> {
    let mut points = Vec::new();
    let mut spans = Vec::with_capacity(blocks.len());
    for (label, pts) in blocks {
        let start = points.len();
        points.extend(pts);
        spans.push(Span { range: start..points.len(), label });
    }
    PointSet::new(points)?.with_params(params).with_spans(spans)?.normalize()
}

/// Block `i` is baseline `S_{t-i,i+2}` shifted by `F·w_i`, where
/// `F = (t+1)·4^(t+1)` and `w_i` sums `v_j = (3(t-j), -3j)` over `j = 1..=i`.
/// The result is translated to non-negative coordinates.
pub fn build_es_baseline(t: u32) -> Result<PointSet> {
    let params = ConstructionParams::EsBaseline { t };
    params.validate()?;
    let scale = BigInt::from(t + 1) << (2 * (t + 1));
    let (mut wx, mut wy) = (BigInt::from(0), BigInt::from(0));
    let mut blocks = Vec::new();
    for i in 0..=t - 2 {
        if i > 0 {
            wx += 3 * (t - i);
            wy -= 3 * i;
        }
        let (dx, dy) = (&scale * &wx, &scale * &wy);
        let (k, l) = (t - i, i + 2);
        let pts = skl_baseline_points(k, l)?.iter().map(|p| p.translate(&dx, &dy)).collect();
        blocks.push((block_label(k, l), pts));
    }
    assemble(blocks, params)
}

/// Optimized blocks placed by the exact search in `placement`.
pub fn build_es_optimized(t: u32, unit_separation: bool) -> Result<PointSet> {
    let params = ConstructionParams::EsOptimized { t, unit_separation };
    params.validate()?;
    let mut opt = SklOptimizer::default();
    let mut blocks: Vec<(u32, u32, Vec<Pt>)> = Vec::new();
    for i in 0..=t - 2 {
        let (k, l) = (t - i, i + 2);
        blocks.push((k, l, opt.build(k, l, unit_separation)?.as_ref().clone()));
    }
    let shapes: Vec<Vec<Pt>> = blocks.iter().map(|b| b.2.clone()).collect();
    let placement = place_blocks(&shapes);
    let placed = blocks
        .into_iter()
        .zip(placement.offsets)
        .map(|((k, l, pts), (ox, oy))| {
            (block_label(k, l), pts.iter().map(|&(x, y)| Point::new(x + ox, y + oy)).collect())
        })
        .collect();
    assemble(placed, params)
}
