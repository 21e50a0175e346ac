//! Largest convex-position subsets, optionally restricted to empty polygons.
//!
//! Every convex polygon has a unique lowest (then leftmost) vertex. For each
//! candidate anchor the points above it are sorted by angle and a dynamic
//! program over directed edges grows counterclockwise convex chains from the
//! anchor. That is cubic per anchor; anchors run in parallel.

use std::cmp::Ordering;

use rayon::prelude::*;

use super::general::first_collinear;
use super::kernel::{with_coords, Planar};
use crate::arith::{Orientation, Point};
use crate::error::{Error, Result};

/// A maximum convex polygon: its size and the vertex indices in
/// counterclockwise order, starting from the lowest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    pub size: usize,
    pub witness: Vec<usize>,
}

pub fn max_convex_subset(points: &[Point]) -> Result<Polygon> {
    with_coords!(points, |pts| best_polygon(pts, false))
}

/// Largest convex polygon with no point of the set strictly inside it.
pub fn max_empty_convex_subset(points: &[Point]) -> Result<Polygon> {
    with_coords!(points, |pts| best_polygon(pts, true))
}

fn best_polygon<P: Planar>(pts: &[P], empty: bool) -> Result<Polygon> {
    if let Some(w) = first_collinear(pts) {
        return Err(Error::NotGeneralPosition(w));
    }
    let results: Vec<Vec<usize>> = (0..pts.len()).into_par_iter().map(|a| anchored(pts, a, empty)).collect();
    // first anchor (by index) reaching the maximum
    let mut best: Vec<usize> = Vec::new();
    for w in results {
        if w.len() > best.len() {
            best = w;
        }
    }
    Ok(Polygon { size: best.len(), witness: best })
}

/// Largest polygon whose lowest-then-leftmost vertex is `a`.
fn anchored<P: Planar>(pts: &[P], a: usize, empty: bool) -> Vec<usize> {
    let pa = &pts[a];
    let mut cand: Vec<usize> = (0..pts.len())
        .filter(|&c| match pts[c].cmp_y(pa) {
            Ordering::Greater => true,
            Ordering::Equal => pts[c].cmp_x(pa) == Ordering::Greater,
            Ordering::Less => false,
        })
        .collect();
    // all candidates lie in a half-plane around `a`, so the turn test is a
    // total angular order
    cand.sort_by(|&u, &v| match P::orient(pa, &pts[u], &pts[v]) {
        Orientation::LeftTurn => Ordering::Less,
        Orientation::RightTurn => Ordering::Greater,
        Orientation::Collinear => Ordering::Equal,
    });
    let m = cand.len();
    match m {
        0 => return vec![a],
        1 => return vec![a, cand[0]],
        _ => {}
    }
    let c: Vec<&P> = cand.iter().map(|&i| &pts[i]).collect();

    // fan triangle (a, c_i, c_j) holds no candidate strictly inside
    let fan_ok = |i: usize, j: usize| -> bool {
        !empty || (i + 1..j).all(|k| P::orient(c[i], c[j], c[k]) != Orientation::LeftTurn)
    };

    const NONE: u32 = u32::MAX;
    // len[i * m + j]: most vertices on a convex chain a, .., c_i, c_j
    let mut len = vec![0u32; m * m];
    let mut prev = vec![NONE; m * m];
    let mut best = (2u32, NONE as usize, 0usize);
    for j in 0..m {
        for i in 0..j {
            if !fan_ok(i, j) {
                continue;
            }
            let (mut l, mut from) = (3u32, NONE);
            for h in 0..i {
                let lh = len[h * m + i];
                if lh + 1 > l && P::orient(c[h], c[i], c[j]) == Orientation::LeftTurn {
                    l = lh + 1;
                    from = h as u32;
                }
            }
            len[i * m + j] = l;
            prev[i * m + j] = from;
            if l > best.0 {
                best = (l, i, j);
            }
        }
    }
    let (_, mut i, mut j) = best;
    if i == NONE as usize {
        return vec![a, cand[0]];
    }
    let mut rev = vec![cand[j], cand[i]];
    while prev[i * m + j] != NONE {
        let h = prev[i * m + j] as usize;
        rev.push(cand[h]);
        j = i;
        i = h;
    }
    rev.push(a);
    rev.reverse();
    rev
}
