//! Direct re-checks of verifier witnesses. These share only the orientation
//! predicate with the dynamic programs they audit.

use std::cmp::Ordering;

use super::kernel::{with_coords, Planar};
use crate::arith::{Orientation, Point};

/// Number of strict convex-hull vertices (Andrew's monotone chain).
pub(crate) fn hull_size<P: Planar>(pts: &[&P]) -> usize {
    let n = pts.len();
    if n <= 2 {
        return n;
    }
    let mut sorted: Vec<&P> = pts.to_vec();
    sorted.sort_by(|a, b| a.cmp_x(b).then_with(|| a.cmp_y(b)));
    let mut lower: Vec<&P> = Vec::with_capacity(n);
    for &p in &sorted {
        while lower.len() >= 2 && P::orient(lower[lower.len() - 2], lower[lower.len() - 1], p) != Orientation::LeftTurn
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<&P> = Vec::with_capacity(n);
    for &p in sorted.iter().rev() {
        while upper.len() >= 2 && P::orient(upper[upper.len() - 2], upper[upper.len() - 1], p) != Orientation::LeftTurn
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.len() + upper.len() - 2
}

/// Indices of the strict hull vertices, counterclockwise from the
/// lowest-leftmost point.
pub(crate) fn hull_indices<P: Planar>(pts: &[P]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp_x(&pts[b]).then_with(|| pts[a].cmp_y(&pts[b])));
    if order.len() <= 2 {
        return order;
    }
    let turn = |h: &[usize], p: usize| P::orient(&pts[h[h.len() - 2]], &pts[h[h.len() - 1]], &pts[p]);
    let mut lower: Vec<usize> = Vec::new();
    for &p in &order {
        while lower.len() >= 2 && turn(&lower, p) != Orientation::LeftTurn {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &p in order.iter().rev() {
        while upper.len() >= 2 && turn(&upper, p) != Orientation::LeftTurn {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let start = (0..lower.len())
        .min_by(|&a, &b| pts[lower[a]].cmp_y(&pts[lower[b]]).then_with(|| pts[lower[a]].cmp_x(&pts[lower[b]])))
        .unwrap_or(0);
    lower.rotate_left(start);
    lower
}

/// Strict convex-hull vertices of `points` as indices, counterclockwise
/// starting at the lowest (then leftmost) vertex.
pub fn convex_hull(points: &[Point]) -> Vec<usize> {
    with_coords!(points, |pts| hull_indices(pts))
}

pub(crate) fn in_convex_position<P: Planar>(pts: &[&P]) -> bool {
    hull_size(pts) == pts.len()
}

/// `witness` lists a strictly convex polygon in counterclockwise order.
pub(crate) fn is_convex_ccw<P: Planar>(pts: &[P], witness: &[usize]) -> bool {
    let k = witness.len();
    if k <= 2 {
        return true;
    }
    let all_left = (0..k).all(|i| {
        let (a, b, c) = (&pts[witness[i]], &pts[witness[(i + 1) % k]], &pts[witness[(i + 2) % k]]);
        P::orient(a, b, c) == Orientation::LeftTurn
    });
    let refs: Vec<&P> = witness.iter().map(|&i| &pts[i]).collect();
    all_left && in_convex_position(&refs)
}

/// No point of the set lies strictly inside the convex polygon `witness`.
pub(crate) fn is_empty_polygon<P: Planar>(pts: &[P], witness: &[usize]) -> bool {
    let k = witness.len();
    if k < 3 {
        return true;
    }
    (0..pts.len()).filter(|i| !witness.contains(i)).all(|i| {
        !(0..k).all(|e| P::orient(&pts[witness[e]], &pts[witness[(e + 1) % k]], &pts[i]) == Orientation::LeftTurn)
    })
}

/// `witness` is a left-to-right chain turning `turn` at every inner vertex.
pub(crate) fn is_chain<P: Planar>(pts: &[P], witness: &[usize], turn: Orientation) -> bool {
    let increasing = witness.windows(2).all(|w| pts[w[0]].cmp_x(&pts[w[1]]) == Ordering::Less);
    increasing && witness.windows(3).all(|w| P::orient(&pts[w[0]], &pts[w[1]], &pts[w[2]]) == turn)
}
