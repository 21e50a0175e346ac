//! Longest cups and caps by dynamic programming over x-sorted points.

use std::cmp::Ordering;

use super::kernel::{with_coords, Planar};
use crate::arith::{Orientation, Point};
use crate::error::{Error, Result};

/// A maximum cup or cap: its size and the point indices, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub size: usize,
    pub witness: Vec<usize>,
}

pub fn max_cup(points: &[Point]) -> Result<Chain> {
    with_coords!(points, |pts| longest_chain(pts, Orientation::LeftTurn))
}

pub fn max_cap(points: &[Point]) -> Result<Chain> {
    with_coords!(points, |pts| longest_chain(pts, Orientation::RightTurn))
}

/// Indices sorted by x; errors on a shared x-coordinate.
pub(crate) fn x_order<P: Planar>(pts: &[P]) -> Result<Vec<usize>> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp_x(&pts[b]).then(a.cmp(&b)));
    for w in order.windows(2) {
        if pts[w[0]].cmp_x(&pts[w[1]]) == Ordering::Equal {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(Error::DuplicateX(a, b));
        }
    }
    Ok(order)
}

/// Longest x-monotone chain whose consecutive triples all turn `turn`.
pub(crate) fn longest_chain<P: Planar>(pts: &[P], turn: Orientation) -> Result<Chain> {
    let order = x_order(pts)?;
    let n = order.len();
    if n <= 2 {
        return Ok(Chain { size: n, witness: order });
    }
    const NONE: u32 = u32::MAX;
    // len[j * n + k]: longest chain ending with the edge (j, k), j < k in x order
    let mut len = vec![2u32; n * n];
    let mut prev = vec![NONE; n * n];
    let mut best = (2u32, 0usize, 1usize);
    for k in 0..n {
        let pk = &pts[order[k]];
        for j in 0..k {
            let pj = &pts[order[j]];
            let (mut l, mut from) = (2u32, NONE);
            for i in 0..j {
                if len[i * n + j] + 1 > l && P::orient(&pts[order[i]], pj, pk) == turn {
                    l = len[i * n + j] + 1;
                    from = i as u32;
                }
            }
            len[j * n + k] = l;
            prev[j * n + k] = from;
            if l > best.0 {
                best = (l, j, k);
            }
        }
    }
    let (size, mut j, mut k) = best;
    let mut rev = vec![order[k], order[j]];
    while prev[j * n + k] != NONE {
        let i = prev[j * n + k] as usize;
        rev.push(order[i]);
        k = j;
        j = i;
    }
    rev.reverse();
    Ok(Chain { size: size as usize, witness: rev })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(max_cup(&pts(&[(0, 0), (1, 0)])).unwrap().size, 2);
        assert_eq!(max_cup(&pts(&[(0, 1), (1, 0), (2, 1)])).unwrap().size, 3);
        assert_eq!(max_cap(&pts(&[(0, 1), (1, 0), (2, 1)])).unwrap().size, 2);
        assert_eq!(max_cap(&pts(&[(0, 0), (1, 1)])).unwrap().size, 2);
        assert_eq!(max_cap(&pts(&[(0, 0), (1, 1), (2, 0)])).unwrap().size, 3);
        assert_eq!(max_cup(&pts(&[(4, 4)])).unwrap(), Chain { size: 1, witness: vec![0] });
        assert_eq!(max_cup(&[]).unwrap().size, 0);
    }

    #[test]
    fn witness_is_left_to_right_in_input_indices() {
        // parabola points given out of order, plus one point off the curve
        let s = pts(&[(3, 9), (0, 0), (10, 20), (-2, 4), (1, 1), (2, 4)]);
        let c = max_cup(&s).unwrap();
        assert_eq!(c.size, 5);
        assert_eq!(c.witness, vec![3, 1, 4, 5, 0]);
    }

    #[test]
    fn duplicate_x_is_an_error() {
        assert_eq!(max_cup(&pts(&[(0, 0), (1, 5), (0, 3)])), Err(Error::DuplicateX(0, 2)));
        assert_eq!(max_cap(&pts(&[(2, 0), (2, 1)])), Err(Error::DuplicateX(0, 1)));
    }
}
