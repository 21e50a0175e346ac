//! The doubling sets `P_r`: `P_0 = {(0,0)}` and `P_r = P_{r-1} ∪ (P_{r-1} + (δ_r, δ'_r))`.

use num_bigint::BigInt;

use crate::arith::{Line, Point, QuadValue};
use crate::error::{Error, Result};
use crate::pointset::{ConstructionParams, PointSet};

/// Shift and extent of one doubling level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelGeometry {
    pub r: u32,
    /// Horizontal shift `3·4^(r-1)`.
    pub delta: BigInt,
    /// Vertical shift `(3r+1)·4^(r-1)`.
    pub delta_prime: BigInt,
    /// Largest x-coordinate of `P_r`, `4^r - 1`.
    pub x_extent: BigInt,
    /// Largest y-coordinate of `P_r`, `r·4^r`.
    pub y_extent: BigInt,
}

fn pow4(e: u32) -> BigInt {
    BigInt::from(1) << (2 * e)
}

pub fn level_geometry(r: u32) -> LevelGeometry {
    if r == 0 {
        let z = BigInt::from(0);
        return LevelGeometry { r, delta: z.clone(), delta_prime: z.clone(), x_extent: z.clone(), y_extent: z };
    }
    let q = pow4(r - 1);
    LevelGeometry { r, delta: &q * 3u32, delta_prime: &q * (3 * r + 1), x_extent: pow4(r) - 1, y_extent: pow4(r) * r }
}

/// Points of `P_r`, in increasing x order. The first half is `L_r`, the second `R_r`.
pub fn pr_points(r: u32) -> Vec<Point> {
    let mut pts = vec![Point::origin()];
    pts.reserve((1usize << r.min(24)).saturating_sub(1));
    for s in 1..=r {
        let g = level_geometry(s);
        let shifted: Vec<Point> = pts.iter().map(|p| p.translate(&g.delta, &g.delta_prime)).collect();
        pts.extend(shifted);
    }
    pts
}

pub fn build_pr(r: u32) -> PointSet {
    // the doubling never repeats a point: every shift clears the previous extent
    PointSet::new(pr_points(r)).expect("P_r points are distinct").with_params(ConstructionParams::Pr { r })
}

/// `ℓ_r`: the line through the rightmost point of `L_r` and the leftmost
/// point of `R_r`. Defined for `r ≥ 2`.
pub fn bridge_line(r: u32) -> Result<Line> {
    if r < 2 {
        return Err(Error::InvalidParams(format!("bridge line needs r >= 2, got {r}")));
    }
    let prev = level_geometry(r - 1);
    let cur = level_geometry(r);
    Line::new(Point { x: prev.x_extent, y: prev.y_extent }, Point { x: cur.delta, y: cur.delta_prime })
}

/// `⌈(2+√3)^r⌉` for `r = 0..=r_max`.
pub fn optimized_x_extents(r_max: u32) -> Vec<BigInt> {
    let base = QuadValue::new(2, 1);
    let mut acc = QuadValue::one();
    let mut out = Vec::with_capacity(r_max as usize + 1);
    for _ in 0..=r_max {
        out.push(acc.ceil());
        acc = &acc * &base;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{point_side, slope_compare, Side};
    use std::cmp::Ordering;

    fn geo(r: u32, d: i64, dp: i64, x: i64, y: i64) -> LevelGeometry {
        LevelGeometry { r, delta: d.into(), delta_prime: dp.into(), x_extent: x.into(), y_extent: y.into() }
    }

    #[test]
    fn level_values() {
        assert_eq!(level_geometry(0), geo(0, 0, 0, 0, 0));
        assert_eq!(level_geometry(1), geo(1, 3, 4, 3, 4));
        assert_eq!(level_geometry(2), geo(2, 12, 28, 15, 32));
        assert_eq!(level_geometry(3), geo(3, 48, 160, 63, 192));
    }

    #[test]
    fn extents_accumulate_shifts() {
        for r in 1..40 {
            let (a, b) = (level_geometry(r - 1), level_geometry(r));
            assert_eq!(b.x_extent, &a.x_extent + &b.delta);
            assert_eq!(b.y_extent, &a.y_extent + &b.delta_prime);
        }
    }

    #[test]
    fn small_sets() {
        let p = |c: &[(i64, i64)]| c.iter().map(|&(x, y)| Point::new(x, y)).collect::<Vec<_>>();
        assert_eq!(pr_points(0), p(&[(0, 0)]));
        assert_eq!(pr_points(1), p(&[(0, 0), (3, 4)]));
        assert_eq!(pr_points(2), p(&[(0, 0), (3, 4), (12, 28), (15, 32)]));
        assert_eq!(build_pr(3).len(), 8);
    }

    #[test]
    fn bridge_slopes_increase() {
        // ℓ_2 has slope 8/3, ℓ_3 has slope 128/33
        let l2 = bridge_line(2).unwrap();
        assert_eq!(l2.slope().unwrap(), (24.into(), 9.into()));
        let l3 = bridge_line(3).unwrap();
        assert_eq!(l3.slope().unwrap(), (128.into(), 33.into()));
        assert_eq!(slope_compare(&l2, &l3), Ok(Ordering::Less));
        assert!(bridge_line(1).is_err());
    }

    #[test]
    fn rightmost_point_of_p3_is_above_l2() {
        let p3 = pr_points(3);
        let rightmost = p3.last().unwrap();
        assert_eq!(rightmost, &Point::new(63, 192));
        assert_eq!(point_side(rightmost, &bridge_line(2).unwrap()), Ok(Side::Above));
    }

    #[test]
    fn x_extents() {
        let xs = optimized_x_extents(3);
        assert_eq!(xs, vec![BigInt::from(1), 4.into(), 14.into(), 52.into()]);
    }
}
