use super::general::first_collinear;
use super::kernel::{with_coords, Planar};
use super::witness::in_convex_position;
use crate::arith::Point;
use crate::error::{Error, Result};

pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Largest convex-position subset by trying every subset. Exponential;
/// intended as an oracle for small sets.
pub fn brute_force_max_convex(points: &[Point]) -> Result<usize> {
    if points.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n: points.len(), limit: BRUTE_FORCE_LIMIT });
    }
    with_coords!(points, |pts| brute(pts))
}

fn brute<P: Planar>(pts: &[P]) -> Result<usize> {
    if let Some(w) = first_collinear(pts) {
        return Err(Error::NotGeneralPosition(w));
    }
    let n = pts.len();
    let mut best = n.min(3);
    let mut subset: Vec<&P> = Vec::with_capacity(n);
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() as usize <= best {
            continue;
        }
        subset.clear();
        subset.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| &pts[i]));
        if in_convex_position(&subset) {
            best = subset.len();
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(brute_force_max_convex(&pts(&[(0, 0), (3, 1), (1, 4)])), Ok(3));
        let arc = pts(&[(0, 0), (1, 1), (2, 4), (3, 9), (4, 16), (5, 25)]);
        assert_eq!(brute_force_max_convex(&arc), Ok(6));
        assert_eq!(brute_force_max_convex(&pts(&[(0, 0), (4, 0), (0, 4), (4, 4), (2, 1)])), Ok(4));
        assert_eq!(brute_force_max_convex(&pts(&[(1, 1)])), Ok(1));
    }

    #[test]
    fn guards() {
        let many: Vec<Point> = (0..21).map(|i| Point::new(i, i * i)).collect();
        assert_eq!(brute_force_max_convex(&many), Err(Error::TooLarge { n: 21, limit: 20 }));
        let line = pts(&[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(brute_force_max_convex(&line), Err(Error::NotGeneralPosition([0, 1, 2])));
    }
}
