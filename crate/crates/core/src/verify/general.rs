use rayon::prelude::*;

use super::kernel::{with_coords, Planar};
use crate::arith::{Line, Orientation, Point};
use crate::error::{Error, Result};

/// `Ok(())` if no three points are collinear, otherwise the lexicographically
/// smallest collinear index triple.
pub fn check_general_position(points: &[Point]) -> Result<()> {
    match with_coords!(points, |pts| first_collinear(pts)) {
        Some(w) => Err(Error::NotGeneralPosition(w)),
        None => Ok(()),
    }
}

pub(crate) fn first_collinear<P: Planar>(pts: &[P]) -> Option<[usize; 3]> {
    let n = pts.len();
    (0..n).into_par_iter().find_map_first(|i| {
        for j in i + 1..n {
            for k in j + 1..n {
                if P::orient(&pts[i], &pts[j], &pts[k]) == Orientation::Collinear {
                    return Some([i, j, k]);
                }
            }
        }
        None
    })
}

/// Why `upper` is not high above `lower`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighAboveViolation {
    /// The offending line, through two points of one of the sets.
    pub line: Line,
    /// The point on the wrong side of (or on) that line.
    pub point: Point,
    /// Whether `line` came from the upper set.
    pub line_from_upper: bool,
}

/// Checks that every line through two points of `upper` passes strictly above
/// every point of `lower`, and every line through two points of `lower` passes
/// strictly below every point of `upper`. Vertical lines count as violations.
pub fn is_high_above(upper: &[Point], lower: &[Point]) -> Result<(), Box<HighAboveViolation>> {
    // points are strictly below lines of `upper`, strictly above lines of `lower`
    side_violation(upper, lower, Orientation::RightTurn, true)?;
    side_violation(lower, upper, Orientation::LeftTurn, false)
}

fn side_violation(
    line_set: &[Point],
    others: &[Point],
    want: Orientation,
    line_from_upper: bool,
) -> Result<(), Box<HighAboveViolation>> {
    for (i, a) in line_set.iter().enumerate() {
        for b in &line_set[i + 1..] {
            let Ok(line) = Line::new(a.clone(), b.clone()) else { continue };
            for p in others {
                let ok = !line.is_vertical() && crate::arith::orientation(line.p(), line.q(), p) == want;
                if !ok {
                    return Err(Box::new(HighAboveViolation { line, point: p.clone(), line_from_upper }));
                }
            }
        }
    }
    Ok(())
}
