//! Sets with no k-cup and no l-cap, as subsets of `P_r` (baseline) or with
//! shifts chosen as small as the verifiers allow (optimized).

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::pr::level_geometry;
use crate::arith::{Orientation, Point, QuadValue};
use crate::error::{Error, Result};
use crate::pointset::{ConstructionParams, PointSet, Span};
use crate::verify::kernel::Small;
use crate::verify::{first_collinear, longest_chain};

pub(crate) fn block_label(k: u32, l: u32) -> String {
    format!("S_{{{k},{l}}}")
}

/// Baseline points of `S_{k,l}` in increasing x order.
pub fn skl_baseline_points(k: u32, l: u32) -> Result<Vec<Point>> {
    ConstructionParams::SklBaseline { k, l }.validate()?;
    let mut memo = HashMap::new();
    Ok(baseline_rec(k, l, &mut memo).as_ref().clone())
}

fn baseline_rec(k: u32, l: u32, memo: &mut HashMap<(u32, u32), Rc<Vec<Point>>>) -> Rc<Vec<Point>> {
    if k <= 2 || l <= 2 {
        return Rc::new(vec![Point::origin()]);
    }
    if let Some(v) = memo.get(&(k, l)) {
        return v.clone();
    }
    let g = level_geometry(k + l - 1);
    let mut pts = baseline_rec(k - 1, l, memo).as_ref().clone();
    let right = baseline_rec(k, l - 1, memo);
    pts.extend(right.iter().map(|p| p.translate(&g.delta, &g.delta_prime)));
    let pts = Rc::new(pts);
    memo.insert((k, l), pts.clone());
    pts
}

/// The two halves of the outermost split, when there is one.
fn halves(k: u32, l: u32, len: usize) -> Vec<Span> {
    if k <= 2 || l <= 2 {
        return Vec::new();
    }
    let left = crate::pointset::binomial(k + l - 5, k - 3).to_usize().expect("small binomial");
    vec![Span { range: 0..left, label: block_label(k - 1, l) }, Span { range: left..len, label: block_label(k, l - 1) }]
}

pub fn build_skl_baseline(k: u32, l: u32) -> Result<PointSet> {
    let pts = skl_baseline_points(k, l)?;
    let n = pts.len();
    PointSet::new(pts)?.with_params(ConstructionParams::SklBaseline { k, l }).with_spans(halves(k, l, n))
}

pub fn build_skl_optimized(k: u32, l: u32, unit_separation: bool) -> Result<PointSet> {
    ConstructionParams::SklOptimized { k, l, unit_separation }.validate()?;
    let pts = SklOptimizer::default().build(k, l, unit_separation)?;
    let pts: Vec<Point> = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
    let n = pts.len();
    PointSet::new(pts)?
        .with_params(ConstructionParams::SklOptimized { k, l, unit_separation })
        .with_spans(halves(k, l, n))
}

pub(crate) type Pt = (i64, i64);

/// Memoized builder for optimized `S_{k,l}`. Every set it returns is sorted
/// by x, has its leftmost point at the origin and minimum y equal to 0.
#[derive(Default)]
pub(crate) struct SklOptimizer {
    memo: HashMap<(u32, u32, bool), Rc<Vec<Pt>>>,
}

impl SklOptimizer {
    /// `unit` applies to the outermost split only; nested splits always use
    /// the wide separation.
    pub(crate) fn build(&mut self, k: u32, l: u32, unit: bool) -> Result<Rc<Vec<Pt>>> {
        if k <= 2 || l <= 2 {
            return Ok(Rc::new(vec![(0, 0)]));
        }
        if let Some(v) = self.memo.get(&(k, l, unit)) {
            return Ok(v.clone());
        }
        let left = self.build(k - 1, l, false)?;
        let right = self.build(k, l - 1, false)?;
        let xl = left.last().map_or(0, |p| p.0);
        let xr = right.last().map_or(0, |p| p.0);
        let dx = if unit { xl + 1 } else { (xl + 1).max(wide_separation(xl, xr)?) };
        let dy = minimal_lift(&left, &right, dx, k, l)?;
        let mut pts = left.as_ref().clone();
        for &(x, y) in right.iter() {
            pts.push((x.checked_add(dx).ok_or_else(overflow)?, y.checked_add(dy).ok_or_else(overflow)?));
        }
        let pts = Rc::new(pts);
        self.memo.insert((k, l, unit), pts.clone());
        Ok(pts)
    }
}

fn overflow() -> Error {
    Error::ConstructionFailed("coordinates exceed 64 bits".into())
}

/// `⌈(1+√3)(xl+xr)/2⌉`
fn wide_separation(xl: i64, xr: i64) -> Result<i64> {
    let s = xl + xr;
    QuadValue::new(s, s).ceil_div(&BigInt::from(2)).to_i64().ok_or_else(overflow)
}

/// Smallest vertical shift `dy ≥ lo` placing `right + (dx, dy)` next to
/// `left` so that the union is in general position with no `k`-cup, no
/// `l`-cap and no negative slope. `lo` is the least shift with all slopes
/// between the halves non-negative.
///
/// Every triple mixing both halves has an orientation that is affine in
/// `dy`, so validity only changes at the roots of those functions. Testing
/// `lo` and the first integer above every root in increasing order finds the
/// minimum; past the last root all mixed triples take their limiting
/// orientations and the union is valid whenever both halves are.
pub(crate) fn minimal_lift(left: &[Pt], right: &[Pt], dx: i64, k: u32, l: u32) -> Result<i64> {
    let max_l = left.iter().map(|p| p.1).max().unwrap_or(0);
    let min_r = right.iter().map(|p| p.1).min().unwrap_or(0);
    let lo = (max_l - min_r).max(0);
    let mut candidates: Vec<i128> = vec![lo as i128];
    let mut push_root = |num: i128, den: i128| {
        let above = num.div_euclid(den) + 1;
        if above > lo as i128 {
            candidates.push(above);
        }
    };
    let dx = dx as i128;
    // two points of the left half and one of the right
    for (i, a1) in left.iter().enumerate() {
        for a2 in &left[i + 1..] {
            let den = (a2.0 - a1.0) as i128;
            for b in right {
                let num = (a1.1 - b.1) as i128 * den + (a2.1 - a1.1) as i128 * (b.0 as i128 + dx - a1.0 as i128);
                push_root(num, den);
            }
        }
    }
    // one point of the left half and two of the right
    for a in left {
        for (i, b1) in right.iter().enumerate() {
            for b2 in &right[i + 1..] {
                let u1 = b1.0 as i128 + dx - a.0 as i128;
                let u2 = b2.0 as i128 + dx - a.0 as i128;
                let num = u1 * (b2.1 - a.1) as i128 - u2 * (b1.1 - a.1) as i128;
                push_root(num, u2 - u1);
            }
        }
    }
    let mut candidates: Vec<i64> = candidates.into_iter().map(|c| c as i64).collect();
    candidates.sort_unstable();
    candidates.dedup();
    let mut pts: Vec<Small> = Vec::with_capacity(left.len() + right.len());
    for &dy in &candidates {
        pts.clear();
        pts.extend(left.iter().map(|&(x, y)| Small { x, y }));
        pts.extend(right.iter().map(|&(x, y)| Small { x: x + dx as i64, y: y + dy }));
        if admissible(&pts, k, l)? {
            return Ok(dy);
        }
    }
    Err(Error::ConstructionFailed(format!("no admissible vertical shift for S_{{{k},{l}}}")))
}

fn admissible(pts: &[Small], k: u32, l: u32) -> Result<bool> {
    if first_collinear(pts).is_some() {
        return Ok(false);
    }
    Ok(longest_chain(pts, Orientation::LeftTurn)?.size < k as usize
        && longest_chain(pts, Orientation::RightTurn)?.size < l as usize)
}
