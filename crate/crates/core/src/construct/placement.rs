//! Placement of the cup-cap blocks of an Erdős–Szekeres set on a small grid.
//!
//! Blocks go left to right, each strictly below the previous one. Write `D_j`
//! for the set of vectors from points of block `j` to points of block `j+1`
//! (block origins aligned). With offset `o_j`, the slopes of `D_j + o_j` must
//! all be negative and must all lie strictly below the smallest slope of
//! `D_{j-1} + o_{j-1}`. For a fixed horizontal offset the largest admissible
//! vertical offset is explicit, so the search runs over horizontal offsets
//! only, as a dynamic program over Pareto-optimal partial placements.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::skl::Pt;

/// Exact rational with positive denominator.
#[derive(Debug, Clone, Copy)]
struct Frac {
    num: i128,
    den: i128,
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Frac {}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

struct Gap {
    /// Hull vertices of `D_j`.
    hull: Vec<Pt>,
    max_dy: i64,
    min_dx: i64,
}

impl Gap {
    fn new(a: &[Pt], b: &[Pt]) -> Gap {
        let diffs: Vec<Pt> = a.iter().flat_map(|p| b.iter().map(move |q| (q.0 - p.0, q.1 - p.1))).collect();
        let max_dy = diffs.iter().map(|d| d.1).max().expect("blocks are non-empty");
        let min_dx = diffs.iter().map(|d| d.0).min().expect("blocks are non-empty");
        Gap { hull: hull(diffs), max_dy, min_dx }
    }

    /// Largest vertical offset for horizontal offset `dx` keeping every slope
    /// negative and below `limit`, with the smallest slope that results.
    fn step(&self, dx: i64, limit: Option<Frac>) -> (i64, Frac) {
        let mut dy = -self.max_dy - 1;
        if let Some(Frac { num: p, den: q }) = limit {
            for &(x, y) in &self.hull {
                // (y + dy) / (x + dx) < p / q  ⇔  q·dy ≤ p·(x + dx) − q·y − 1
                let bound = (p * (x + dx) as i128 - q * y as i128 - 1).div_euclid(q);
                dy = dy.min(bound as i64);
            }
        }
        let smin = self
            .hull
            .iter()
            .map(|&(x, y)| Frac { num: (y + dy) as i128, den: (x + dx) as i128 })
            .min()
            .expect("hull is non-empty");
        (dy, smin)
    }

    fn first_dx(&self) -> i64 {
        1 - self.min_dx
    }
}

fn cross(o: Pt, a: Pt, b: Pt) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Convex hull vertices by the monotone chain.
fn hull(mut pts: Vec<Pt>) -> Vec<Pt> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Pt> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Pt> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Placement {
    /// Offset of each block's origin; the first is `(0, 0)`.
    pub offsets: Vec<Pt>,
    pub width: i64,
    pub height: i64,
}

#[derive(Clone, Copy)]
struct State {
    smin: Frac,
    sum_dx: i64,
    sum_dy: i64,
    parent: usize,
}

/// Places blocks (each with minimum x and y equal to 0) minimizing the larger
/// side of the bounding box, then its area.
pub(crate) fn place_blocks(blocks: &[Vec<Pt>]) -> Placement {
    let n = blocks.len();
    let w: Vec<i64> = blocks.iter().map(|b| b.iter().map(|p| p.0).max().unwrap_or(0)).collect();
    let h: Vec<i64> = blocks.iter().map(|b| b.iter().map(|p| p.1).max().unwrap_or(0)).collect();
    if n <= 1 {
        let (width, height) = (w.first().copied().unwrap_or(0), h.first().copied().unwrap_or(0));
        return Placement { offsets: vec![(0, 0); n], width, height };
    }
    let search = Search::new(blocks, w, h);
    // any budget at or above the optimum finds it, so grow the budget from a
    // lower bound until something fits
    let ceiling = search.greedy_budget();
    let mut budget = search.rest_w[0].max(search.h[0] + search.rest_h[0]);
    loop {
        let b = budget.min(ceiling);
        if let Some(p) = search.run(b) {
            return p;
        }
        assert!(b < ceiling, "the greedy placement fits its own budget");
        budget += (budget / 8).max(1);
    }
}

struct Search {
    gaps: Vec<Gap>,
    w: Vec<i64>,
    h: Vec<i64>,
    /// Least width and height still to come after each gap.
    rest_w: Vec<i64>,
    rest_h: Vec<i64>,
}

/// Pareto staircase over (cone slope, vertical offset): as the slope grows
/// the offset strictly falls. Values carry the parent index.
type Stairs = BTreeMap<Frac, (i64, usize)>;

/// Inserts unless dominated, evicting what the new entry dominates.
fn offer(stairs: &mut Stairs, smin: Frac, sum_dy: i64, parent: usize) -> bool {
    if let Some((_, &(dy, _))) = stairs.range(smin..).next() {
        if dy >= sum_dy {
            return false;
        }
    }
    let covered: Vec<Frac> =
        stairs.range(..=smin).rev().take_while(|(_, &(dy, _))| dy <= sum_dy).map(|(f, _)| *f).collect();
    for f in covered {
        stairs.remove(&f);
    }
    stairs.insert(smin, (sum_dy, parent));
    true
}

impl Search {
    fn new(blocks: &[Vec<Pt>], w: Vec<i64>, h: Vec<i64>) -> Search {
        let n = blocks.len();
        let gaps: Vec<Gap> = (0..n - 1).map(|j| Gap::new(&blocks[j], &blocks[j + 1])).collect();
        let mut rest_w = vec![w[n - 1]; n];
        let mut rest_h = vec![0; n];
        for j in (0..n - 1).rev() {
            rest_w[j] = rest_w[j + 1] + gaps[j].first_dx();
            rest_h[j] = rest_h[j + 1] + gaps[j].max_dy + 1;
        }
        Search { gaps, w, h, rest_w, rest_h }
    }

    /// Best placement with both sides at most `budget`, if there is one.
    ///
    /// A partial placement is dominated by another with at most its
    /// horizontal extent, at least its cone slope and at least its vertical
    /// offset; only undominated ones are extended.
    fn run(&self, budget: i64) -> Option<Placement> {
        let n = self.w.len();
        let (h0, w_last) = (self.h[0], self.w[n - 1]);
        let mut layers: Vec<Vec<State>> = Vec::with_capacity(n - 1);
        let mut prev = vec![State { smin: Frac { num: 0, den: 1 }, sum_dx: 0, sum_dy: 0, parent: 0 }];
        for (j, gap) in self.gaps.iter().enumerate() {
            let mut buckets: Vec<Stairs> = vec![Stairs::new(); budget.max(0) as usize + 1];
            for (idx, s) in prev.iter().enumerate() {
                let limit = if j == 0 { None } else { Some(s.smin) };
                let mut dx = gap.first_dx();
                while s.sum_dx + dx + self.rest_w[j + 1] <= budget {
                    let (dy, smin) = gap.step(dx, limit);
                    let sum_dy = s.sum_dy + dy;
                    if h0 - sum_dy + self.rest_h[j + 1] > budget {
                        // dy only decreases as dx grows
                        break;
                    }
                    offer(&mut buckets[(s.sum_dx + dx) as usize], smin, sum_dy, idx);
                    dx += 1;
                }
            }
            let mut stairs = Stairs::new();
            let mut next = Vec::new();
            for (sum_dx, bucket) in buckets.iter().enumerate() {
                for (&smin, &(sum_dy, parent)) in bucket.iter().rev() {
                    if offer(&mut stairs, smin, sum_dy, parent) {
                        next.push(State { smin, sum_dx: sum_dx as i64, sum_dy, parent });
                    }
                }
            }
            layers.push(prev);
            prev = next;
        }

        let measure = |s: &State| {
            let (width, height) = (s.sum_dx + w_last, h0 - s.sum_dy);
            (width.max(height), width as i128 * height as i128)
        };
        let (best, _) = prev.iter().enumerate().min_by_key(|(_, s)| measure(s))?;
        let (width, height) = (prev[best].sum_dx + w_last, h0 - prev[best].sum_dy);
        let mut offsets = vec![(0, 0); n];
        let mut idx = best;
        let mut layer = &prev;
        for j in (0..n - 1).rev() {
            let s = layer[idx];
            offsets[j + 1] = (s.sum_dx, s.sum_dy);
            idx = s.parent;
            layer = &layers[j];
        }
        Some(Placement { offsets, width, height })
    }

    /// Largest side of the best placement that leaves the same extra
    /// horizontal gap after every block.
    fn greedy_budget(&self) -> i64 {
        let n = self.w.len();
        let (h0, w_last) = (self.h[0], self.w[n - 1]);
        let mut best = i64::MAX;
        for extra in 0..=(self.rest_w[0] + self.rest_h[0] + h0).max(16) {
            let (mut sum_dx, mut sum_dy, mut limit) = (0, 0, None);
            for g in &self.gaps {
                let dx = g.first_dx() + extra;
                let (dy, smin) = g.step(dx, limit);
                sum_dx += dx;
                sum_dy += dy;
                limit = Some(smin);
            }
            best = best.min((sum_dx + w_last).max(h0 - sum_dy));
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_vertices() {
        let h = hull(vec![(0, 0), (2, 0), (1, 1), (2, 2), (0, 2), (1, 0)]);
        assert_eq!(h, vec![(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(hull(vec![(1, 1), (1, 1)]), vec![(1, 1)]);
    }

    #[test]
    fn frac_order_is_exact() {
        let a = Frac { num: -1, den: 3 };
        let b = Frac { num: -2, den: 6 };
        assert_eq!(a, b);
        assert!(Frac { num: -1, den: 2 } < a);
    }

    #[test]
    fn single_points() {
        let p = place_blocks(&[vec![(0, 0)], vec![(0, 0)]]);
        assert_eq!(p.offsets, vec![(0, 0), (1, -1)]);
        assert_eq!((p.width, p.height), (1, 1));
        let one = place_blocks(&[vec![(0, 0), (3, 4)]]);
        assert_eq!((one.width, one.height), (3, 4));
    }

    #[test]
    fn slopes_fall_between_consecutive_gaps() {
        let blocks = vec![vec![(0, 0)], vec![(0, 0), (1, 1)], vec![(0, 1), (1, 0)], vec![(0, 0)]];
        let p = place_blocks(&blocks);
        let placed: Vec<Vec<Pt>> =
            blocks.iter().zip(&p.offsets).map(|(b, o)| b.iter().map(|q| (q.0 + o.0, q.1 + o.1)).collect()).collect();
        let mut prev_min: Option<Frac> = None;
        for j in 0..placed.len() - 1 {
            let slopes: Vec<Frac> = placed[j]
                .iter()
                .flat_map(|a| {
                    placed[j + 1].iter().map(move |b| Frac { num: (b.1 - a.1) as i128, den: (b.0 - a.0) as i128 })
                })
                .collect();
            assert!(slopes.iter().all(|s| s.den > 0 && s.num < 0));
            if let Some(m) = prev_min {
                assert!(slopes.iter().all(|s| *s < m));
            }
            prev_min = slopes.into_iter().min();
        }
    }
}
