//! Coordinate back-ends for the verifiers.
//!
//! Constructed sets almost always fit in machine words, so the verifiers run
//! on `i64` coordinates with `i128` cross products and fall back to `BigInt`
//! only when some coordinate is too large for that to be exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{self, Orientation, Point};

pub(crate) trait Planar: Clone + Send + Sync {
    fn orient(a: &Self, b: &Self, c: &Self) -> Orientation;
    fn cmp_x(&self, other: &Self) -> Ordering;
    fn cmp_y(&self, other: &Self) -> Ordering;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Small {
    pub x: i64,
    pub y: i64,
}

// |coordinate| ≤ 2^61 keeps differences within 2^62 and the cross product
// within i128.
const SMALL_LIMIT: i64 = 1 << 61;

impl Planar for Small {
    #[inline]
    fn orient(a: &Self, b: &Self, c: &Self) -> Orientation {
        let (abx, aby) = ((b.x - a.x) as i128, (b.y - a.y) as i128);
        let (acx, acy) = ((c.x - a.x) as i128, (c.y - a.y) as i128);
        Orientation::from_sign((abx * acy - aby * acx).cmp(&0))
    }

    #[inline]
    fn cmp_x(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x)
    }

    #[inline]
    fn cmp_y(&self, other: &Self) -> Ordering {
        self.y.cmp(&other.y)
    }
}

impl Planar for Point {
    fn orient(a: &Self, b: &Self, c: &Self) -> Orientation {
        arith::orientation(a, b, c)
    }

    fn cmp_x(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x)
    }

    fn cmp_y(&self, other: &Self) -> Ordering {
        self.y.cmp(&other.y)
    }
}

fn small(v: &BigInt) -> Option<i64> {
    v.to_i64().filter(|x| (-SMALL_LIMIT..=SMALL_LIMIT).contains(x))
}

pub(crate) enum Coords<'a> {
    Small(Vec<Small>),
    Big(&'a [Point]),
}

pub(crate) fn coords(points: &[Point]) -> Coords<'_> {
    let converted: Option<Vec<Small>> =
        points.iter().map(|p| Some(Small { x: small(&p.x)?, y: small(&p.y)? })).collect();
    match converted {
        Some(v) => Coords::Small(v),
        None => Coords::Big(points),
    }
}

/// Run a generic routine on whichever back-end fits the points.
macro_rules! with_coords {
    ($points:expr, |$pts:ident| $body:expr) => {
        match $crate::verify::kernel::coords($points) {
            $crate::verify::kernel::Coords::Small(v) => {
                let $pts: &[$crate::verify::kernel::Small] = &v;
                $body
            }
            $crate::verify::kernel::Coords::Big(b) => {
                let $pts: &[$crate::arith::Point] = b;
                $body
            }
        }
    };
}
pub(crate) use with_coords;
