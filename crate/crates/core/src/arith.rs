//! Exact arithmetic kernel.
//!
//! Every coordinate is an arbitrary-precision integer and every predicate is
//! decided by the sign of an exact integer expression. Nothing here touches
//! floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: BigInt,
    pub y: BigInt,
}

impl Point {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Point { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        Point::new(0, 0)
    }

    pub fn translate(&self, dx: &BigInt, dy: &BigInt) -> Point {
        Point { x: &self.x + dx, y: &self.y + dy }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<T: Into<BigInt>> From<(T, T)> for Point {
    fn from((x, y): (T, T)) -> Self {
        Point::new(x, y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    LeftTurn,
    Collinear,
    RightTurn,
}

impl Orientation {
    pub fn from_sign(sign: Ordering) -> Self {
        match sign {
            Ordering::Greater => Orientation::LeftTurn,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Less => Orientation::RightTurn,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            Orientation::LeftTurn => Orientation::RightTurn,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::RightTurn => Orientation::LeftTurn,
        }
    }
}

/// Position of a point relative to a non-vertical line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Above,
    On,
    Below,
}

fn cross(p: &Point, q: &Point, r: &Point) -> BigInt {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

/// Sign of `(q - p) × (r - p)`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    Orientation::from_sign(cross(p, q, r).sign().cmp_zero())
}

trait SignExt {
    fn cmp_zero(self) -> Ordering;
}

impl SignExt for Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

/// A line through two distinct points, stored left endpoint first
/// (ties on x broken by y).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    p: Point,
    q: Point,
}

impl Line {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        match a.cmp(&b) {
            Ordering::Equal => Err(Error::DegenerateLine),
            Ordering::Less => Ok(Line { p: a, q: b }),
            Ordering::Greater => Ok(Line { p: b, q: a }),
        }
    }

    pub fn p(&self) -> &Point {
        &self.p
    }

    pub fn q(&self) -> &Point {
        &self.q
    }

    pub fn is_vertical(&self) -> bool {
        self.p.x == self.q.x
    }

    /// Slope as `(dy, dx)` with `dx > 0`.
    pub fn slope(&self) -> Result<(BigInt, BigInt)> {
        if self.is_vertical() {
            return Err(Error::VerticalLine);
        }
        Ok((&self.q.y - &self.p.y, &self.q.x - &self.p.x))
    }

    pub fn translate(&self, dx: &BigInt, dy: &BigInt) -> Line {
        Line { p: self.p.translate(dx, dy), q: self.q.translate(dx, dy) }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}--{}", self.p, self.q)
    }
}

pub fn slope_compare(l1: &Line, l2: &Line) -> Result<Ordering> {
    let (dy1, dx1) = l1.slope()?;
    let (dy2, dx2) = l2.slope()?;
    // both dx are positive, so cross-multiplying keeps the order
    Ok((dy1 * dx2).cmp(&(dy2 * dx1)))
}

pub fn point_side(p: &Point, l: &Line) -> Result<Side> {
    if l.is_vertical() {
        return Err(Error::VerticalLine);
    }
    Ok(match orientation(&l.p, &l.q, p) {
        Orientation::LeftTurn => Side::Above,
        Orientation::Collinear => Side::On,
        Orientation::RightTurn => Side::Below,
    })
}

/// An element `a + b√3` of ℤ[√3].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadValue {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadValue {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadValue { a: a.into(), b: b.into() }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        QuadValue::new(a, 0)
    }

    pub fn one() -> Self {
        QuadValue::new(1, 0)
    }

    pub fn pow(&self, mut e: u32) -> QuadValue {
        let mut base = self.clone();
        let mut acc = QuadValue::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign of the real number `a + b√3`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.sign().cmp_zero();
        let sb = self.b.sign().cmp_zero();
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // opposite signs: the term with the larger square wins; a² = 3b² has
            // no nonzero integer solution
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2 = &self.b * &self.b * 3u32;
                if a2 > b2 {
                    sa
                } else {
                    sa.reverse()
                }
            }
        }
    }

    /// Smallest integer `c` with `c ≥ a + b√3`.
    pub fn ceil(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.clone();
        }
        // √(3b²) is irrational and lies strictly between s and s + 1
        let s = (&self.b * &self.b * 3u32).sqrt();
        if self.b.is_positive() {
            &self.a + s + BigInt::one()
        } else {
            &self.a - s
        }
    }

    /// Smallest integer `c` with `c · d ≥ a + b√3`, for `d > 0`.
    pub fn ceil_div(&self, d: &BigInt) -> BigInt {
        assert!(d.is_positive(), "divisor must be positive");
        // ⌈x / d⌉ = ⌈⌈x⌉ / d⌉
        num_integer::Integer::div_ceil(&self.ceil(), d)
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}√3", self.a, -&self.b)
        } else {
            write!(f, "{} + {}√3", self.a, self.b)
        }
    }
}

impl<'a> Add for &'a QuadValue {
    type Output = QuadValue;
    fn add(self, rhs: &'a QuadValue) -> QuadValue {
        QuadValue { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub for &'a QuadValue {
    type Output = QuadValue;
    fn sub(self, rhs: &'a QuadValue) -> QuadValue {
        QuadValue { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul for &'a QuadValue {
    type Output = QuadValue;
    fn mul(self, rhs: &'a QuadValue) -> QuadValue {
        QuadValue { a: &self.a * &rhs.a + &self.b * &rhs.b * 3u32, b: &self.a * &rhs.b + &self.b * &rhs.a }
    }
}

impl Neg for QuadValue {
    type Output = QuadValue;
    fn neg(self) -> QuadValue {
        QuadValue { a: -self.a, b: -self.b }
    }
}

impl Ord for QuadValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for QuadValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn quad_compare(u: &QuadValue, v: &QuadValue) -> Ordering {
    u.cmp(v)
}

pub fn quad_ceil(u: &QuadValue) -> BigInt {
    u.ceil()
}

/// Extent of an axis-aligned bounding box.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridBounds {
    pub width: BigInt,
    pub height: BigInt,
}

impl GridBounds {
    pub fn fits_within(&self, width: impl Into<BigInt>, height: impl Into<BigInt>) -> bool {
        self.width <= width.into() && self.height <= height.into()
    }
}

impl fmt::Display for GridBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", self.width, self.height)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(2, 0)), Orientation::Collinear);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(2, 1)), Orientation::LeftTurn);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(2, -1)), Orientation::RightTurn);
        assert_eq!(orientation(&pt(3, 3), &pt(3, 3), &pt(1, 7)), Orientation::Collinear);
    }

    #[test]
    fn line_is_canonical() {
        let l = Line::new(pt(5, 1), pt(0, 0)).unwrap();
        assert_eq!(l.p(), &pt(0, 0));
        let v = Line::new(pt(0, 4), pt(0, 1)).unwrap();
        assert_eq!(v.p(), &pt(0, 1));
        assert_eq!(Line::new(pt(2, 2), pt(2, 2)), Err(Error::DegenerateLine));
    }

    #[test]
    fn slope_compare_examples() {
        let s1 = Line::new(pt(0, 0), pt(1, 1)).unwrap();
        let s2 = Line::new(pt(0, 0), pt(1, 2)).unwrap();
        assert_eq!(slope_compare(&s1, &s2), Ok(Ordering::Less));
        assert_eq!(slope_compare(&s2, &s1), Ok(Ordering::Greater));
        assert_eq!(slope_compare(&s1, &s1.clone()), Ok(Ordering::Equal));
        // same slope through different points
        let s3 = Line::new(pt(4, 9), pt(-2, 3)).unwrap();
        assert_eq!(slope_compare(&s1, &s3), Ok(Ordering::Equal));
        let v = Line::new(pt(1, 0), pt(1, 5)).unwrap();
        assert_eq!(slope_compare(&s1, &v), Err(Error::VerticalLine));
    }

    #[test]
    fn point_side_examples() {
        let l = Line::new(pt(-1, 0), pt(1, 0)).unwrap();
        assert_eq!(point_side(&pt(0, 1), &l), Ok(Side::Above));
        assert_eq!(point_side(&pt(5, 0), &l), Ok(Side::On));
        assert_eq!(point_side(&pt(5, -3), &l), Ok(Side::Below));
        let v = Line::new(pt(0, 0), pt(0, 1)).unwrap();
        assert_eq!(point_side(&pt(1, 1), &v), Err(Error::VerticalLine));
    }

    #[test]
    fn quad_compare_examples() {
        let q = QuadValue::new;
        assert_eq!(quad_compare(&q(0, 1), &q(2, 0)), Ordering::Less);
        assert_eq!(quad_compare(&q(1, 1), &q(0, 2)), Ordering::Less);
        assert_eq!(quad_compare(&q(7, -4), &q(7, -4)), Ordering::Equal);
        assert_eq!(quad_compare(&q(2, -1), &q(0, 0)), Ordering::Greater);
        assert_eq!(quad_compare(&q(-2, 1), &q(0, 0)), Ordering::Less);
    }

    #[test]
    fn quad_ceil_examples() {
        assert_eq!(quad_ceil(&QuadValue::new(0, 1)), BigInt::from(2));
        let cube = QuadValue::new(2, 1).pow(3);
        assert_eq!(cube, QuadValue::new(26, 15));
        assert_eq!(quad_ceil(&cube), BigInt::from(52));
        assert_eq!(quad_ceil(&QuadValue::new(5, 0)), BigInt::from(5));
        assert_eq!(quad_ceil(&QuadValue::new(-5, 0)), BigInt::from(-5));
        // 2 - √3 ≈ 0.268
        assert_eq!(quad_ceil(&QuadValue::new(2, -1)), BigInt::from(1));
        // -√3 ≈ -1.732
        assert_eq!(quad_ceil(&QuadValue::new(0, -1)), BigInt::from(-1));
    }

    #[test]
    fn ceil_div_halves() {
        // (1 + √3) · 3 / 2 ≈ 4.098
        let v = QuadValue::new(3, 3);
        assert_eq!(v.ceil_div(&BigInt::from(2)), BigInt::from(5));
        assert_eq!(QuadValue::from_int(6).ceil_div(&BigInt::from(2)), BigInt::from(3));
        assert_eq!(QuadValue::from_int(7).ceil_div(&BigInt::from(2)), BigInt::from(4));
    }
}
