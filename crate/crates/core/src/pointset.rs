use std::collections::HashSet;
use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;

use crate::arith::{GridBounds, Point};
use crate::error::{Error, Result};

/// Which construction produced a point set, with exactly the parameters
/// that construction takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionParams {
    Pr { r: u32 },
    SklBaseline { k: u32, l: u32 },
    SklOptimized { k: u32, l: u32, unit_separation: bool },
    EsBaseline { t: u32 },
    EsOptimized { t: u32, unit_separation: bool },
}

impl ConstructionParams {
    pub fn kind(&self) -> &'static str {
        match self {
            ConstructionParams::Pr { .. } => "PR",
            ConstructionParams::SklBaseline { .. } => "SKL_BASELINE",
            ConstructionParams::SklOptimized { .. } => "SKL_OPTIMIZED",
            ConstructionParams::EsBaseline { .. } => "ES_BASELINE",
            ConstructionParams::EsOptimized { .. } => "ES_OPTIMIZED",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ConstructionParams::Pr { .. } => Ok(()),
            ConstructionParams::SklBaseline { k, l } | ConstructionParams::SklOptimized { k, l, .. } => {
                if k < 2 || l < 2 {
                    Err(Error::InvalidParams(format!("need k, l >= 2, got k={k} l={l}")))
                } else {
                    Ok(())
                }
            }
            ConstructionParams::EsBaseline { t } | ConstructionParams::EsOptimized { t, .. } => {
                if t < 2 {
                    Err(Error::InvalidParams(format!("need t >= 2, got t={t}")))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Number of points the construction must produce.
    pub fn expected_len(&self) -> BigInt {
        match *self {
            ConstructionParams::Pr { r } => BigInt::from(1) << r,
            ConstructionParams::SklBaseline { k, l } | ConstructionParams::SklOptimized { k, l, .. } => {
                binomial(k + l - 4, k - 2)
            }
            ConstructionParams::EsBaseline { t } | ConstructionParams::EsOptimized { t, .. } => {
                BigInt::from(1) << (t - 2)
            }
        }
    }

    pub fn t(&self) -> Option<u32> {
        match *self {
            ConstructionParams::EsBaseline { t } | ConstructionParams::EsOptimized { t, .. } => Some(t),
            _ => None,
        }
    }

    pub fn kl(&self) -> Option<(u32, u32)> {
        match *self {
            ConstructionParams::SklBaseline { k, l } | ConstructionParams::SklOptimized { k, l, .. } => Some((k, l)),
            _ => None,
        }
    }

    pub fn unit_separation(&self) -> Option<bool> {
        match *self {
            ConstructionParams::SklOptimized { unit_separation, .. }
            | ConstructionParams::EsOptimized { unit_separation, .. } => Some(unit_separation),
            _ => None,
        }
    }
}

impl fmt::Display for ConstructionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind())?;
        match *self {
            ConstructionParams::Pr { r } => write!(f, " r={r}"),
            ConstructionParams::SklBaseline { k, l } => write!(f, " k={k} l={l}"),
            ConstructionParams::SklOptimized { k, l, unit_separation } => {
                write!(f, " k={k} l={l}")?;
                if !unit_separation {
                    write!(f, " no-unit-sep")?;
                }
                Ok(())
            }
            ConstructionParams::EsBaseline { t } => write!(f, " t={t}"),
            ConstructionParams::EsOptimized { t, unit_separation } => {
                write!(f, " t={t}")?;
                if !unit_separation {
                    write!(f, " no-unit-sep")?;
                }
                Ok(())
            }
        }
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// A labelled index range inside a point set, e.g. one translated
/// `S_{k,l}` block of an Erdős–Szekeres set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    pub range: Range<usize>,
    pub label: String,
}

/// An ordered sequence of distinct points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    params: Option<ConstructionParams>,
    spans: Vec<Span>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint(p.clone()));
            }
        }
        Ok(PointSet { points, params: None, spans: Vec::new() })
    }

    pub fn from_coords<T: Into<BigInt> + Copy>(coords: &[(T, T)]) -> Result<Self> {
        PointSet::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    pub fn with_params(mut self, params: ConstructionParams) -> Self {
        self.params = Some(params);
        self
    }

    /// Attach block spans. Spans must lie inside the point range.
    pub fn with_spans(mut self, spans: Vec<Span>) -> Result<Self> {
        if let Some(bad) = spans.iter().find(|s| s.range.end > self.points.len() || s.range.start > s.range.end) {
            return Err(Error::InvalidParams(format!(
                "span {:?} out of range for {} points",
                bad.range,
                self.points.len()
            )));
        }
        self.spans = spans;
        Ok(self)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn params(&self) -> Option<&ConstructionParams> {
        self.params.as_ref()
    }

    pub fn spans(&self) -> &[Span] {
        &self.spans
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// The sub-set at `indices`, without provenance.
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet { points: indices.iter().map(|&i| self.points[i].clone()).collect(), params: None, spans: Vec::new() }
    }

    pub fn translate(&self, dx: &BigInt, dy: &BigInt) -> PointSet {
        PointSet {
            points: self.points.iter().map(|p| p.translate(dx, dy)).collect(),
            params: self.params,
            spans: self.spans.clone(),
        }
    }

    fn min_max(&self) -> Result<(Point, Point)> {
        let first = self.points.first().ok_or(Error::EmptySet)?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for p in &self.points[1..] {
            if p.x < lo.x {
                lo.x = p.x.clone();
            }
            if p.y < lo.y {
                lo.y = p.y.clone();
            }
            if p.x > hi.x {
                hi.x = p.x.clone();
            }
            if p.y > hi.y {
                hi.y = p.y.clone();
            }
        }
        Ok((lo, hi))
    }

    pub fn bounding_box(&self) -> Result<GridBounds> {
        let (lo, hi) = self.min_max()?;
        Ok(GridBounds { width: hi.x - lo.x, height: hi.y - lo.y })
    }

    /// Translate so the minimum x and minimum y are both zero.
    pub fn normalize(&self) -> Result<PointSet> {
        let (lo, _) = self.min_max()?;
        Ok(self.translate(&-lo.x, &-lo.y))
    }

    /// Largest absolute coordinate value.
    pub fn max_abs_coordinate(&self) -> Result<BigInt> {
        use num_traits::Signed;
        self.points.iter().flat_map(|p| [p.x.abs(), p.y.abs()]).max().ok_or(Error::EmptySet)
    }
}

pub fn bounding_box(s: &PointSet) -> Result<GridBounds> {
    s.bounding_box()
}

pub fn normalize(s: &PointSet) -> Result<PointSet> {
    s.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::orientation;

    #[test]
    fn rejects_duplicates() {
        let err = PointSet::from_coords(&[(0, 0), (1, 2), (0, 0)]).unwrap_err();
        assert_eq!(err, Error::DuplicatePoint(Point::new(0, 0)));
    }

    #[test]
    fn bounding_box_examples() {
        let one = PointSet::from_coords(&[(0, 0)]).unwrap();
        assert_eq!(one.bounding_box().unwrap(), GridBounds { width: 0.into(), height: 0.into() });
        let s = PointSet::from_coords(&[(3, -2), (-1, 5), (0, 0)]).unwrap();
        assert_eq!(s.bounding_box().unwrap(), GridBounds { width: 4.into(), height: 7.into() });
        let empty = PointSet::new(vec![]).unwrap();
        assert_eq!(empty.bounding_box(), Err(Error::EmptySet));
        assert_eq!(empty.normalize(), Err(Error::EmptySet));
    }

    #[test]
    fn normalize_examples() {
        let s = PointSet::from_coords(&[(5, 7)]).unwrap();
        assert_eq!(s.normalize().unwrap().points(), &[Point::new(0, 0)]);
        let s = PointSet::from_coords(&[(1, 1), (2, 3)]).unwrap();
        let n = s.normalize().unwrap();
        assert_eq!(n.points(), &[Point::new(0, 0), Point::new(1, 2)]);
        assert_eq!(n.normalize().unwrap(), n);
    }

    #[test]
    fn normalize_keeps_order_type() {
        let s = PointSet::from_coords(&[(-4, 9), (3, 3), (7, -2), (0, 0), (11, 5)]).unwrap();
        let n = s.normalize().unwrap();
        let (a, b) = (s.points(), n.points());
        for i in 0..a.len() {
            for j in 0..a.len() {
                for k in 0..a.len() {
                    assert_eq!(orientation(&a[i], &a[j], &a[k]), orientation(&b[i], &b[j], &b[k]));
                }
            }
        }
    }

    #[test]
    fn expected_lengths() {
        assert_eq!(ConstructionParams::Pr { r: 5 }.expected_len(), 32.into());
        assert_eq!(ConstructionParams::SklBaseline { k: 5, l: 5 }.expected_len(), 20.into());
        assert_eq!(ConstructionParams::SklBaseline { k: 2, l: 7 }.expected_len(), 1.into());
        assert_eq!(ConstructionParams::EsBaseline { t: 6 }.expected_len(), 16.into());
        assert!(ConstructionParams::EsBaseline { t: 1 }.validate().is_err());
        assert!(ConstructionParams::SklOptimized { k: 1, l: 3, unit_separation: true }.validate().is_err());
    }

    #[test]
    fn labels() {
        let p = ConstructionParams::EsOptimized { t: 6, unit_separation: true };
        assert_eq!(p.to_string(), "ES_OPTIMIZED t=6");
        assert_eq!(ConstructionParams::SklBaseline { k: 4, l: 3 }.to_string(), "SKL_BASELINE k=4 l=3");
    }
}
