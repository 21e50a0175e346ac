use std::fmt;

use num_bigint::BigInt;

use super::chains::{longest_chain, Chain};
use super::convex::{max_convex_subset, max_empty_convex_subset, Polygon};
use super::kernel::{with_coords, Planar};
use super::witness::{is_chain, is_convex_ccw, is_empty_polygon};
use super::{brute_force_max_convex, check_general_position};
use crate::arith::{GridBounds, Orientation};
use crate::construct::es_baseline_grid_bound;
use crate::error::{Error, Result};
use crate::pointset::{ConstructionParams, PointSet};

/// Everything the verifiers measure about one point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub bounds: GridBounds,
    pub general_position: bool,
    pub collinear_witness: Option<[usize; 3]>,
    pub max_cup: Chain,
    pub max_cap: Chain,
    /// `None` when the set is not in general position.
    pub max_convex: Option<Polygon>,
    /// Only computed on request, and only in general position.
    pub max_empty_convex: Option<Polygon>,
}

pub fn full_report(s: &PointSet, include_empty: bool) -> Result<VerificationReport> {
    let points = s.points();
    let bounds = s.bounding_box()?;
    let collinear_witness = match check_general_position(points) {
        Ok(()) => None,
        Err(Error::NotGeneralPosition(w)) => Some(w),
        Err(e) => return Err(e),
    };
    let general_position = collinear_witness.is_none();
    let (max_cup, max_cap) = with_coords!(points, |pts| (
        longest_chain(pts, Orientation::LeftTurn)?,
        longest_chain(pts, Orientation::RightTurn)?
    ));
    let max_convex = if general_position { Some(max_convex_subset(points)?) } else { None };
    let max_empty_convex =
        if general_position && include_empty { Some(max_empty_convex_subset(points)?) } else { None };
    let report = VerificationReport {
        n: points.len(),
        bounds,
        general_position,
        collinear_witness,
        max_cup,
        max_cap,
        max_convex,
        max_empty_convex,
    };
    with_coords!(points, |pts| audit(pts, &report))?;
    Ok(report)
}

/// Re-check every witness directly and the ordering between the maxima.
fn audit<P: Planar>(pts: &[P], r: &VerificationReport) -> Result<()> {
    let bad = |what: &str| Err(Error::InvalidWitness(what.to_string()));
    if let Some([i, j, k]) = r.collinear_witness {
        if P::orient(&pts[i], &pts[j], &pts[k]) != Orientation::Collinear {
            return bad("collinear triple is not collinear");
        }
    }
    for (chain, turn, name) in [(&r.max_cup, Orientation::LeftTurn, "cup"), (&r.max_cap, Orientation::RightTurn, "cap")]
    {
        if chain.witness.len() != chain.size || !is_chain(pts, &chain.witness, turn) {
            return bad(name);
        }
    }
    if let Some(poly) = &r.max_convex {
        if poly.witness.len() != poly.size || !is_convex_ccw(pts, &poly.witness) {
            return bad("convex polygon");
        }
        if r.max_cup.size > poly.size || r.max_cap.size > poly.size || poly.size > r.n {
            return bad("maxima out of order");
        }
        if let Some(e) = &r.max_empty_convex {
            if e.witness.len() != e.size || !is_convex_ccw(pts, &e.witness) || !is_empty_polygon(pts, &e.witness) {
                return bad("empty polygon");
            }
            if e.size > poly.size {
                return bad("empty polygon larger than convex maximum");
            }
        }
    }
    Ok(())
}

/// One property a construction promises, and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Claim { name: name.to_string(), passed, detail }
    }
}

/// The properties promised for a set built with `params` (or, when the
/// provenance is unknown, just general position), checked against `report`.
pub fn check_claims(s: &PointSet, report: &VerificationReport) -> Vec<Claim> {
    let mut claims = vec![Claim::new(
        "general position",
        report.general_position,
        match report.collinear_witness {
            Some(w) => format!("collinear triple {w:?}"),
            None => "no three points collinear".into(),
        },
    )];
    let Some(params) = s.params() else { return claims };
    let expected = params.expected_len();
    claims.push(Claim::new(
        "point count",
        BigInt::from(report.n) == expected,
        format!("{} points, expected {expected}", report.n),
    ));
    match *params {
        ConstructionParams::Pr { r } => {
            let x = (BigInt::from(1) << (2 * r)) - 1;
            let y = BigInt::from(r) << (2 * r);
            let ok = report.bounds.width == x && report.bounds.height == y;
            claims.push(Claim::new("bounding box", ok, format!("{}, expected {x} x {y}", report.bounds)));
        }
        ConstructionParams::SklBaseline { k, l } | ConstructionParams::SklOptimized { k, l, .. } => {
            let cup = report.max_cup.size;
            let cap = report.max_cap.size;
            claims.push(Claim::new("no k-cup", cup < k as usize, format!("max cup {cup}, k = {k}")));
            claims.push(Claim::new("no l-cap", cap < l as usize, format!("max cap {cap}, l = {l}")));
        }
        ConstructionParams::EsBaseline { t } | ConstructionParams::EsOptimized { t, .. } => {
            let (ok, detail) = match &report.max_convex {
                Some(p) => (p.size < t as usize, format!("max convex {}, t = {t}", p.size)),
                None => (false, "not in general position".into()),
            };
            claims.push(Claim::new("no convex t-gon", ok, detail));
            if matches!(params, ConstructionParams::EsBaseline { .. }) {
                let bound = es_baseline_grid_bound(t);
                let ok = report.bounds.width <= bound && report.bounds.height <= bound;
                claims.push(Claim::new("grid bound", ok, format!("{}, bound {bound}", report.bounds)));
            }
        }
    }
    claims
}

/// Compares the convex maximum with the exhaustive oracle.
pub fn oracle_claim(s: &PointSet, report: &VerificationReport) -> Claim {
    match (brute_force_max_convex(s.points()), &report.max_convex) {
        (Ok(b), Some(p)) => Claim::new("oracle agreement", b == p.size, format!("dp {}, brute force {b}", p.size)),
        (Err(e), _) => Claim::new("oracle agreement", false, e.to_string()),
        (Ok(_), None) => Claim::new("oracle agreement", false, "no convex maximum to compare".into()),
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points:           {}", self.n)?;
        writeln!(f, "bounds:           {}", self.bounds)?;
        match self.collinear_witness {
            None => writeln!(f, "general position: yes")?,
            Some(w) => writeln!(f, "general position: no, collinear {w:?}")?,
        }
        writeln!(f, "max cup:          {} {:?}", self.max_cup.size, self.max_cup.witness)?;
        writeln!(f, "max cap:          {} {:?}", self.max_cap.size, self.max_cap.witness)?;
        if let Some(p) = &self.max_convex {
            writeln!(f, "max convex:       {} {:?}", p.size, p.witness)?;
        }
        if let Some(p) = &self.max_empty_convex {
            writeln!(f, "max empty convex: {} {:?}", p.size, p.witness)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point() {
        let s = PointSet::from_coords(&[(0, 0)]).unwrap();
        let r = full_report(&s, true).unwrap();
        assert_eq!(r.n, 1);
        assert!(r.general_position);
        assert_eq!(r.max_convex.unwrap().size, 1);
        assert_eq!(r.max_empty_convex.unwrap().size, 1);
    }

    #[test]
    fn collinear_set_reports_witness() {
        let s = PointSet::from_coords(&[(0, 0), (1, 1), (2, 2), (3, 0)]).unwrap();
        let r = full_report(&s, true).unwrap();
        assert!(!r.general_position);
        assert_eq!(r.collinear_witness, Some([0, 1, 2]));
        assert!(r.max_convex.is_none());
        let claims = check_claims(&s, &r);
        assert_eq!(claims.len(), 1);
        assert!(!claims[0].passed);
    }

    #[test]
    fn empty_set_is_an_error() {
        let s = PointSet::new(vec![]).unwrap();
        assert_eq!(full_report(&s, false), Err(Error::EmptySet));
    }

    #[test]
    fn duplicate_x_propagates() {
        let s = PointSet::from_coords(&[(0, 0), (0, 1), (3, 7)]).unwrap();
        assert_eq!(full_report(&s, false), Err(Error::DuplicateX(0, 1)));
    }
}
