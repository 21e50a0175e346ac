//! Point-set files: plain text (`x y` per line) and a JSON document that
//! also records provenance and, optionally, a verification summary.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::Point;
use crate::error::{Error, Result};
use crate::pointset::{ConstructionParams, PointSet, Span};
use crate::verify::VerificationReport;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "txt" | "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidParams(format!("unknown format {other:?}"))),
        }
    }
}

/// JSON if the first non-blank byte opens an object, text otherwise.
pub fn detect_format(bytes: &[u8]) -> Format {
    match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b'{') => Format::Json,
        _ => Format::Text,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    pub points: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<BlockInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionInfo {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_separation: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Points `start..end` form the block `label`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockInfo {
    pub label: String,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub n: usize,
    pub width: String,
    pub height: String,
    pub general_position: bool,
    pub max_cup: usize,
    pub max_cap: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_convex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_empty_convex: Option<usize>,
}

impl From<&VerificationReport> for ReportSummary {
    fn from(r: &VerificationReport) -> Self {
        ReportSummary {
            n: r.n,
            width: r.bounds.width.to_string(),
            height: r.bounds.height.to_string(),
            general_position: r.general_position,
            max_cup: r.max_cup.size,
            max_cap: r.max_cap.size,
            max_convex: r.max_convex.as_ref().map(|p| p.size),
            max_empty_convex: r.max_empty_convex.as_ref().map(|p| p.size),
        }
    }
}

impl From<&ConstructionParams> for ConstructionInfo {
    fn from(p: &ConstructionParams) -> Self {
        let mut info = ConstructionInfo {
            kind: p.kind().to_string(),
            r: None,
            k: None,
            l: None,
            t: None,
            unit_separation: p.unit_separation(),
            label: Some(p.to_string()),
        };
        match *p {
            ConstructionParams::Pr { r } => info.r = Some(r),
            ConstructionParams::SklBaseline { k, l } | ConstructionParams::SklOptimized { k, l, .. } => {
                info.k = Some(k);
                info.l = Some(l);
            }
            ConstructionParams::EsBaseline { t } | ConstructionParams::EsOptimized { t, .. } => info.t = Some(t),
        }
        info
    }
}

impl TryFrom<&ConstructionInfo> for ConstructionParams {
    type Error = Error;

    fn try_from(c: &ConstructionInfo) -> Result<Self> {
        let need = |v: Option<u32>, name: &str| {
            v.ok_or_else(|| Error::InvalidParams(format!("construction {} is missing {name}", c.kind)))
        };
        let unit_separation = c.unit_separation.unwrap_or(true);
        let params = match c.kind.as_str() {
            "PR" => ConstructionParams::Pr { r: need(c.r, "r")? },
            "SKL_BASELINE" => ConstructionParams::SklBaseline { k: need(c.k, "k")?, l: need(c.l, "l")? },
            "SKL_OPTIMIZED" => {
                ConstructionParams::SklOptimized { k: need(c.k, "k")?, l: need(c.l, "l")?, unit_separation }
            }
            "ES_BASELINE" => ConstructionParams::EsBaseline { t: need(c.t, "t")? },
            "ES_OPTIMIZED" => ConstructionParams::EsOptimized { t: need(c.t, "t")?, unit_separation },
            other => return Err(Error::InvalidParams(format!("unknown construction kind {other:?}"))),
        };
        params.validate()?;
        Ok(params)
    }
}

impl PointSetDocument {
    pub fn new(s: &PointSet, report: Option<&VerificationReport>) -> Self {
        PointSetDocument {
            format_version: FORMAT_VERSION,
            construction: s.params().map(ConstructionInfo::from),
            count: Some(s.len()),
            points: s.points().iter().map(|p| [p.x.to_string(), p.y.to_string()]).collect(),
            blocks: s
                .spans()
                .iter()
                .map(|b| BlockInfo { label: b.label.clone(), start: b.range.start, end: b.range.end })
                .collect(),
            report: report.map(ReportSummary::from),
        }
    }

    pub fn into_point_set(self) -> Result<PointSet> {
        if let Some(c) = self.count {
            if c != self.points.len() {
                return Err(Error::Parse { line: 0, msg: format!("count {c} but {} points", self.points.len()) });
            }
        }
        let mut points = Vec::with_capacity(self.points.len());
        for (i, [x, y]) in self.points.iter().enumerate() {
            let coord = |v: &str| {
                parse_int(v).ok_or_else(|| Error::Parse { line: 0, msg: format!("point {i}: bad coordinate {v:?}") })
            };
            points.push(Point { x: coord(x)?, y: coord(y)? });
        }
        let mut s = PointSet::new(points)?;
        if let Some(c) = &self.construction {
            s = s.with_params(ConstructionParams::try_from(c)?);
        }
        let spans = self.blocks.into_iter().map(|b| Span { range: b.start..b.end, label: b.label }).collect();
        s.with_spans(spans)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn serialize(s: &PointSet, format: Format) -> Result<Vec<u8>> {
    serialize_with_report(s, format, None)
}

/// The report is only embedded in JSON.
pub fn serialize_with_report(s: &PointSet, format: Format, report: Option<&VerificationReport>) -> Result<Vec<u8>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    match format {
        Format::Text => {
            let mut out = String::new();
            for p in s.points() {
                out.push_str(&format!("{} {}\n", p.x, p.y));
            }
            Ok(out.into_bytes())
        }
        Format::Json => {
            let doc = PointSetDocument::new(s, report);
            let mut out = serde_json::to_vec_pretty(&doc).expect("document serializes");
            out.push(b'\n');
            Ok(out)
        }
    }
}

pub fn deserialize(bytes: &[u8], format: Format) -> Result<PointSet> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    match format {
        Format::Text => parse_text(text),
        Format::Json => {
            let doc: PointSetDocument =
                serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
            doc.into_point_set()
        }
    }
}

/// Blank lines are skipped; every other line holds exactly two integers.
fn parse_text(text: &str) -> Result<PointSet> {
    let mut points = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => continue,
            [x, y] => {
                let coord = |v: &str| {
                    parse_int(v).ok_or_else(|| Error::Parse { line: line_no, msg: format!("bad integer {v:?}") })
                };
                points.push(Point { x: coord(x)?, y: coord(y)? });
            }
            _ => {
                return Err(Error::Parse { line: line_no, msg: format!("expected two integers, got {}", fields.len()) })
            }
        }
    }
    PointSet::new(points)
}
