//! Deterministic constructions of the extremal point sets.

mod es;
mod placement;
mod pr;
mod skl;

pub use es::{build_es_baseline, build_es_optimized, es_baseline_grid_bound};
pub use pr::{bridge_line, build_pr, level_geometry, optimized_x_extents, pr_points, LevelGeometry};
pub use skl::{build_skl_baseline, build_skl_optimized, skl_baseline_points};

use crate::error::Result;
use crate::pointset::{ConstructionParams, PointSet};

pub fn build(params: ConstructionParams) -> Result<PointSet> {
    params.validate()?;
    match params {
        ConstructionParams::Pr { r } => Ok(build_pr(r)),
        ConstructionParams::SklBaseline { k, l } => build_skl_baseline(k, l),
        ConstructionParams::SklOptimized { k, l, unit_separation } => build_skl_optimized(k, l, unit_separation),
        ConstructionParams::EsBaseline { t } => build_es_baseline(t),
        ConstructionParams::EsOptimized { t, unit_separation } => build_es_optimized(t, unit_separation),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch_is_deterministic() {
        for p in [
            ConstructionParams::Pr { r: 4 },
            ConstructionParams::SklBaseline { k: 5, l: 4 },
            ConstructionParams::SklOptimized { k: 5, l: 4, unit_separation: true },
            ConstructionParams::EsBaseline { t: 5 },
            ConstructionParams::EsOptimized { t: 5, unit_separation: false },
        ] {
            let a = build(p).unwrap();
            assert_eq!(a, build(p).unwrap());
            assert_eq!(a.params(), Some(&p));
        }
    }
}
