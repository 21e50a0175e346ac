//! Erdős–Szekeres extremal point sets on small integer grids, with exact
//! verifiers for cups, caps and convex polygons.

pub mod arith;
pub mod cli;
pub mod construct;
pub mod error;
pub mod io;
pub mod pointset;
pub mod svg;
pub mod verify;

pub use arith::{
    orientation, point_side, quad_ceil, quad_compare, slope_compare, GridBounds, Line, Orientation, Point, QuadValue,
    Side,
};
pub use construct::build;
pub use error::{Error, Result};
pub use pointset::{bounding_box, normalize, ConstructionParams, PointSet, Span};
