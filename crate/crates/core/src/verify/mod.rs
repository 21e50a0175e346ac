//! Exact verifiers for the combinatorial properties of point sets.

mod brute;
mod chains;
mod convex;
mod general;
pub(crate) mod kernel;
mod report;
mod witness;

pub use brute::{brute_force_max_convex, BRUTE_FORCE_LIMIT};
pub use chains::{max_cap, max_cup, Chain};
pub use convex::{max_convex_subset, max_empty_convex_subset, Polygon};
pub use general::{check_general_position, is_high_above, HighAboveViolation};
pub use report::{check_claims, full_report, oracle_claim, Claim, VerificationReport};
pub use witness::convex_hull;

pub(crate) use chains::longest_chain;
pub(crate) use general::first_collinear;
