//! The constructive core: one-point insertion, whole-family adjustment,
//! compatibility of partial families, Δ-system extraction and interpolation
//! of `(ω, ω)` towers.

mod compat;
mod gap;
mod insertion;
mod sunflower;

pub use compat::{conditions_compatible, merge_conditions};
pub use gap::{interpolate_gap, GapInterpolation};
pub use insertion::{
    adjust_family, adjust_family_with, density_step, insert_point, receipt_bound, AdjustmentReport,
    InsertionOrder, InsertionReceipt,
};
pub use sunflower::{delta_system_extract, SunflowerDecomposition};
