//! Exact data model for finite-scale almost chains and the decision
//! procedures for the chain, barely-alternating and defect properties.
//!
//! `ω` is truncated to a [`GroundSet`] `{0, …, N-1}`. Since `⊆*` is vacuous on
//! finite sets, almost inclusion is measured through explicit defect sets
//! `A_x ∖ A_y` and a caller-chosen budget.

mod bits;
mod checks;
mod family;
mod index;

pub use bits::{GroundSet, SetBits};
pub use checks::{
    chain_defect_set, defect, find_alternation, find_exit, flip_count, is_barely_alternating,
    is_chain, membership_trace, validate_almost_chain, AlternationWitness, ChainWitness,
    DefectReport, PairDefect, Verdict,
};
pub use family::{ChainFamily, Condition, Trace};
pub use index::{format_rational, parse_rational, IndexValue};
