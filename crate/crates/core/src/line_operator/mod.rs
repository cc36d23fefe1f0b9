//! Triples, the extension operator `E` and its norm on finite line models.

mod harness;
mod model;
mod operator;
mod triples;

pub use harness::{continuity_harness, HarnessReport, HarnessRow, ScheduleStep};
pub use model::{ExtendedFunction, FunctionOnLine, LineModel};
pub use operator::{apply_operator, norm_witness, operator_norm};
pub use triples::{
    compute_triples, compute_triples_unchecked, limit_eval_point, no_fourth_flip_check,
    ExitWitness, Triple, TriplePattern, TripleTable,
};
