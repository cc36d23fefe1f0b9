use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chain_core::{ChainFamily, Condition, IndexValue, SetBits};
use crate::error::{Error, Result};

/// What one density step did to `A_x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionReceipt {
    pub inserted_index: IndexValue,
    pub produced_set: SetBits,
    pub predecessor: Option<IndexValue>,
    pub successor: Option<IndexValue>,
    /// `B_x Δ A_x`.
    pub delta_from_input: SetBits,
}

impl InsertionReceipt {
    pub fn cost(&self) -> usize {
        self.delta_from_input.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AdjustmentReport {
    pub receipts: Vec<InsertionReceipt>,
    pub total_cost: usize,
    pub max_cost: usize,
}

impl AdjustmentReport {
    fn from_receipts(receipts: Vec<InsertionReceipt>) -> Self {
        let total_cost = receipts.iter().map(InsertionReceipt::cost).sum();
        let max_cost = receipts
            .iter()
            .map(InsertionReceipt::cost)
            .max()
            .unwrap_or(0);
        AdjustmentReport {
            receipts,
            total_cost,
            max_cost,
        }
    }

    /// True when the cached totals agree with the receipts.
    pub fn costs_consistent(&self) -> bool {
        *self == Self::from_receipts(self.receipts.clone())
    }
}

/// `B_x = (A_x ∪ A) ∖ (A_x ∖ C)` for neighbour sets `A` (below) and `C` (above).
///
/// Pointwise, an element of `A_x` keeps the membership it has in `C`, and an
/// element outside `A_x` takes the membership it has in `A`.
pub fn density_step(a_x: &SetBits, below: &SetBits, above: &SetBits) -> SetBits {
    a_x.union(below).difference(&a_x.difference(above))
}

fn neighbours(family: &ChainFamily, slot: usize) -> (Option<usize>, Option<usize>) {
    let pred = slot.checked_sub(1);
    let succ = (slot < family.len()).then_some(slot);
    (pred, succ)
}

fn insert_into(family: &mut ChainFamily, x: IndexValue, a_x: &SetBits) -> Result<InsertionReceipt> {
    if a_x.ground_size() != family.ground_size() {
        return Err(Error::GroundMismatch {
            expected: family.ground_size(),
            found: a_x.ground_size(),
        });
    }
    let slot = family.slot(&x)?;
    let (pred, succ) = neighbours(family, slot);
    let ground = family.ground();
    let empty;
    let full;
    let below = match pred {
        Some(i) => &family.sets()[i],
        None => {
            empty = SetBits::empty(ground);
            &empty
        }
    };
    let above = match succ {
        Some(i) => &family.sets()[i],
        None => {
            full = SetBits::full(ground);
            &full
        }
    };
    let produced = density_step(a_x, below, above);
    let receipt = InsertionReceipt {
        inserted_index: x.clone(),
        delta_from_input: produced.symmetric_difference(a_x),
        produced_set: produced.clone(),
        predecessor: pred.map(|i| family.indices()[i].clone()),
        successor: succ.map(|i| family.indices()[i].clone()),
    };
    family.insert_at(slot, x, produced);
    Ok(receipt)
}

/// Extends `cond` by the index `x`, carrying `A_x` through [`density_step`]
/// with the sets at the immediate neighbours of `x` in `cond` (`∅` below the
/// least index, the full ground above the greatest).
pub fn insert_point(
    cond: &Condition,
    x: IndexValue,
    a_x: &SetBits,
) -> Result<(Condition, InsertionReceipt)> {
    let mut family = cond.family().clone();
    let receipt = insert_into(&mut family, x, a_x)?;
    Ok((Condition::from(family), receipt))
}

/// Order in which [`adjust_family`] visits the indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InsertionOrder {
    Sorted,
    Given(Vec<IndexValue>),
    /// Uniform shuffle of the sorted indices, seeded.
    Random(u64),
}

impl InsertionOrder {
    pub fn resolve(&self, family: &ChainFamily) -> Vec<IndexValue> {
        match self {
            InsertionOrder::Sorted => family.indices().to_vec(),
            InsertionOrder::Given(order) => order.clone(),
            InsertionOrder::Random(seed) => {
                let mut order = family.indices().to_vec();
                order.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
                order
            }
        }
    }
}

impl fmt::Display for InsertionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InsertionOrder::Sorted => f.write_str("sorted"),
            InsertionOrder::Given(_) => f.write_str("given"),
            InsertionOrder::Random(seed) => write!(f, "random({seed})"),
        }
    }
}

fn check_permutation(input: &ChainFamily, order: &[IndexValue]) -> Result<()> {
    if order.len() != input.len() {
        return Err(Error::NotAPermutation(format!(
            "{} entries for {} indices",
            order.len(),
            input.len()
        )));
    }
    let mut seen = vec![false; input.len()];
    for x in order {
        let pos = input
            .position(x)
            .ok_or_else(|| Error::NotAPermutation(format!("{x} is not an index")))?;
        if std::mem::replace(&mut seen[pos], true) {
            return Err(Error::NotAPermutation(format!("{x} repeated")));
        }
    }
    Ok(())
}

/// Rebuilds `input` one index at a time, starting from the empty condition.
///
/// Each inserted bit copies the membership of an already placed neighbour
/// (or the `∅` / full-ground sentinels), so the output never contains the
/// pattern `1,0,1,0` along any trace.
pub fn adjust_family(
    input: &ChainFamily,
    order: &[IndexValue],
) -> Result<(ChainFamily, AdjustmentReport)> {
    check_permutation(input, order)?;
    let mut family = ChainFamily::empty(input.ground());
    let mut receipts = Vec::with_capacity(order.len());
    for x in order {
        let a_x = input.set_at(x).expect("checked permutation");
        receipts.push(insert_into(&mut family, x.clone(), a_x)?);
    }
    Ok((family, AdjustmentReport::from_receipts(receipts)))
}

pub fn adjust_family_with(
    input: &ChainFamily,
    order: &InsertionOrder,
) -> Result<(ChainFamily, AdjustmentReport)> {
    adjust_family(input, &order.resolve(input))
}

/// `(A ∖ A_x) ∪ (A_x ∖ C)` with the neighbour sets a receipt was built from,
/// recovered from the final family (placed sets are never modified).
pub fn receipt_bound(
    output: &ChainFamily,
    receipt: &InsertionReceipt,
    a_x: &SetBits,
) -> Result<SetBits> {
    let ground = output.ground();
    let lookup = |x: &IndexValue| {
        output
            .set_at(x)
            .cloned()
            .ok_or_else(|| Error::MissingIndex(x.clone()))
    };
    let below = match &receipt.predecessor {
        Some(y) => lookup(y)?,
        None => SetBits::empty(ground),
    };
    let above = match &receipt.successor {
        Some(z) => lookup(z)?,
        None => SetBits::full(ground),
    };
    Ok(below.difference(a_x).union(&a_x.difference(&above)))
}
