use crate::chain_core::{
    is_barely_alternating, AlternationWitness, ChainFamily, Condition, Verdict,
};
use crate::error::{Error, Result};

/// Union of two conditions that agree on their shared indices.
pub fn merge_conditions(c1: &Condition, c2: &Condition) -> Result<ChainFamily> {
    let (f1, f2) = (c1.family(), c2.family());
    if f1.ground_size() != f2.ground_size() {
        return Err(Error::GroundMismatch {
            expected: f1.ground_size(),
            found: f2.ground_size(),
        });
    }
    let mut entries: Vec<_> = f1.entries().map(|(x, s)| (x.clone(), s.clone())).collect();
    for (x, set) in f2.entries() {
        match f1.set_at(x) {
            Some(existing) if existing != set => {
                return Err(Error::ConflictingSharedIndex(x.clone()));
            }
            Some(_) => {}
            None => entries.push((x.clone(), set.clone())),
        }
    }
    ChainFamily::new(f1.ground(), entries)
}

/// Two conditions are compatible when the merged family is barely
/// alternating; the least alternation witness is returned otherwise.
pub fn conditions_compatible(
    c1: &Condition,
    c2: &Condition,
) -> Result<Verdict<AlternationWitness>> {
    merge_conditions(c1, c2).map(|merged| is_barely_alternating(&merged))
}
