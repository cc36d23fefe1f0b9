use std::fmt;

use crate::chain_core::{GroundSet, IndexValue, SetBits};
use crate::error::{Error, Result};

/// A finite family `{A_x : x ∈ X}` of subsets of a common ground set,
/// stored with `X` sorted.
///
/// Construction only enforces the shape invariants (sorted, duplicate-free
/// indices, one set per index, common ground). Whether the family is a chain,
/// an almost chain within some budget, or barely alternating is decided by the
/// checks in [`crate::chain_core`].
#[derive(Clone, PartialEq, Eq)]
pub struct ChainFamily {
    ground: GroundSet,
    indices: Vec<IndexValue>,
    sets: Vec<SetBits>,
}

impl ChainFamily {
    pub fn empty(ground: GroundSet) -> Self {
        ChainFamily {
            ground,
            indices: Vec::new(),
            sets: Vec::new(),
        }
    }

    /// Builds a family from `(index, set)` pairs in any order.
    pub fn new<I>(ground: GroundSet, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (IndexValue, SetBits)>,
    {
        let mut entries: Vec<(IndexValue, SetBits)> = entries.into_iter().collect();
        for (_, set) in &entries {
            if set.ground_size() != ground.size() {
                return Err(Error::GroundMismatch {
                    expected: ground.size(),
                    found: set.ground_size(),
                });
            }
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateIndex(w[0].0.clone()));
        }
        let (indices, sets) = entries.into_iter().unzip();
        Ok(ChainFamily {
            ground,
            indices,
            sets,
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.size()
    }

    pub fn indices(&self) -> &[IndexValue] {
        &self.indices
    }

    pub fn sets(&self) -> &[SetBits] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&IndexValue, &SetBits)> {
        self.indices.iter().zip(self.sets.iter())
    }

    /// Position of `x` in the sorted index list.
    pub fn position(&self, x: &IndexValue) -> Option<usize> {
        self.indices.binary_search(x).ok()
    }

    pub fn set_at(&self, x: &IndexValue) -> Option<&SetBits> {
        self.position(x).map(|i| &self.sets[i])
    }

    pub fn contains_index(&self, x: &IndexValue) -> bool {
        self.position(x).is_some()
    }

    /// Immediate neighbours of a point that is not itself an index.
    /// `Err(pos)` of the binary search is the slot `x` would occupy.
    pub(crate) fn slot(&self, x: &IndexValue) -> Result<usize> {
        match self.indices.binary_search(x) {
            Ok(_) => Err(Error::DuplicateIndex(x.clone())),
            Err(slot) => Ok(slot),
        }
    }

    pub(crate) fn insert_at(&mut self, slot: usize, x: IndexValue, set: SetBits) {
        self.indices.insert(slot, x);
        self.sets.insert(slot, set);
    }

    /// Returns a copy with `(x, set)` added.
    pub fn with_entry(&self, x: IndexValue, set: SetBits) -> Result<ChainFamily> {
        if set.ground_size() != self.ground_size() {
            return Err(Error::GroundMismatch {
                expected: self.ground_size(),
                found: set.ground_size(),
            });
        }
        let slot = self.slot(&x)?;
        let mut out = self.clone();
        out.insert_at(slot, x, set);
        Ok(out)
    }

    /// Sub-family on the indices accepted by `keep`.
    pub fn restrict<F>(&self, mut keep: F) -> ChainFamily
    where
        F: FnMut(&IndexValue) -> bool,
    {
        let (indices, sets) = self
            .entries()
            .filter(|(x, _)| keep(x))
            .map(|(x, s)| (x.clone(), s.clone()))
            .unzip();
        ChainFamily {
            ground: self.ground,
            indices,
            sets,
        }
    }

    /// Removes `removed` from every set.
    pub fn without_elements(&self, removed: &SetBits) -> ChainFamily {
        ChainFamily {
            ground: self.ground,
            indices: self.indices.clone(),
            sets: self.sets.iter().map(|s| s.difference(removed)).collect(),
        }
    }
}

impl fmt::Debug for ChainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainFamily(N={}) ", self.ground_size())?;
        f.debug_map()
            .entries(self.entries().map(|(x, s)| (x, s.to_vec())))
            .finish()
    }
}

/// A finite partial family `(F, {B_x : x ∈ F})`, the building block of
/// incremental adjustment. `F` is the family's index list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    family: ChainFamily,
}

impl Condition {
    pub fn empty(ground: GroundSet) -> Self {
        Condition {
            family: ChainFamily::empty(ground),
        }
    }

    pub fn family(&self) -> &ChainFamily {
        &self.family
    }

    pub fn into_family(self) -> ChainFamily {
        self.family
    }

    pub fn indices(&self) -> &[IndexValue] {
        self.family.indices()
    }
}

impl From<ChainFamily> for Condition {
    fn from(family: ChainFamily) -> Self {
        Condition { family }
    }
}

/// Membership of a fixed ground element along the sorted indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Trace(Vec<bool>);

impl Trace {
    pub fn new(bits: Vec<bool>) -> Self {
        Trace(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of positions where consecutive bits differ.
    pub fn flips(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl std::str::FromStr for Trace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::ParseBits(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Trace)
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trace({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    #[test]
    fn entries_are_sorted() {
        let fam = ChainFamily::new(
            g(2),
            vec![
                (
                    IndexValue::ratio(3, 4),
                    SetBits::from_elements(g(2), [1]).unwrap(),
                ),
                (IndexValue::ratio(1, 4), SetBits::empty(g(2))),
            ],
        )
        .unwrap();
        assert_eq!(
            fam.indices(),
            &[IndexValue::ratio(1, 4), IndexValue::ratio(3, 4)]
        );
        assert_eq!(fam.sets()[1].to_vec(), vec![1]);
    }

    #[test]
    fn duplicate_index_rejected() {
        let res = ChainFamily::new(
            g(2),
            vec![
                (IndexValue::ratio(1, 2), SetBits::empty(g(2))),
                (IndexValue::ratio(2, 4), SetBits::empty(g(2))),
            ],
        );
        assert_eq!(res, Err(Error::DuplicateIndex(IndexValue::ratio(1, 2))));
    }

    #[test]
    fn ground_mismatch_rejected() {
        let res = ChainFamily::new(g(2), vec![(IndexValue::integer(0), SetBits::empty(g(3)))]);
        assert_eq!(
            res,
            Err(Error::GroundMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn trace_flips() {
        let t: Trace = "0101".parse().unwrap();
        assert_eq!(t.flips(), 3);
        assert_eq!("0000".parse::<Trace>().unwrap().flips(), 0);
        assert_eq!("1010".parse::<Trace>().unwrap().flips(), 3);
        assert_eq!(t.to_string(), "0101");
        assert!("01a".parse::<Trace>().is_err());
    }
}
