use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// The truncation `{0, …, N-1}` standing in for ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
}

impl GroundSet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyGround);
        }
        Ok(GroundSet { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn check_element(&self, n: usize) -> Result<()> {
        if n < self.size {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { n, size: self.size })
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }
}

/// A subset of a [`GroundSet`], one bit per ground element.
///
/// All binary operations require both operands to live over the same ground;
/// mixing grounds is a programming error and panics. Fallible entry points
/// ([`SetBits::ensure_same_ground`]) exist for data coming from outside.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetBits {
    bits: FixedBitSet,
}

impl SetBits {
    pub fn empty(ground: GroundSet) -> Self {
        SetBits {
            bits: FixedBitSet::with_capacity(ground.size()),
        }
    }

    pub fn full(ground: GroundSet) -> Self {
        let mut bits = FixedBitSet::with_capacity(ground.size());
        bits.insert_range(..);
        SetBits { bits }
    }

    pub fn from_elements<I>(ground: GroundSet, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = SetBits::empty(ground);
        for n in elements {
            ground.check_element(n)?;
            set.bits.insert(n);
        }
        Ok(set)
    }

    /// Builds a set from a 0/1 mask, one entry per ground element.
    pub fn from_mask(mask: &[bool]) -> Result<Self> {
        let ground = GroundSet::new(mask.len())?;
        SetBits::from_elements(
            ground,
            mask.iter().enumerate().filter(|(_, b)| **b).map(|(n, _)| n),
        )
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet {
            size: self.bits.len(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, n: usize) -> bool {
        self.bits.contains(n)
    }

    pub fn insert(&mut self, n: usize) {
        self.bits.insert(n);
    }

    pub fn remove(&mut self, n: usize) {
        self.bits.set(n, false);
    }

    pub fn toggle(&mut self, n: usize) {
        self.bits.toggle(n);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn ensure_same_ground(&self, other: &SetBits) -> Result<()> {
        if self.ground_size() == other.ground_size() {
            Ok(())
        } else {
            Err(Error::GroundMismatch {
                expected: self.ground_size(),
                found: other.ground_size(),
            })
        }
    }

    fn assert_same_ground(&self, other: &SetBits) {
        assert_eq!(
            self.ground_size(),
            other.ground_size(),
            "set operation across different ground sets"
        );
    }

    pub fn union(&self, other: &SetBits) -> SetBits {
        self.assert_same_ground(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        SetBits { bits }
    }

    pub fn intersection(&self, other: &SetBits) -> SetBits {
        self.assert_same_ground(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        SetBits { bits }
    }

    pub fn difference(&self, other: &SetBits) -> SetBits {
        self.assert_same_ground(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        SetBits { bits }
    }

    pub fn symmetric_difference(&self, other: &SetBits) -> SetBits {
        self.assert_same_ground(other);
        let mut bits = self.bits.clone();
        bits.symmetric_difference_with(&other.bits);
        SetBits { bits }
    }

    pub fn complement(&self) -> SetBits {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        SetBits { bits }
    }

    pub fn union_with(&mut self, other: &SetBits) {
        self.assert_same_ground(other);
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &SetBits) {
        self.assert_same_ground(other);
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &SetBits) -> bool {
        self.assert_same_ground(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &SetBits) -> bool {
        self.assert_same_ground(other);
        self.bits.is_disjoint(&other.bits)
    }
}

impl fmt::Debug for SetBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetBits[{}]", self.ground_size())?;
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for SetBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, n) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}
