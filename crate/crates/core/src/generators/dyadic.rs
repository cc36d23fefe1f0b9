use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::chain_core::{ChainFamily, GroundSet, IndexValue, SetBits};
use crate::error::{Error, Result};

/// Largest supported depth; keeps the ground set at a few million elements.
pub const MAX_DEPTH: u32 = 22;

/// The dyadics `k / 2^d`, `0 < k < 2^d`, enumerated increasingly: ground
/// element `n` stands for `(n + 1) / 2^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DyadicGround {
    depth: u32,
}

impl DyadicGround {
    pub fn new(depth: u32) -> Result<Self> {
        if depth == 0 || depth > MAX_DEPTH {
            return Err(Error::DepthOutOfRange {
                depth,
                max: MAX_DEPTH,
            });
        }
        Ok(DyadicGround { depth })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn size(&self) -> usize {
        (1usize << self.depth) - 1
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.size()).expect("depth >= 1")
    }

    pub fn value(&self, n: usize) -> IndexValue {
        IndexValue::new(n as i64 + 1, 1i64 << self.depth).expect("power of two")
    }

    /// Ground element of a dyadic in `(0, 1)` of depth at most `d`.
    pub fn element_of(&self, q: &IndexValue) -> Option<usize> {
        if !q.is_dyadic_at_depth(self.depth) {
            return None;
        }
        let scaled = q.as_rational() * BigInt::from(1u64 << self.depth);
        let k = scaled.to_integer().to_usize()?;
        (1..=self.size()).contains(&k).then(|| k - 1)
    }
}

/// A point `x = 0.x₁x₂…x_L` of `(0, 1)` given by finitely many binary digits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitIndex {
    bits: Vec<bool>,
}

impl BitIndex {
    pub fn new(bits: Vec<bool>) -> Self {
        BitIndex { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `Σ x_i 2^{-i}` over the stored digits.
    pub fn value(&self) -> IndexValue {
        prefix_value(&self.bits)
    }

    /// Integer formed by the first `depth` digits; `floor(x · 2^depth)`.
    fn prefix_integer(&self, depth: u32) -> usize {
        self.bits[..depth as usize]
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | b as usize)
    }
}

/// Value of `0.b₁…b_k`.
fn prefix_value(bits: &[bool]) -> IndexValue {
    let mut numer = BigInt::zero();
    for &b in bits {
        numer <<= 1;
        if b {
            numer += 1;
        }
    }
    IndexValue::new(numer, BigInt::one() << bits.len()).expect("power of two")
}

impl FromStr for BitIndex {
    type Err = Error;

    /// Accepts `01101` or `0.01101`.
    fn from_str(s: &str) -> Result<Self> {
        let digits = s.trim().strip_prefix("0.").unwrap_or(s.trim());
        if digits.is_empty() {
            return Err(Error::ParseBits(s.to_string()));
        }
        digits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::ParseBits(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitIndex::new)
    }
}

impl fmt::Display for BitIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitIndex(0.{self})")
    }
}

fn check_bit_index(x: &BitIndex, ground: &DyadicGround) -> Result<()> {
    if x.len() < ground.depth() as usize {
        return Err(Error::BitWordTooShort {
            len: x.len(),
            depth: ground.depth(),
        });
    }
    let value = x.value();
    if value.is_dyadic_at_depth(ground.depth()) {
        return Err(Error::DyadicIndex {
            point: value,
            depth: ground.depth(),
        });
    }
    Ok(())
}

/// `S_x ∩ ground`: the points `0.x₁…x_k0` with `x_{k+1} = 1`, `k < d`.
/// The value `0` (no `1` among `x₁…x_k`) lies outside the ground and is dropped.
pub fn s_set(x: &BitIndex, ground: &DyadicGround) -> Result<SetBits> {
    check_bit_index(x, ground)?;
    let mut set = SetBits::empty(ground.ground());
    let mut prefix = 0usize;
    for k in 0..ground.depth() as usize {
        // prefix = integer value of x₁…x_k
        if x.bits[k] && prefix != 0 {
            // 0.x₁…x_k0 = prefix · 2 / 2^{k+1} = prefix · 2^{d-k} / 2^d
            let scaled = prefix << (ground.depth() as usize - k);
            set.insert(scaled - 1);
        }
        prefix = (prefix << 1) | x.bits[k] as usize;
    }
    Ok(set)
}

/// `A'_x = {q ∈ ground : q < x, q ∉ S_x}` for each `x`.
pub fn marciszewski_family(xs: &[BitIndex], ground: &DyadicGround) -> Result<ChainFamily> {
    let entries = xs
        .iter()
        .map(|x| {
            let s = s_set(x, ground)?;
            // q = (n+1)/2^d < x  ⇔  n + 1 ≤ floor(x·2^d), since x·2^d is not an integer
            let below = x.prefix_integer(ground.depth());
            let mut set = SetBits::from_elements(ground.ground(), 0..below)?;
            set.difference_with(&s);
            Ok((x.value(), set))
        })
        .collect::<Result<Vec<_>>>()?;
    ChainFamily::new(ground.ground(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitIndex {
        s.parse().unwrap()
    }

    #[test]
    fn ground_enumeration() {
        let g = DyadicGround::new(3).unwrap();
        assert_eq!(g.size(), 7);
        let values: Vec<String> = (0..7).map(|n| g.value(n).to_string()).collect();
        assert_eq!(values, ["1/8", "1/4", "3/8", "1/2", "5/8", "3/4", "7/8"]);
        assert_eq!(g.element_of(&IndexValue::ratio(3, 4)), Some(5));
        assert_eq!(g.element_of(&IndexValue::ratio(1, 16)), None);
        assert_eq!(g.element_of(&IndexValue::integer(0)), None);
        assert!(DyadicGround::new(0).is_err());
        assert!(DyadicGround::new(MAX_DEPTH + 1).is_err());
    }

    #[test]
    fn bit_index_value() {
        assert_eq!(bits("01101").value(), IndexValue::ratio(13, 32));
        assert_eq!(bits("0.1").value(), IndexValue::ratio(1, 2));
        assert!("012".parse::<BitIndex>().is_err());
        assert!("".parse::<BitIndex>().is_err());
    }

    #[test]
    fn s_set_of_01101_at_depth_5() {
        let g = DyadicGround::new(5).unwrap();
        // depth-5 word would be dyadic; extend with a trailing 1
        let x = bits("011011");
        let s = s_set(&x, &g).unwrap();
        let values: Vec<IndexValue> = s.iter().map(|n| g.value(n)).collect();
        assert_eq!(
            values,
            vec![IndexValue::ratio(1, 4), IndexValue::ratio(3, 8)]
        );
    }

    #[test]
    fn zero_prefix_has_small_s_set() {
        let g = DyadicGround::new(4).unwrap();
        let x = bits("000001");
        assert!(s_set(&x, &g).unwrap().len() <= 1);
        let fam = marciszewski_family(std::slice::from_ref(&x), &g).unwrap();
        assert!(fam.sets()[0].is_empty());
    }

    #[test]
    fn rejects_bad_words() {
        let g = DyadicGround::new(4).unwrap();
        assert_eq!(
            marciszewski_family(&[bits("011")], &g),
            Err(Error::BitWordTooShort { len: 3, depth: 4 })
        );
        assert!(matches!(
            marciszewski_family(&[bits("01100000")], &g),
            Err(Error::DyadicIndex { .. })
        ));
        assert!(matches!(
            marciszewski_family(&[bits("00000")], &g),
            Err(Error::DyadicIndex { .. })
        ));
        assert!(matches!(
            marciszewski_family(&[bits("01101"), bits("011010")], &g),
            Err(Error::DuplicateIndex(_))
        ));
    }

    #[test]
    fn sets_follow_the_definition() {
        let g = DyadicGround::new(4).unwrap();
        let xs = [bits("0110101"), bits("1011001"), bits("0010011")];
        let fam = marciszewski_family(&xs, &g).unwrap();
        for x in &xs {
            let s = s_set(x, &g).unwrap();
            let set = fam.set_at(&x.value()).unwrap();
            for n in 0..g.size() {
                let expected = g.value(n) < x.value() && !s.contains(n);
                assert_eq!(set.contains(n), expected, "x={x} n={n}");
            }
        }
    }
}
