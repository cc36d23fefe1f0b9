//! Decision procedures over a [`ChainFamily`]: chain, barely alternating and
//! pairwise defect budgets.
//!
//! Every check works on membership traces: for a ground element `n`, the bit
//! string recording `n ∈ A_x` along the sorted indices. Witnesses are always
//! the lexicographically least ones (least `n`, then least index tuple).

use std::fmt;

use crate::chain_core::{ChainFamily, IndexValue, SetBits, Trace};
use crate::error::{Error, Result};

/// Outcome of a check: either the property holds or a least witness refutes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Ok,
    Witness(W),
}

impl<W> Verdict<W> {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Ok => None,
            Verdict::Witness(w) => Some(w),
        }
    }

    pub fn into_result(self, err: impl FnOnce(W) -> Error) -> Result<()> {
        match self {
            Verdict::Ok => Ok(()),
            Verdict::Witness(w) => Err(err(w)),
        }
    }
}

impl<W: fmt::Display> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Ok => f.write_str("ok"),
            Verdict::Witness(w) => write!(f, "witness {w}"),
        }
    }
}

/// `n ∈ A_{x1} ∖ A_{x2}` and `n ∈ A_{x3} ∖ A_{x4}` with `x1 < x2 < x3 < x4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternationWitness {
    pub n: usize,
    pub indices: [IndexValue; 4],
}

impl fmt::Display for AlternationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.indices;
        write!(f, "n={} x1={a} x2={b} x3={c} x4={d}", self.n)
    }
}

/// `n ∈ A_x ∖ A_y` with `x < y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWitness {
    pub n: usize,
    pub x: IndexValue,
    pub y: IndexValue,
}

impl fmt::Display for ChainWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} x={} y={}", self.n, self.x, self.y)
    }
}

pub fn membership_trace(family: &ChainFamily, n: usize) -> Result<Trace> {
    family.ground().check_element(n)?;
    Ok(trace_unchecked(family, n))
}

pub(crate) fn trace_unchecked(family: &ChainFamily, n: usize) -> Trace {
    Trace::new(family.sets().iter().map(|s| s.contains(n)).collect())
}

pub fn flip_count(family: &ChainFamily, n: usize) -> Result<usize> {
    membership_trace(family, n).map(|t| t.flips())
}

const ALTERNATION: [bool; 4] = [true, false, true, false];

/// Scans a trace with the four-state subsequence automaton for `1,0,1,0`.
///
/// State `k` means the first `k` symbols of the pattern have been matched
/// greedily; the recorded positions are the lexicographically least
/// occurrence when one exists.
pub fn find_alternation(bits: &[bool]) -> Option<[usize; 4]> {
    let mut positions = [0usize; 4];
    let mut state = 0;
    for (i, &b) in bits.iter().enumerate() {
        if b == ALTERNATION[state] {
            positions[state] = i;
            state += 1;
            if state == 4 {
                return Some(positions);
            }
        }
    }
    None
}

/// Least `(i, j)` with `bits[i] = 1`, `bits[j] = 0`, `i < j`.
pub fn find_exit(bits: &[bool]) -> Option<(usize, usize)> {
    let first_one = bits.iter().position(|&b| b)?;
    let exit = bits[first_one..].iter().position(|&b| !b)?;
    Some((first_one, first_one + exit))
}

pub fn is_barely_alternating(family: &ChainFamily) -> Verdict<AlternationWitness> {
    for n in family.ground().elements() {
        let trace = trace_unchecked(family, n);
        if let Some(pos) = find_alternation(trace.bits()) {
            let idx = family.indices();
            return Verdict::Witness(AlternationWitness {
                n,
                indices: pos.map(|p| idx[p].clone()),
            });
        }
    }
    Verdict::Ok
}

pub fn is_chain(family: &ChainFamily) -> Verdict<ChainWitness> {
    for n in family.ground().elements() {
        let trace = trace_unchecked(family, n);
        if let Some((i, j)) = find_exit(trace.bits()) {
            let idx = family.indices();
            return Verdict::Witness(ChainWitness {
                n,
                x: idx[i].clone(),
                y: idx[j].clone(),
            });
        }
    }
    Verdict::Ok
}

/// `A_x ∖ A_y` for indices `x < y` of the family.
pub fn defect(family: &ChainFamily, x: &IndexValue, y: &IndexValue) -> Result<SetBits> {
    if x >= y {
        return Err(Error::IndexOrder {
            x: x.clone(),
            y: y.clone(),
        });
    }
    let ax = family
        .set_at(x)
        .ok_or_else(|| Error::MissingIndex(x.clone()))?;
    let ay = family
        .set_at(y)
        .ok_or_else(|| Error::MissingIndex(y.clone()))?;
    Ok(ax.difference(ay))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDefect {
    pub x: IndexValue,
    pub y: IndexValue,
    pub defect: SetBits,
    pub over_budget: bool,
}

/// All pairwise defects `A_x ∖ A_y` (`x < y`) of a family, measured against a
/// budget that stands in for finiteness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectReport {
    pub pair_defects: Vec<PairDefect>,
    pub max_defect_size: usize,
    pub budget: usize,
}

impl DefectReport {
    pub fn flagged(&self) -> impl Iterator<Item = &PairDefect> {
        self.pair_defects.iter().filter(|p| p.over_budget)
    }

    pub fn within_budget(&self) -> bool {
        self.flagged().next().is_none()
    }

    pub fn get(&self, x: &IndexValue, y: &IndexValue) -> Option<&PairDefect> {
        self.pair_defects.iter().find(|p| &p.x == x && &p.y == y)
    }
}

/// Records every pair `x < y` in index order; pairs are flagged when
/// `|A_x ∖ A_y| > budget`.
pub fn validate_almost_chain(family: &ChainFamily, budget: usize) -> DefectReport {
    let k = family.len();
    let mut pair_defects = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    let mut max_defect_size = 0;
    for i in 0..k {
        for j in i + 1..k {
            let d = family.sets()[i].difference(&family.sets()[j]);
            let size = d.len();
            max_defect_size = max_defect_size.max(size);
            pair_defects.push(PairDefect {
                x: family.indices()[i].clone(),
                y: family.indices()[j].clone(),
                defect: d,
                over_budget: size > budget,
            });
        }
    }
    DefectReport {
        pair_defects,
        max_defect_size,
        budget,
    }
}

/// `D = ⋃_{x<y} (A_x ∖ A_y)`: the least set whose removal turns the family
/// into a ⊆-chain. Computed in one pass as `⋃_j (⋃_{i<j} A_i) ∖ A_j`.
pub fn chain_defect_set(family: &ChainFamily) -> SetBits {
    let mut seen = SetBits::empty(family.ground());
    let mut defects = SetBits::empty(family.ground());
    for set in family.sets() {
        defects.union_with(&seen.difference(set));
        seen.union_with(set);
    }
    defects
}
