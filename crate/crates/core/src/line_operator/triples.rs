use std::fmt;

use crate::chain_core::{is_barely_alternating, ChainFamily, IndexValue, Verdict};
use crate::error::{Error, Result};
use crate::line_operator::LineModel;

/// `x⁰ ≤ x¹ ≤ x²` for one ground element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    pub x0: IndexValue,
    pub x1: IndexValue,
    pub x2: IndexValue,
}

/// Which coordinates of a triple coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriplePattern {
    /// `x⁰ = x¹ = x²`
    Collapsed,
    /// `x⁰ < x¹ = x²`
    LowerSplit,
    /// `x⁰ = x¹ < x²`
    UpperSplit,
    /// `x⁰ < x¹ < x²`
    Strict,
}

impl TriplePattern {
    pub fn tag(self) -> &'static str {
        match self {
            TriplePattern::Collapsed => "aaa",
            TriplePattern::LowerSplit => "abb",
            TriplePattern::UpperSplit => "aab",
            TriplePattern::Strict => "abc",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        [
            TriplePattern::Collapsed,
            TriplePattern::LowerSplit,
            TriplePattern::UpperSplit,
            TriplePattern::Strict,
        ]
        .into_iter()
        .find(|p| p.tag() == tag)
    }
}

impl fmt::Display for TriplePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Triple {
    pub fn is_ordered(&self) -> bool {
        self.x0 <= self.x1 && self.x1 <= self.x2
    }

    /// Assumes the triple is ordered.
    pub fn pattern(&self) -> TriplePattern {
        match (self.x0 == self.x1, self.x1 == self.x2) {
            (true, true) => TriplePattern::Collapsed,
            (false, true) => TriplePattern::LowerSplit,
            (true, false) => TriplePattern::UpperSplit,
            (false, false) => TriplePattern::Strict,
        }
    }
}

/// One triple per ground element `n`, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleTable {
    triples: Vec<Triple>,
}

impl TripleTable {
    pub fn new(triples: Vec<Triple>) -> Self {
        TripleTable { triples }
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn get(&self, n: usize) -> Option<&Triple> {
        self.triples.get(n)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn all_ordered(&self) -> bool {
        self.triples.iter().all(Triple::is_ordered)
    }
}

/// Minima of the three nested index sets, without checking the family.
///
/// `x⁰ = min{y : n ∈ B_y}`, `x¹ = min{y > x⁰ : n ∉ B_y}`,
/// `x² = min{y > x¹ : n ∈ B_y}`, each falling back to `max K` when empty.
pub fn compute_triples_unchecked(family: &ChainFamily, model: &LineModel) -> Result<TripleTable> {
    if family.indices() != model.dense() {
        return Err(Error::ModelMismatch);
    }
    let top = model.max_point();
    let ys = family.indices();
    let sets = family.sets();
    let point = |pos: Option<usize>| pos.map_or(top, |i| &ys[i]).clone();
    let triples = family
        .ground()
        .elements()
        .map(|n| {
            let first_from = |start: usize, member: bool| {
                (start..ys.len()).find(|&i| sets[i].contains(n) == member)
            };
            let p0 = first_from(0, true);
            let p1 = p0.and_then(|i| first_from(i + 1, false));
            let p2 = p1.and_then(|i| first_from(i + 1, true));
            Triple {
                x0: point(p0),
                x1: point(p1),
                x2: point(p2),
            }
        })
        .collect();
    Ok(TripleTable { triples })
}

/// [`compute_triples_unchecked`] on a family that must be barely alternating.
pub fn compute_triples(family: &ChainFamily, model: &LineModel) -> Result<TripleTable> {
    is_barely_alternating(family).into_result(|w| Error::NotBarelyAlternating(Box::new(w)))?;
    compute_triples_unchecked(family, model)
}

/// `n ∉ B_y` for some `y > x²ₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExitWitness {
    pub n: usize,
    pub y: IndexValue,
}

impl fmt::Display for ExitWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} y={}", self.n, self.y)
    }
}

/// Checks that every `n` stays in `B_y` for all `y > x²ₙ`.
pub fn no_fourth_flip_check(family: &ChainFamily, triples: &TripleTable) -> Verdict<ExitWitness> {
    for (n, triple) in triples.triples().iter().enumerate() {
        let exit = family
            .entries()
            .find(|(y, set)| *y > &triple.x2 && !set.contains(n));
        if let Some((y, _)) = exit {
            return Verdict::Witness(ExitWitness { n, y: y.clone() });
        }
    }
    Verdict::Ok
}

/// The point `z` a final triple must converge to: `x⁰` when `x⁰ < x¹ = x²`,
/// `x²` when `x⁰ = x¹ < x²`, the common point when all coincide. A strict
/// triple cannot be a limit and is rejected.
pub fn limit_eval_point(x0: &IndexValue, x1: &IndexValue, x2: &IndexValue) -> Result<IndexValue> {
    let triple = Triple {
        x0: x0.clone(),
        x1: x1.clone(),
        x2: x2.clone(),
    };
    if !triple.is_ordered() {
        return Err(Error::UnorderedTriple {
            x0: triple.x0,
            x1: triple.x1,
            x2: triple.x2,
        });
    }
    match triple.pattern() {
        TriplePattern::Collapsed | TriplePattern::LowerSplit => Ok(triple.x0),
        TriplePattern::UpperSplit => Ok(triple.x2),
        TriplePattern::Strict => Err(Error::InconsistentTriple {
            x0: triple.x0,
            x1: triple.x1,
            x2: triple.x2,
        }),
    }
}
