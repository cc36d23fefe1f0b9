//! Brute-force reference implementations for tests.
//!
//! Everything here follows the definitions literally and is exponential or
//! polynomial of high degree. Enabled under `cfg(test)` or the `oracles`
//! feature.

use crate::chain_core::{ChainFamily, IndexValue};
use crate::line_operator::{LineModel, Triple};

/// Some `n` and `x₁ < x₂ < x₃ < x₄` with `n ∈ A_{x₁}∖A_{x₂}` and
/// `n ∈ A_{x₃}∖A_{x₄}`, by trying all quadruples.
pub fn alternating_quadruple(family: &ChainFamily) -> Option<(usize, [usize; 4])> {
    let sets = family.sets();
    let k = sets.len();
    for n in family.ground().elements() {
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    for d in c + 1..k {
                        if sets[a].contains(n)
                            && !sets[b].contains(n)
                            && sets[c].contains(n)
                            && !sets[d].contains(n)
                        {
                            return Some((n, [a, b, c, d]));
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn barely_alternating(family: &ChainFamily) -> bool {
    alternating_quadruple(family).is_none()
}

/// `A_x ⊆ A_y` for every pair `x < y`.
pub fn chain(family: &ChainFamily) -> bool {
    let sets = family.sets();
    (0..sets.len()).all(|i| (i + 1..sets.len()).all(|j| sets[i].is_subset(&sets[j])))
}

/// Trace form of the characterization: at most three flips, and exactly three
/// only when the trace starts with `0`.
pub fn pattern_allows(trace: &[bool]) -> bool {
    let flips = trace.windows(2).filter(|w| w[0] != w[1]).count();
    flips < 3 || (flips == 3 && !trace[0])
}

/// Triples straight from the set-builder definitions, with `inf ∅ = max K`.
pub fn triples(family: &ChainFamily, model: &LineModel) -> Vec<Triple> {
    let top = model.max_point().clone();
    let min_or_top = |it: Vec<IndexValue>| it.into_iter().min().unwrap_or_else(|| top.clone());
    family
        .ground()
        .elements()
        .map(|n| {
            let member = |y: &IndexValue| family.set_at(y).expect("own index").contains(n);
            let ys = family.indices();
            let x0 = min_or_top(ys.iter().filter(|y| member(y)).cloned().collect());
            let x1 = min_or_top(
                ys.iter()
                    .filter(|y| **y > x0 && !member(y))
                    .cloned()
                    .collect(),
            );
            let x2 = min_or_top(
                ys.iter()
                    .filter(|y| **y > x1 && member(y))
                    .cloned()
                    .collect(),
            );
            Triple { x0, x1, x2 }
        })
        .collect()
}

/// Whether `target` of the given sets form a sunflower with equal-size
/// petals, by trying every subset of that size.
pub fn sunflower_exists<T: Ord + Clone>(sets: &[Vec<T>], target: usize) -> bool {
    fn is_sunflower<T: Ord + Clone>(members: &[&Vec<T>]) -> bool {
        let inter = |a: &Vec<T>, b: &Vec<T>| -> Vec<T> {
            a.iter()
                .filter(|x| b.binary_search(x).is_ok())
                .cloned()
                .collect()
        };
        let root = inter(members[0], members[1]);
        members.iter().all(|m| m.len() == members[0].len())
            && (0..members.len())
                .all(|i| (i + 1..members.len()).all(|j| inter(members[i], members[j]) == root))
    }
    fn search<'a, T: Ord + Clone>(
        sets: &'a [Vec<T>],
        start: usize,
        target: usize,
        chosen: &mut Vec<&'a Vec<T>>,
    ) -> bool {
        if chosen.len() == target {
            return is_sunflower(chosen);
        }
        for i in start..sets.len() {
            chosen.push(&sets[i]);
            if search(sets, i + 1, target, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if target < 2 {
        return sets.len() >= target;
    }
    search(sets, 0, target, &mut Vec::new())
}
