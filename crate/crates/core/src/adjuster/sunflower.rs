use std::collections::BTreeMap;

use crate::chain_core::IndexValue;
use crate::error::{Error, Result};

/// A Δ-system among the input sets: every selected set is `root ∪ petal`,
/// petals are pairwise disjoint, disjoint from the root and of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunflowerDecomposition<T = IndexValue> {
    pub root: Vec<T>,
    /// One petal per selected set, parallel to `members`.
    pub petals: Vec<Vec<T>>,
    /// Positions of the selected sets in the input list, ascending.
    pub members: Vec<usize>,
}

impl<T: Ord + Clone> SunflowerDecomposition<T> {
    /// Checks the root/petal laws against the original inputs.
    pub fn verify(&self, inputs: &[Vec<T>]) -> bool {
        if self.members.len() != self.petals.len() || self.members.windows(2).any(|w| w[0] >= w[1])
        {
            return false;
        }
        let petal_size = self.petals.first().map(Vec::len);
        for (&m, petal) in self.members.iter().zip(&self.petals) {
            let Some(set) = inputs.get(m) else {
                return false;
            };
            if Some(petal.len()) != petal_size || !is_disjoint(petal, &self.root) {
                return false;
            }
            if &sorted_union(&self.root, petal) != set {
                return false;
            }
        }
        self.petals
            .iter()
            .enumerate()
            .all(|(i, p)| self.petals[i + 1..].iter().all(|r| is_disjoint(p, r)))
    }
}

fn intersection<T: Ord + Clone>(a: &[T], b: &[T]) -> Vec<T> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn is_disjoint<T: Ord + Clone>(a: &[T], b: &[T]) -> bool {
    intersection(a, b).is_empty()
}

fn is_subset<T: Ord + Clone>(a: &[T], b: &[T]) -> bool {
    intersection(a, b).len() == a.len()
}

fn difference<T: Ord + Clone>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter()
        .filter(|x| b.binary_search(x).is_err())
        .cloned()
        .collect()
}

fn sorted_union<T: Ord + Clone>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out: Vec<T> = a.iter().chain(b).cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// Backtracking search for `need` pairwise disjoint petals among `candidates`.
fn pick_disjoint<T: Ord + Clone>(
    candidates: &[(usize, Vec<T>)],
    start: usize,
    need: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if need == 0 {
        return true;
    }
    for i in start..candidates.len() {
        if candidates.len() - i < need {
            return false;
        }
        let petal = &candidates[i].1;
        if chosen.iter().all(|&c| is_disjoint(&candidates[c].1, petal)) {
            chosen.push(i);
            if pick_disjoint(candidates, i + 1, need - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Finds a sunflower with at least `target_count` members among `index_sets`.
///
/// Sets are grouped by size (equal petals force equal sizes). Within a group,
/// candidate roots are the pairwise intersections, tried most frequent first;
/// for each root an exact backtracking search looks for `target_count`
/// disjoint petals, and the selection is then extended greedily. Since every
/// sunflower's root is the intersection of two of its members, `not found`
/// means no sunflower of that size exists among the inputs.
pub fn delta_system_extract<T: Ord + Clone>(
    index_sets: &[Vec<T>],
    target_count: usize,
) -> Result<SunflowerDecomposition<T>> {
    if target_count < 2 {
        return Err(Error::TargetTooSmall(target_count));
    }
    for (i, set) in index_sets.iter().enumerate() {
        if set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedIndexSet(i));
        }
    }

    let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, set) in index_sets.iter().enumerate() {
        by_size.entry(set.len()).or_default().push(i);
    }

    for group in by_size.values().filter(|g| g.len() >= target_count) {
        let mut roots: BTreeMap<Vec<T>, usize> = BTreeMap::new();
        for (a, &i) in group.iter().enumerate() {
            for &j in &group[a + 1..] {
                *roots
                    .entry(intersection(&index_sets[i], &index_sets[j]))
                    .or_default() += 1;
            }
        }
        let mut ranked: Vec<(Vec<T>, usize)> = roots.into_iter().collect();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));

        for (root, _) in ranked {
            let candidates: Vec<(usize, Vec<T>)> = group
                .iter()
                .filter(|&&i| is_subset(&root, &index_sets[i]))
                .map(|&i| (i, difference(&index_sets[i], &root)))
                .collect();
            let mut chosen = Vec::new();
            if !pick_disjoint(&candidates, 0, target_count, &mut chosen) {
                continue;
            }
            for i in 0..candidates.len() {
                if !chosen.contains(&i)
                    && chosen
                        .iter()
                        .all(|&c| is_disjoint(&candidates[c].1, &candidates[i].1))
                {
                    chosen.push(i);
                }
            }
            chosen.sort_unstable();
            let (members, petals) = chosen.into_iter().map(|c| candidates[c].clone()).unzip();
            return Ok(SunflowerDecomposition {
                root,
                petals,
                members,
            });
        }
    }
    Err(Error::SunflowerNotFound {
        target: target_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_sunflower() {
        let sets = vec![vec![1, 2], vec![1, 3], vec![1, 4]];
        let d = delta_system_extract(&sets, 3).unwrap();
        assert_eq!(d.root, vec![1]);
        assert_eq!(d.petals, vec![vec![2], vec![3], vec![4]]);
        assert_eq!(d.members, vec![0, 1, 2]);
        assert!(d.verify(&sets));
    }

    #[test]
    fn disjoint_sets_have_empty_root() {
        let sets = vec![vec![1, 2], vec![3, 4], vec![5, 6]];
        let d = delta_system_extract(&sets, 3).unwrap();
        assert!(d.root.is_empty());
        assert!(d.verify(&sets));
    }

    #[test]
    fn index_values() {
        let q = IndexValue::ratio;
        let sets = vec![
            vec![q(1, 8), q(1, 2)],
            vec![q(1, 4), q(1, 2)],
            vec![q(1, 2), q(3, 4)],
        ];
        let d = delta_system_extract(&sets, 3).unwrap();
        assert_eq!(d.root, vec![q(1, 2)]);
    }

    #[test]
    fn not_found() {
        // every pair meets, but no common root for three
        let sets = vec![vec![1, 2], vec![2, 3], vec![1, 3]];
        assert_eq!(
            delta_system_extract(&sets, 3),
            Err(Error::SunflowerNotFound { target: 3 })
        );
        // unequal sizes cannot share equal petals
        let sets = vec![vec![1], vec![2, 3], vec![4, 5, 6]];
        assert!(delta_system_extract(&sets, 2).is_err());
    }

    #[test]
    fn greedy_extension_beyond_target() {
        let sets = vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]];
        let d = delta_system_extract(&sets, 2).unwrap();
        assert_eq!(d.members.len(), 4);
        assert!(d.verify(&sets));
    }

    #[test]
    fn input_validation() {
        assert_eq!(
            delta_system_extract(&[vec![1], vec![2]], 1),
            Err(Error::TargetTooSmall(1))
        );
        assert_eq!(
            delta_system_extract(&[vec![1], vec![3, 2]], 2),
            Err(Error::UnsortedIndexSet(1))
        );
    }

    #[test]
    fn verify_rejects_broken_decompositions() {
        let sets = vec![vec![1, 2], vec![1, 3]];
        let bad = SunflowerDecomposition {
            root: vec![1],
            petals: vec![vec![2], vec![2]],
            members: vec![0, 1],
        };
        assert!(!bad.verify(&sets));
    }
}
