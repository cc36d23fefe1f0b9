#![allow(dead_code)]

use chainlab::chain_core::{ChainFamily, GroundSet, IndexValue, SetBits};
use proptest::prelude::*;

pub fn q(p: i64, d: i64) -> IndexValue {
    IndexValue::ratio(p, d)
}

/// Row `i` of `rows` is the set at index `(i+1)/(k+1)`.
pub fn family_from_rows(n: usize, rows: &[Vec<bool>]) -> ChainFamily {
    let g = GroundSet::new(n).unwrap();
    let k = rows.len() as i64;
    ChainFamily::new(
        g,
        rows.iter()
            .enumerate()
            .map(|(i, row)| (q(i as i64 + 1, k + 1), SetBits::from_mask(row).unwrap())),
    )
    .unwrap()
}

/// Families over `1..=max_n` elements with up to `max_k` indices.
pub fn families(max_n: usize, max_k: usize) -> impl Strategy<Value = ChainFamily> {
    (1..=max_n, 0..=max_k).prop_flat_map(|(n, k)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), k)
            .prop_map(move |rows| family_from_rows(n, &rows))
    })
}

/// Families whose traces are sampled from few flips, so barely alternating
/// and chain-like inputs show up often.
pub fn sparse_families(max_n: usize, max_k: usize) -> impl Strategy<Value = ChainFamily> {
    (1..=max_n, 1..=max_k).prop_flat_map(|(n, k)| {
        proptest::collection::vec(proptest::collection::vec(0..=k, 0..=4), n).prop_map(
            move |cuts| {
                // trace of element m toggles at each cut position
                let mut rows = vec![vec![false; n]; k];
                for (m, cs) in cuts.iter().enumerate() {
                    for (i, row) in rows.iter_mut().enumerate() {
                        row[m] = cs.iter().filter(|&&c| c <= i).count() % 2 == 1;
                    }
                }
                family_from_rows(n, &rows)
            },
        )
    })
}

pub fn trace_of(family: &ChainFamily, n: usize) -> Vec<bool> {
    family.sets().iter().map(|s| s.contains(n)).collect()
}

/// `⊆`-chains: each element enters at a random position and stays.
pub fn chains(max_n: usize, max_k: usize) -> impl Strategy<Value = ChainFamily> {
    (1..=max_n, 0..=max_k).prop_flat_map(|(n, k)| {
        proptest::collection::vec(0..=k, n).prop_map(move |entry| {
            let rows: Vec<Vec<bool>> = (0..k)
                .map(|i| entry.iter().map(|&e| i >= e).collect())
                .collect();
            family_from_rows(n, &rows)
        })
    })
}
