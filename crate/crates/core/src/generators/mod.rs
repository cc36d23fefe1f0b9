//! Example families and synthetic instances.

mod config;
mod dyadic;

pub use config::{generate, GeneratorConfig, GeneratorKind};
pub use dyadic::{marciszewski_family, s_set, BitIndex, DyadicGround, MAX_DEPTH};

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Signed;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain_core::{ChainFamily, GroundSet, IndexValue, SetBits};
use crate::error::{Error, Result};

/// Denominator of randomly drawn indices. Odd, so a random index never
/// coincides with a position `(2n+1)/(2N)` from [`uniform_positions`].
pub const RANDOM_INDEX_DENOMINATOR: i64 = 1_594_323; // 3^13

/// `A_x = {n : p_n < x}`, the rational initial-segment chain.
pub fn initial_segment_chain(points: &[IndexValue], xs: &[IndexValue]) -> Result<ChainFamily> {
    for x in xs {
        if let Some(n) = points.iter().position(|p| p == x) {
            return Err(Error::AmbiguousPosition {
                point: x.clone(),
                n,
            });
        }
    }
    segments_below(points, xs)
}

fn segments_below(points: &[IndexValue], xs: &[IndexValue]) -> Result<ChainFamily> {
    let ground = GroundSet::new(points.len())?;
    let entries = xs
        .iter()
        .map(|x| {
            let below = points
                .iter()
                .enumerate()
                .filter(|(_, p)| *p < x)
                .map(|(n, _)| n);
            Ok((x.clone(), SetBits::from_elements(ground, below)?))
        })
        .collect::<Result<Vec<_>>>()?;
    ChainFamily::new(ground, entries)
}

/// Midpoints `(2n+1)/(2N)` of `N` equal cells of `(0, 1)`.
pub fn uniform_positions(size: usize) -> Vec<IndexValue> {
    (0..size)
        .map(|n| IndexValue::ratio(2 * n as i64 + 1, 2 * size as i64))
        .collect()
}

/// `count` distinct indices `k / 3^13` in `(0, 1)`, sorted.
pub fn random_indices<R: Rng>(rng: &mut R, count: usize) -> Vec<IndexValue> {
    let pool = RANDOM_INDEX_DENOMINATOR as usize - 1;
    let mut ks: Vec<usize> = sample(rng, pool, count.min(pool)).into_iter().collect();
    ks.sort_unstable();
    ks.into_iter()
        .map(|k| IndexValue::ratio(k as i64 + 1, RANDOM_INDEX_DENOMINATOR))
        .collect()
}

/// `count` distinct non-dyadic points for a depth-`depth` ground: `depth + 12`
/// random digits with the last one forced to 1.
pub fn random_bit_indices<R: Rng>(rng: &mut R, count: usize, depth: u32) -> Vec<BitIndex> {
    let len = depth as usize + 12;
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    // 2^(len-1) distinct words exist; count is far below that in practice
    let cap = 1usize.checked_shl(len as u32 - 1).unwrap_or(usize::MAX);
    while out.len() < count.min(cap) {
        let mut bits: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
        bits[len - 1] = true;
        if seen.insert(bits.clone()) {
            out.push(BitIndex::new(bits));
        }
    }
    out
}

/// Initial-segment chain over [`uniform_positions`] with exactly
/// `flips_per_set` distinct bits toggled in every set (capped at `N`),
/// visiting sets in index order. Deterministic in all arguments.
///
/// Unlike [`initial_segment_chain`], an index equal to some `p_n` is not an
/// error: the strict comparison `p_n < x` is used as is.
pub fn perturbed_chain(
    seed: u64,
    size: usize,
    xs: &[IndexValue],
    flips_per_set: usize,
) -> Result<ChainFamily> {
    let chain = segments_below(&uniform_positions(size), xs)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = flips_per_set.min(size);
    let entries: Vec<(IndexValue, SetBits)> = chain
        .entries()
        .map(|(x, set)| {
            let mut set = set.clone();
            for n in sample(&mut rng, size, k) {
                set.toggle(n);
            }
            (x.clone(), set)
        })
        .collect();
    ChainFamily::new(chain.ground(), entries)
}

/// `A_y = {n : h(y, n) < 0}`; `matrix[i]` is the row of `ys[i]`.
pub fn from_sign_matrix(ys: &[IndexValue], matrix: &[Vec<BigRational>]) -> Result<ChainFamily> {
    if matrix.len() != ys.len() {
        return Err(Error::MatrixRows {
            rows: matrix.len(),
            indices: ys.len(),
        });
    }
    let width = match matrix.first() {
        Some(row) => row.len(),
        None => return Err(Error::EmptyGround),
    };
    let ground = GroundSet::new(width)?;
    let entries = ys
        .iter()
        .zip(matrix)
        .enumerate()
        .map(|(row, (y, values))| {
            if values.len() != width {
                return Err(Error::MatrixRowLength {
                    row,
                    len: values.len(),
                    expected: width,
                });
            }
            let negative = values.iter().enumerate().filter(|(_, h)| h.is_negative());
            Ok((
                y.clone(),
                SetBits::from_elements(ground, negative.map(|(n, _)| n))?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    ChainFamily::new(ground, entries)
}
