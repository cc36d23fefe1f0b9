mod common;

use chainlab::chain_core::{defect, is_chain, validate_almost_chain, IndexValue};
use chainlab::generators::{
    from_sign_matrix, initial_segment_chain, marciszewski_family, perturbed_chain, random_indices,
    s_set, uniform_positions, BitIndex, DyadicGround,
};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bit_indices(depth: u32, words: Vec<Vec<bool>>) -> Vec<BitIndex> {
    let mut words: Vec<Vec<bool>> = words
        .into_iter()
        .map(|mut w| {
            w.truncate(depth as usize + 6);
            w.push(true);
            w
        })
        .collect();
    words.sort();
    words.dedup();
    words.into_iter().map(BitIndex::new).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn marciszewski_defects_stay_in_s(
        depth in 1u32..=8,
        words in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 14), 1..24),
    ) {
        let ground = DyadicGround::new(depth).unwrap();
        let xs = bit_indices(depth, words);
        let fam = marciszewski_family(&xs, &ground).unwrap();
        prop_assume!(fam.len() == xs.len());
        prop_assert!(validate_almost_chain(&fam, depth as usize).within_budget());
        for x in &xs {
            for y in &xs {
                if x.value() < y.value() {
                    let d = defect(&fam, &x.value(), &y.value()).unwrap();
                    prop_assert!(d.is_subset(&s_set(y, &ground).unwrap()));
                }
            }
        }
    }

    #[test]
    fn initial_segments_are_chains(seed in any::<u64>(), n in 1usize..64, k in 0usize..40) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let xs = random_indices(&mut rng, k);
        let fam = initial_segment_chain(&uniform_positions(n), &xs).unwrap();
        prop_assert!(is_chain(&fam).is_ok());
    }

    #[test]
    fn sign_matrix_of_offsets_is_initial_segment(seed in any::<u64>(), n in 1usize..32, k in 1usize..16) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = random_indices(&mut rng, n);
        let ys = random_indices(&mut rng, k);
        prop_assume!(ys.iter().all(|y| !points.contains(y)));
        let matrix: Vec<Vec<BigRational>> = ys
            .iter()
            .map(|y| points.iter().map(|p| p.as_rational() - y.as_rational()).collect())
            .collect();
        prop_assert_eq!(
            from_sign_matrix(&ys, &matrix).unwrap(),
            initial_segment_chain(&points, &ys).unwrap()
        );
    }

    #[test]
    fn perturbation_is_a_function_of_its_arguments(
        seed in any::<u64>(),
        n in 1usize..64,
        k in 0usize..20,
        flips in 0usize..4,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let xs = random_indices(&mut rng, k);
        let a = perturbed_chain(seed, n, &xs, flips).unwrap();
        prop_assert_eq!(&a, &perturbed_chain(seed, n, &xs, flips).unwrap());
        let clean = initial_segment_chain(&uniform_positions(n), &xs).unwrap();
        for (p, c) in a.sets().iter().zip(clean.sets()) {
            prop_assert_eq!(p.symmetric_difference(c).len(), flips.min(n));
        }
    }
}

#[test]
fn worked_s_set() {
    let ground = DyadicGround::new(5).unwrap();
    let x: BitIndex = "011011".parse().unwrap();
    let s: Vec<IndexValue> = s_set(&x, &ground)
        .unwrap()
        .iter()
        .map(|n| ground.value(n))
        .collect();
    assert_eq!(s, vec![IndexValue::ratio(1, 4), IndexValue::ratio(3, 8)]);
}
