mod common;

use chainlab::adjuster::{adjust_family_with, merge_conditions, InsertionOrder};
use chainlab::chain_core::{is_barely_alternating, is_chain, ChainFamily, Condition, IndexValue};
use chainlab::line_operator::{
    apply_operator, compute_triples, limit_eval_point, no_fourth_flip_check, norm_witness,
    operator_norm, FunctionOnLine, LineModel, TriplePattern,
};
use chainlab::oracles;
use chainlab::Error;
use common::{chains, families, q, sparse_families};
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=7).prop_map(|(p, d)| BigRational::new(p.into(), d.into()))
}

fn function(model: &LineModel, values: &[BigRational]) -> FunctionOnLine {
    let mut i = 0;
    FunctionOnLine::from_fn(model, |_| {
        i += 1;
        values[(i - 1) % values.len()].clone()
    })
}

/// `K = Y`, or `Y` plus a top point when `top` is set.
fn model(fam: &ChainFamily, top: bool) -> Option<LineModel> {
    if top {
        LineModel::with_top(fam, q(2, 1)).ok()
    } else {
        LineModel::from_family(fam).ok()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn triples_match_definition(fam in sparse_families(16, 10), top in any::<bool>()) {
        prop_assume!(is_barely_alternating(&fam).is_ok());
        let Some(m) = model(&fam, top) else { return Ok(()); };
        let table = compute_triples(&fam, &m).unwrap();
        prop_assert!(table.all_ordered());
        let expected = oracles::triples(&fam, &m);
        prop_assert_eq!(table.triples(), expected.as_slice());
        prop_assert!(no_fourth_flip_check(&fam, &table).is_ok());
    }

    #[test]
    fn extension_linearity_and_norm(
        fam in sparse_families(12, 8),
        top in any::<bool>(),
        fv in proptest::collection::vec(rational(), 1..10),
        gv in proptest::collection::vec(rational(), 1..10),
        alpha in rational(),
        beta in rational(),
    ) {
        prop_assume!(is_barely_alternating(&fam).is_ok());
        let Some(m) = model(&fam, top) else { return Ok(()); };
        let table = compute_triples(&fam, &m).unwrap();
        let (f, g) = (function(&m, &fv), function(&m, &gv));
        let ef = apply_operator(&f, &table).unwrap();
        let eg = apply_operator(&g, &table).unwrap();
        prop_assert_eq!(&ef.on_k, &f);

        let h = f.linear_combination(&alpha, &g, &beta).unwrap();
        let eh = apply_operator(&h, &table).unwrap();
        for n in 0..table.len() {
            prop_assert_eq!(&eh.on_omega[n], &(&alpha * &ef.on_omega[n] + &beta * &eg.on_omega[n]));
        }

        let norm = operator_norm(&table);
        prop_assert!(norm <= BigRational::from_integer(3.into()));
        prop_assert!(ef.sup_norm() <= &norm * f.sup_norm());
        if let Some((n, w)) = norm_witness(&table, &m) {
            prop_assert_eq!(w.sup_norm(), BigRational::one());
            prop_assert_eq!(apply_operator(&w, &table).unwrap().on_omega[n].abs(), norm);
        }
    }

    #[test]
    fn chains_collapse(fam in chains(16, 10), top in any::<bool>()) {
        prop_assert!(is_chain(&fam).is_ok());
        let Some(m) = model(&fam, top) else { return Ok(()); };
        let table = compute_triples(&fam, &m).unwrap();
        for t in table.triples() {
            prop_assert!(t.pattern() == TriplePattern::Collapsed || (t.x1 == t.x2 && &t.x2 == m.max_point()));
        }
        prop_assert_eq!(operator_norm(&table), BigRational::one());
    }

    #[test]
    fn adjusted_families_accept_every_final_triple(
        fam in families(16, 16),
        seed in any::<u64>(),
        fv in proptest::collection::vec(rational(), 1..10),
    ) {
        let (out, _) = adjust_family_with(&fam, &InsertionOrder::Random(seed)).unwrap();
        let Some(m) = model(&out, false) else { return Ok(()); };
        let table = compute_triples(&out, &m).unwrap();
        prop_assert!(operator_norm(&table) <= BigRational::from_integer(3.into()));
        let f = function(&m, &fv);
        let ef = apply_operator(&f, &table).unwrap();
        for (n, t) in table.triples().iter().enumerate() {
            let z = limit_eval_point(&t.x0, &t.x1, &t.x2).unwrap();
            prop_assert_eq!(&ef.on_omega[n], f.get(&z).unwrap());
        }
    }

    #[test]
    fn trichotomy_identity(a in 0i64..6, b in 0i64..6, c in 0i64..6, fv in proptest::collection::vec(rational(), 6)) {
        let mut p = [a, b, c];
        p.sort();
        let pts: Vec<IndexValue> = (0..6).map(|i| q(i, 1)).collect();
        let m = LineModel::new(pts.clone(), vec![]).unwrap();
        let f = function(&m, &fv);
        let (x0, x1, x2) = (q(p[0], 1), q(p[1], 1), q(p[2], 1));
        match limit_eval_point(&x0, &x1, &x2) {
            Ok(z) => {
                let lhs = f.get(&x0).unwrap() - f.get(&x1).unwrap() + f.get(&x2).unwrap();
                prop_assert_eq!(&lhs, f.get(&z).unwrap());
            }
            Err(Error::InconsistentTriple { .. }) => prop_assert!(p[0] < p[1] && p[1] < p[2]),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

#[test]
fn merged_conditions_reach_norm_three() {
    let fam = |entries: &[(IndexValue, bool)]| {
        let g = chainlab::chain_core::GroundSet::new(1).unwrap();
        ChainFamily::new(
            g,
            entries.iter().map(|(x, b)| {
                let set = if *b {
                    chainlab::chain_core::SetBits::full(g)
                } else {
                    chainlab::chain_core::SetBits::empty(g)
                };
                (x.clone(), set)
            }),
        )
        .unwrap()
    };
    let c1 = Condition::from(fam(&[(q(1, 4), false), (q(3, 4), false)]));
    let c2 = Condition::from(fam(&[(q(1, 2), true), (q(7, 8), true)]));
    let merged = merge_conditions(&c1, &c2).unwrap();
    assert!(is_barely_alternating(&merged).is_ok());
    let m = LineModel::from_family(&merged).unwrap();
    let table = compute_triples(&merged, &m).unwrap();
    assert_eq!(table.triples()[0].pattern(), TriplePattern::Strict);
    assert_eq!(operator_norm(&table), BigRational::from_integer(3.into()));
    let (n, w) = norm_witness(&table, &m).unwrap();
    assert_eq!(
        apply_operator(&w, &table).unwrap().on_omega[n],
        BigRational::from_integer(3.into())
    );
}
