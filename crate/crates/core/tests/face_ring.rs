mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ssc_core::complex::spanning_complex;
use ssc_core::face_ring::*;
use ssc_core::graph::{build_jahangir, matrix_tree_count};
use ssc_core::{EdgeSet, Graph};

use common::*;

fn ideal_of(g: &Graph) -> MonomialIdeal {
    facet_ideal(&spanning_complex(g).unwrap()).unwrap()
}

fn ordered(ideal: &MonomialIdeal, ord: &[usize]) -> Vec<EdgeSet> {
    ord.iter().map(|&k| ideal.generators()[k].support).collect()
}

/// Shelling via the textbook condition, one pair at a time.
fn naive_shelling(facets: &[EdgeSet]) -> bool {
    (1..facets.len()).all(|i| {
        (0..i).all(|j| {
            let meet = facets[i].intersection(facets[j]);
            (0..i).any(|k| {
                facets[i].difference(facets[k]).len() == 1
                    && meet.is_subset(facets[i].intersection(facets[k]))
            })
        })
    })
}

#[test]
fn block_ordering_passes_for_small_m() {
    for m in 3..=5 {
        let g = build_jahangir(m).unwrap();
        let ideal = ideal_of(&g);
        let ord = paper_ordering(m).unwrap();
        assert_eq!(ord.len(), ideal.len());
        let mut sorted = ord.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..ideal.len()).collect::<Vec<_>>());
        assert!(
            has_quasi_linear_quotients(&ideal, &ord).unwrap().passed,
            "m = {m}"
        );
        assert!(is_shelling(&ordered(&ideal, &ord)).unwrap(), "m = {m}");
        assert!(ideal.generators().iter().all(|g| g.degree() == 2 * m));
    }
    let ord4 = paper_ordering(4).unwrap();
    assert_eq!(
        num_bigint::BigUint::from(ord4.len()),
        matrix_tree_count(&build_jahangir(4).unwrap())
    );
}

#[test]
fn shelling_test_matches_naive_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in random_graphs(5, 25, 8) {
        let ideal = ideal_of(&g);
        for _ in 0..4 {
            let mut ord: Vec<usize> = (0..ideal.len()).collect();
            ord.shuffle(&mut rng);
            let facets = ordered(&ideal, &ord);
            assert_eq!(is_shelling(&facets).unwrap(), naive_shelling(&facets));
        }
    }
}

/// Orderings on which the two properties disagree. The qlq condition only
/// asks for one adjacent predecessor, so every shelling passes it but not
/// conversely.
#[test]
fn qlq_and_shelling_agreement_report() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut canonical_disagreements = 0;
    let mut shuffled = (0, 0);
    let mut graphs: Vec<Graph> = (3..=5).map(|m| build_jahangir(m).unwrap()).collect();
    graphs.extend(random_graphs(23, 40, 10));
    for g in &graphs {
        let ideal = ideal_of(g);
        let canonical = find_qlq_ordering(&ideal, 0).unwrap().unwrap();
        let qlq = has_quasi_linear_quotients(&ideal, &canonical)
            .unwrap()
            .passed;
        if qlq != is_shelling(&ordered(&ideal, &canonical)).unwrap() {
            canonical_disagreements += 1;
        }
        for seed in 1..=3 {
            let ord = find_qlq_ordering(&ideal, seed).unwrap().unwrap();
            assert!(has_quasi_linear_quotients(&ideal, &ord).unwrap().passed);
            shuffled.0 += 1;
            if !is_shelling(&ordered(&ideal, &ord)).unwrap() {
                shuffled.1 += 1;
            }
        }
        for _ in 0..3 {
            let mut ord: Vec<usize> = (0..ideal.len()).collect();
            ord.shuffle(&mut rng);
            if is_shelling(&ordered(&ideal, &ord)).unwrap() {
                assert!(has_quasi_linear_quotients(&ideal, &ord).unwrap().passed);
            }
        }
    }
    println!(
        "qlq vs shelling: {} searched orderings, {} pass qlq without being shellings",
        shuffled.0, shuffled.1
    );
    assert_eq!(canonical_disagreements, 0);
}

#[test]
fn verdicts_on_random_graphs() {
    for g in random_graphs(29, 20, 10) {
        let r = cohen_macaulay_verdict(&g, OrderingStrategy::Search, 0).unwrap();
        assert_eq!(r.verdict, Verdict::True);
        let cert = r.certificate.unwrap();
        assert!(cert.is_shelling);
        assert_eq!(
            cert.facets.len(),
            spanning_complex(&g).unwrap().facets().len()
        );
    }
}

#[test]
fn facet_ideal_generators_are_incomparable() {
    for g in random_graphs(31, 20, 10) {
        let ideal = ideal_of(&g);
        for a in ideal.generators() {
            for b in ideal.generators() {
                assert!(a == b || !a.divides(*b));
            }
        }
    }
}

proptest! {
    #[test]
    fn colon_mindeg_monotone(
        sets in prop::collection::vec(prop::collection::btree_set(0usize..8, 3), 2..8),
        current in prop::collection::btree_set(0usize..8, 3),
    ) {
        let gens: Vec<SquarefreeMonomial> =
            sets.iter().map(|s| SquarefreeMonomial::new(s.iter().copied().collect())).collect();
        let cur = SquarefreeMonomial::new(current.iter().copied().collect());
        let mut last = usize::MAX;
        for i in 1..=gens.len() {
            let d = colon_mindeg(&gens[..i], cur).unwrap();
            prop_assert!(d <= last);
            last = d;
        }
    }
}
