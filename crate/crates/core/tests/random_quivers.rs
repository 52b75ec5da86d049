use proptest::prelude::*;

use taumute::bqa::{Algebra, Quiver, Relation};
use taumute::cluster::{enumerate_seeds, ExchangeQuiver};
use taumute::models::cyclic_nakayama;
use taumute::silt2::check_silting_bijection;
use taumute::taut::{
    check_dagger, check_g_vectors, check_hasse_equals_exchange, check_two_complements, enumerate, TauTilting,
};

/// A_n with arbitrary orientation, optionally killing every composable pair
/// of arrows in a chosen subset.
fn oriented_an(n: usize, flips: &[bool], zero: &[bool]) -> Algebra {
    let names: Vec<String> = (0..n - 1).map(|i| format!("a{i}")).collect();
    let arrows: Vec<(&str, usize, usize)> = (0..n - 1)
        .map(|i| if flips[i] { (names[i].as_str(), i + 1, i) } else { (names[i].as_str(), i, i + 1) })
        .collect();
    let q = Quiver::from_triples(n, &arrows).unwrap();
    let mut rels = Vec::new();
    for i in 0..n.saturating_sub(2) {
        if !zero[i] {
            continue;
        }
        let (a, b) = (&arrows[i], &arrows[i + 1]);
        if a.2 == b.1 {
            rels.push(Relation::zero_path(vec![i, i + 1]));
        } else if b.2 == a.1 {
            rels.push(Relation::zero_path(vec![i + 1, i]));
        }
    }
    Algebra::build(q, rels).unwrap()
}

fn catalan(n: u64) -> u64 {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn poset_invariants(n in 2usize..5, flips in prop::collection::vec(any::<bool>(), 4), zero in prop::collection::vec(any::<bool>(), 4)) {
        let alg = oriented_an(n, &flips, &zero);
        let tt = TauTilting::new(&alg);
        let poset = enumerate(&tt, 1000).unwrap();
        prop_assert!(poset.complete);
        // every node has exactly n neighbours
        prop_assert!(poset.degrees().iter().all(|&d| d == n));
        prop_assert!(check_two_complements(&tt, &poset).unwrap().passed());
        prop_assert!(check_hasse_equals_exchange(&tt, &poset).unwrap().passed());
        prop_assert!(check_g_vectors(&tt, &poset, 200).unwrap().passed());
        prop_assert!(check_silting_bijection(&tt, &poset).unwrap().passed());
        let op = enumerate(&tt.opposite(), 1000).unwrap();
        prop_assert_eq!(op.len(), poset.len());
        prop_assert!(check_dagger(&tt, &poset, &op).unwrap().passed());
        if alg.is_path_algebra() {
            // support τ-tilting pairs of a Dynkin A_n path algebra: the Catalan number
            prop_assert_eq!(poset.len() as u64, catalan(n as u64 + 1));
        }
    }

    #[test]
    fn clusters_match_path_algebra(n in 2usize..5, flips in prop::collection::vec(any::<bool>(), 4)) {
        let alg = oriented_an(n, &flips, &[false; 4]);
        let poset = enumerate(&TauTilting::new(&alg), 1000).unwrap();
        let g = enumerate_seeds(&ExchangeQuiver::from_algebra(&alg).unwrap(), 1000).unwrap();
        prop_assert!(g.complete);
        prop_assert_eq!(g.seeds.len(), poset.len());
    }
}

#[test]
fn cluster_tilted_a3_matches_cluster_count() {
    let tt = TauTilting::new(&cyclic_nakayama(3, 2).unwrap());
    let poset = enumerate(&tt, 1000).unwrap();
    let q = ExchangeQuiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
    let g = enumerate_seeds(&q, 1000).unwrap();
    assert_eq!(poset.len(), g.seeds.len());
    assert_eq!(poset.edges.len(), g.edges.len());
}
