use multiparking::activity::bfs_external;
use multiparking::bijection::{phi, psi};
use multiparking::census::spanning_forests;
use multiparking::graph::Multigraph;
use multiparking::parking::{
    is_multiparking_burning, is_multiparking_subsets, record, record_brute_force, rsum, sweep_values,
};
use multiparking::tutte::{tutte_corank_nullity, tutte_dc, BiPoly};
use multiparking::{ChoiceOrder, Graph, VertexFunction};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let k = Graph::complete(n);
            let edges = k.edges().iter().zip(keep).filter(|(_, b)| *b).map(|(e, _)| *e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn choice() -> impl Strategy<Value = ChoiceOrder> {
    (0..ChoiceOrder::builtins().len()).prop_map(|i| ChoiceOrder::builtins()[i].clone())
}

/// A graph together with a candidate from the sweep range.
fn graph_and_function(max_n: usize) -> impl Strategy<Value = (Graph, VertexFunction)> {
    graph(max_n).prop_flat_map(|g| {
        let ranges: Vec<_> = g.vertices().map(|v| sweep_values(&g, v)).collect();
        let picks: Vec<_> = ranges.iter().map(|r| 0..r.len()).collect();
        (Just(g), picks).prop_map(move |(g, idx)| {
            let values = idx.iter().zip(&ranges).map(|(&i, r)| r[i]).collect();
            (g, VertexFunction::new(values))
        })
    })
}

fn poly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec((0u32..4, 0u32..4, -20i64..20), 0..6).prop_map(|terms| {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn forests_survive_the_round_trip(g in graph(6), c in choice(), pick in any::<proptest::sample::Index>()) {
        let forests = spanning_forests(&g);
        let forest = pick.get(&forests);
        let (f, _) = psi(&g, &c, forest).unwrap();
        prop_assert_eq!(&phi(&g, &c, &f).unwrap().0, forest);
        prop_assert_eq!(f.roots(), forest.roots().to_vec());
    }

    #[test]
    fn subset_and_burning_predicates_agree((g, f) in graph_and_function(6)) {
        let subsets = is_multiparking_subsets(&g, &f).unwrap();
        let burning = is_multiparking_burning(&g, &f).unwrap().is_complete();
        prop_assert_eq!(subsets, burning);
    }

    #[test]
    fn accepted_functions_round_trip((g, f) in graph_and_function(6), c in choice()) {
        prop_assume!(is_multiparking_burning(&g, &f).unwrap().is_complete());
        let (forest, _) = phi(&g, &c, &f).unwrap();
        prop_assert_eq!(psi(&g, &c, &forest).unwrap().0, f.clone());
        for v in f.roots() {
            prop_assert_eq!(record(&g, &f, v).unwrap(), record_brute_force(&g, &f, v).unwrap());
        }
    }

    #[test]
    fn rsum_counts_active_edges(g in graph(6), pick in any::<proptest::sample::Index>()) {
        let forests = spanning_forests(&g);
        let forest = pick.get(&forests);
        let (f, _) = psi(&g, &ChoiceOrder::BreadthFirstQueue, forest).unwrap();
        prop_assert_eq!(rsum(&g, &f).unwrap() as usize, bfs_external(&g, forest).unwrap().len());
    }

    #[test]
    fn deletion_contraction_matches_subset_sweep(g in graph(6)) {
        prop_assert_eq!(tutte_dc(&Multigraph::from(&g)), tutte_corank_nullity(&g).unwrap());
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(6), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
        prop_assert_eq!(tutte_dc(&Multigraph::from(&g)), tutte_dc(&Multigraph::from(&h)));
    }

    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(p.shift(2, -1).shift(-2, 1), p.clone());
        prop_assert!((p.clone() - p.clone()).is_zero());
    }

    #[test]
    fn evaluation_is_multiplicative(p in poly(), q in poly(), x in -5i64..5, y in 1i64..5) {
        let (x, y) = (BigRational::from_integer(x.into()), BigRational::new(BigInt::from(1), y.into()));
        prop_assert_eq!((&p * &q).evaluate(&x, &y), p.evaluate(&x, &y) * q.evaluate(&x, &y));
    }

    #[test]
    fn polynomial_json_round_trip(p in poly()) {
        let text = serde_json::to_string(&p.to_json()).unwrap();
        prop_assert_eq!(BiPoly::from_json(&serde_json::from_str(&text).unwrap()).unwrap(), p);
    }
}
