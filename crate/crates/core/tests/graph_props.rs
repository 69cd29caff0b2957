mod common;

use bigenic::families::graph_of;
use bigenic::graph::{
    canonical_form, contains_induced, enumerate_graphs, from_graph6, is_isomorphic, to_graph6, Graph,
};
use common::{arb_graph, brute_key, burnside_count, graph_from_bits, naive_contains};
use proptest::prelude::*;

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(20)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&order);
        prop_assert_eq!(canonical_form(&g).1, canonical_form(&h).1);
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn witnesses_are_induced_embeddings(host in arb_graph(10), pattern in arb_graph(5)) {
        let found = contains_induced(&host, &pattern);
        prop_assert_eq!(found.is_some(), naive_contains(&host, &pattern));
        if let Some(w) = found {
            prop_assert!(w.is_induced_embedding(&pattern, &host));
        }
    }

    #[test]
    fn containment_is_transitive(c in arb_graph(9), picks in proptest::collection::vec(any::<bool>(), 9), drop in any::<u8>()) {
        // b is an induced subgraph of c, a an induced subgraph of b.
        let keep_b: Vec<usize> = (0..c.n()).filter(|&v| picks[v]).collect();
        let b = c.induced_subgraph(&keep_b);
        let keep_a: Vec<usize> = (0..b.n()).filter(|&v| b.n() == 0 || v != drop as usize % b.n()).collect();
        let a = b.induced_subgraph(&keep_a);
        prop_assert!(contains_induced(&c, &b).is_some());
        prop_assert!(contains_induced(&b, &a).is_some());
        prop_assert!(contains_induced(&c, &a).is_some());
    }

    #[test]
    fn complement_preserves_containment(host in arb_graph(9), pattern in arb_graph(4)) {
        prop_assert_eq!(
            contains_induced(&host, &pattern).is_some(),
            contains_induced(&host.complement(), &pattern.complement()).is_some()
        );
    }
}

#[test]
fn enumeration_matches_burnside() {
    for n in 0..=7 {
        assert_eq!(enumerate_graphs(n).unwrap().len() as u64, burnside_count(n), "n = {n}");
    }
}

#[test]
fn enumeration_matches_brute_force_dedup() {
    for n in 0usize..=5 {
        let mut keys = std::collections::BTreeSet::new();
        let pairs = n * n.saturating_sub(1) / 2;
        for bits in 0u64..1 << pairs {
            keys.insert(brute_key(&graph_from_bits(n, bits)));
        }
        let ours: std::collections::BTreeSet<Vec<bool>> =
            enumerate_graphs(n).unwrap().iter().map(brute_key).collect();
        assert_eq!(ours, keys, "n = {n}");
    }
}

#[test]
fn enumerated_classes_are_pairwise_non_isomorphic() {
    let gs = enumerate_graphs(6).unwrap();
    let keys: std::collections::BTreeSet<Vec<bool>> = gs.iter().map(brute_key).collect();
    assert_eq!(keys.len(), gs.len());
}

#[test]
fn line_graph_of_subdivided_claw_is_t() {
    for h in 0..=3 {
        for i in h..=3 {
            for j in i..=3 {
                let s = graph_of(&format!("S{},{},{}", h + 1, i + 1, j + 1)).unwrap();
                let t = graph_of(&format!("T{h},{i},{j}")).unwrap();
                assert!(is_isomorphic(&s.line_graph().unwrap(), &t), "T{h},{i},{j}");
            }
        }
    }
}

#[test]
fn line_graphs_of_small_graphs() {
    let claw = graph_of("K1,3").unwrap();
    assert!(is_isomorphic(&claw.line_graph().unwrap(), &Graph::complete(3).unwrap()));
    let c5 = Graph::cycle(5).unwrap();
    assert!(is_isomorphic(&c5.line_graph().unwrap(), &c5));
}
