mod common;

use bigenic::classify::{categories, classify, parse_survey_csv, survey, Category, Status};
use bigenic::families::graph_of;
use bigenic::graph::{enumerate_up_to, Graph};
use bigenic::recognize::minimal_open_co_h;
use common::{arb_graph, seeded};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

#[test]
fn surveys_for_2p2_and_p5_coincide() {
    let a = survey(&graph_of("2P2").unwrap(), 7).unwrap();
    let b = survey(&graph_of("P5").unwrap(), 7).unwrap();
    assert_eq!(a.rows.len(), 1252);
    for (x, y) in a.rows.iter().zip(&b.rows) {
        assert_eq!(x.graph6, y.graph6);
        assert_eq!(x.status, y.status, "H = {}", x.graph6);
    }
    assert!(a.anomalies.is_empty());
    assert_eq!(parse_survey_csv(&a.to_csv()).unwrap(), a.rows);
}

#[test]
fn minimal_open_cases_are_open() {
    for co_h in minimal_open_co_h() {
        let h = co_h.complement();
        for f in ["2P2", "P5"] {
            assert_eq!(classify(&graph_of(f).unwrap(), &h).unwrap().status, Status::Open);
        }
        assert_eq!(categories(&h).unwrap(), vec![Category::Open]);
    }
}

#[test]
fn no_inconsistency_on_six_vertices() {
    let all = enumerate_up_to(6).unwrap();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            classify(a, b).unwrap();
        }
    }
}

fn random_induced(g: &Graph, rng: &mut impl Rng) -> Graph {
    loop {
        let keep: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.7)).collect();
        if !keep.is_empty() {
            return g.induced_subgraph(&keep);
        }
    }
}

/// Hardness lifts to pairs of larger forbidden graphs and tractability
/// descends to pairs of smaller ones.
#[test]
fn verdicts_are_monotone_under_containment() {
    let all = enumerate_up_to(6).unwrap();
    let mut rng = seeded(5);
    for _ in 0..1000 {
        let c = all.choose(&mut rng).unwrap();
        let d = all.choose(&mut rng).unwrap();
        let a = random_induced(c, &mut rng);
        let b = random_induced(d, &mut rng);
        let small = classify(&a, &b).unwrap().status;
        let big = classify(c, d).unwrap().status;
        if small == Status::NpComplete {
            assert_ne!(big, Status::PolynomialTime);
        }
        if big == Status::PolynomialTime {
            assert_ne!(small, Status::NpComplete);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classify_is_symmetric_and_label_free(a in arb_graph(6), b in arb_graph(6)) {
        prop_assume!(a.n() > 0 && b.n() > 0);
        let ab = classify(&a, &b).unwrap();
        prop_assert_eq!(classify(&b, &a).unwrap().status, ab.status);
        let rev: Vec<usize> = (0..a.n()).rev().collect();
        prop_assert_eq!(classify(&a.permuted(&rev), &b).unwrap().status, ab.status);
        if ab.status != Status::Unknown {
            prop_assert!(!ab.trace.is_empty());
        }
    }
}
