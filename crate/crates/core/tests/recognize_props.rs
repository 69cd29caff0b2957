mod common;

use bigenic::families::graph_of;
use bigenic::graph::{contains_induced, enumerate_up_to, is_isomorphic, Graph};
use bigenic::recognize::{
    all_open_matches, in_class_t, in_class_t_with, minimal_open_co_h, recognize_t, tree_trichotomy,
    ClassTReading, TreeTrichotomyOutcome,
};
use common::trees;

fn t_graph(h: usize, i: usize, j: usize) -> Graph {
    graph_of(&format!("T{h},{i},{j}")).unwrap()
}

#[test]
fn recognize_t_matches_isomorphism_on_small_graphs() {
    let mut ts = Vec::new();
    for j in 0..=4 {
        for i in 0..=j {
            for h in 0..=i {
                if 3 + h + i + j <= 7 {
                    ts.push(((h, i, j), t_graph(h, i, j)));
                }
            }
        }
    }
    for g in enumerate_up_to(7).unwrap() {
        let expected = ts.iter().find(|(_, t)| is_isomorphic(t, &g)).map(|(p, _)| *p);
        assert_eq!(recognize_t(&g), expected);
    }
}

#[test]
fn class_t_readings_are_nested() {
    for g in enumerate_up_to(7).unwrap() {
        let strict = in_class_t(&g);
        assert_eq!(strict, in_class_t_with(&g, ClassTReading::AsWritten));
        if strict {
            assert!(in_class_t_with(&g, ClassTReading::LineGraph));
        }
        if g.is_linear_forest() {
            assert!(strict);
        }
    }
}

#[test]
fn open_matches_lie_in_line_graph_class() {
    for g in enumerate_up_to(7).unwrap() {
        for m in all_open_matches(&g) {
            assert!(m.satisfies_bounds());
            assert!(in_class_t_with(&g, ClassTReading::LineGraph));
        }
    }
    for co_h in minimal_open_co_h() {
        assert!(!all_open_matches(&co_h).is_empty());
    }
}

#[test]
fn tree_trichotomy_is_total_on_qualifying_trees() {
    let claw = graph_of("K1,3").unwrap();
    let p5 = Graph::path(5).unwrap();
    for n in 1..=9 {
        for t in trees(n) {
            let excluded = is_isomorphic(&t, &claw) || is_isomorphic(&t, &p5) || (t.is_path() && n <= 4);
            match tree_trichotomy(&t) {
                Err(_) => assert!(excluded),
                Ok(out) => {
                    assert!(!excluded);
                    match out {
                        TreeTrichotomyOutcome::ContainsK14 { witness } => {
                            assert!(t.max_degree() >= 4);
                            assert!(witness.is_induced_embedding(&graph_of("K1,4").unwrap(), &t));
                        }
                        TreeTrichotomyOutcome::ContainsS112 { witness } => {
                            assert_eq!(t.max_degree(), 3);
                            assert!(witness.is_induced_embedding(&graph_of("S1,1,2").unwrap(), &t));
                            assert!(contains_induced(&t, &graph_of("K1,4").unwrap()).is_none());
                        }
                        TreeTrichotomyOutcome::LongPath { vertices } => {
                            assert!(t.is_path());
                            assert!(vertices >= 6);
                        }
                    }
                }
            }
        }
    }
}
