mod common;

use bigenic::families::graph_of;
use bigenic::gadget::{build_variant, gadget_structure_report, NaeInstance, Variant};
use bigenic::solve::{chromatic_number, solve_list_colouring};
use bigenic::verify::{random_instances, verify, Lemma, G1P_PATTERNS, G2P_PATTERNS};
use common::naive_contains;

fn naive_nae(inst: &NaeInstance) -> bool {
    (0u32..1 << inst.num_vars()).any(|bits| {
        inst.clauses().iter().all(|c| {
            let t = c.iter().filter(|&&v| bits >> (v - 1) & 1 == 1).count();
            t == 1 || t == 2
        })
    })
}

fn all_instances(n: usize, m: usize) -> Vec<NaeInstance> {
    let triples: Vec<[usize; 3]> = (1..=n)
        .flat_map(|a| (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| [a, b, c])))
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; m];
    loop {
        if pick.windows(2).all(|w| w[0] < w[1]) {
            let clauses = pick.iter().map(|&i| triples[i]).collect();
            out.push(NaeInstance::new(n, clauses).unwrap());
        }
        let Some(pos) = (0..m).rev().find(|&i| pick[i] + 1 < triples.len()) else {
            return out;
        };
        pick[pos] += 1;
        for i in pos + 1..m {
            pick[i] = pick[pos];
        }
    }
}

#[test]
fn list_colourability_tracks_truth_table() {
    for n in 3..=4 {
        for m in 1..=4 {
            for inst in all_instances(n, m) {
                let sat = naive_nae(&inst);
                for v in [Variant::G1, Variant::G2] {
                    let g = build_variant(&inst, v).unwrap();
                    assert_eq!(solve_list_colouring(&g.graph, &g.lists).unwrap().is_some(), sat, "{inst}");
                }
            }
        }
    }
}

#[test]
fn extended_gadget_chromatic_number() {
    for inst in all_instances(4, 4).into_iter().chain([NaeInstance::fano()]) {
        let sat = naive_nae(&inst);
        let budget = 2 * inst.num_vars();
        for v in [Variant::G1p, Variant::G2p] {
            let chi = chromatic_number(&build_variant(&inst, v).unwrap().graph).unwrap();
            assert!(chi >= budget);
            assert_eq!(chi == budget, sat, "{inst}");
        }
    }
}

#[test]
fn fano_is_not_nae_satisfiable() {
    assert!(!naive_nae(&NaeInstance::fano()));
    for lemma in Lemma::ALL {
        assert!(verify(lemma, &NaeInstance::fano(), "fano").unwrap().holds());
    }
}

#[test]
fn freeness_agrees_with_naive_search() {
    for inst in all_instances(3, 1).into_iter().chain(all_instances(4, 2).into_iter().step_by(5)) {
        for (v, patterns) in [(Variant::G1p, &G1P_PATTERNS[..]), (Variant::G2p, &G2P_PATTERNS[..])] {
            let g = build_variant(&inst, v).unwrap().graph;
            for (direct, _) in patterns {
                assert!(!naive_contains(&g, &graph_of(direct).unwrap()), "{v:?} {direct} {inst}");
            }
        }
    }
}

#[test]
fn random_sweep_holds() {
    let instances = random_instances(30, 6, 8, 11).unwrap();
    assert_eq!(instances, random_instances(30, 6, 8, 11).unwrap());
    for (i, inst) in instances.iter().enumerate() {
        assert!(inst.num_vars() <= 6 && inst.num_clauses() <= 8);
        assert!(gadget_structure_report(&build_variant(inst, Variant::G2p).unwrap()).all_passed());
        for lemma in Lemma::ALL {
            let r = verify(lemma, inst, &format!("r{i}")).unwrap();
            assert!(r.holds(), "{:?}", r.violated());
        }
    }
}
