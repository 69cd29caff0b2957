//! Independent oracles shared by the integration tests. Nothing here calls
//! the search code under test.
#![allow(dead_code)]

use bigenic::graph::{canonical_form, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes on `n` vertices by Burnside's lemma over
/// the permutation action on vertex pairs.
pub fn burnside_count(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    let mut total: u64 = 0;
    for p in &perms {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                let (a, b) = pairs[k];
                k = index(p[a], p[b]);
            }
        }
        total += 1 << cycles;
    }
    total / perms.len() as u64
}

/// Least adjacency code over all vertex orders: a brute-force canonical key.
pub fn brute_key(g: &Graph) -> Vec<bool> {
    let n = g.n();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut code = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    code.push(g.is_adjacent(p[u], p[v]));
                }
            }
            code
        })
        .min()
        .unwrap_or_default()
}

/// Chromatic number by trying every assignment of `k` colours, smallest `k` first.
pub fn naive_chromatic(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    for k in 0..=n {
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colours: Vec<u64> = (0..n)
                .map(|_| {
                    let x = c % k as u64;
                    c /= k as u64;
                    x
                })
                .collect();
            if edges.iter().all(|&(u, v)| colours[u] != colours[v]) {
                return k;
            }
        }
    }
    n
}

/// Induced containment by trying every injective map.
pub fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
    fn go(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        let k = map.len();
        if k == pattern.n() {
            return true;
        }
        for v in 0..host.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..k).all(|i| pattern.is_adjacent(i, k) == host.is_adjacent(map[i], v)) {
                map.push(v);
                if go(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    pattern.n() <= host.n() && go(host, pattern, &mut Vec::new())
}

/// All trees on `n` vertices up to isomorphism, by attaching leaves.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).unwrap()];
    for m in 2..=n {
        let mut next = std::collections::BTreeMap::new();
        for t in &level {
            for v in 0..m - 1 {
                let mut edges = t.edges();
                edges.push((v, m - 1));
                let g = Graph::from_edges(m, &edges).unwrap();
                let (canon, cert) = canonical_form(&g);
                next.entry(cert).or_insert(canon);
            }
        }
        level = next.into_values().collect();
    }
    if n == 0 {
        return vec![Graph::empty(0).unwrap()];
    }
    level
}
