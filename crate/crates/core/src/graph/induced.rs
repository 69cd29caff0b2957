//! Induced subgraph search by backtracking over injective maps.

use serde::{Deserialize, Serialize};

use super::{bits, Graph};

/// An induced embedding: pattern vertex `i` maps to host vertex `mapping[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub mapping: Vec<usize>,
}

impl Witness {
    /// Re-check that the mapping is injective and preserves both adjacency
    /// and non-adjacency.
    pub fn is_induced_embedding(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.mapping.len() != pattern.n() {
            return false;
        }
        let mut used = 0u64;
        for &h in &self.mapping {
            if h >= host.n() || used >> h & 1 == 1 {
                return false;
            }
            used |= 1 << h;
        }
        (0..pattern.n()).all(|a| {
            (a + 1..pattern.n()).all(|b| {
                pattern.is_adjacent(a, b) == host.is_adjacent(self.mapping[a], self.mapping[b])
            })
        })
    }
}

/// Order pattern vertices so that each one (after the first of its
/// component) has as many already-placed neighbours as possible.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                let linked = (pattern.neighbours(v) & placed).count_ones();
                (linked, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    order: Vec<usize>,
    // For position k: bitmask of earlier positions adjacent to order[k].
    adjacent_before: Vec<u64>,
    // Host vertices able to take order[k] by degree counts alone.
    allowed: Vec<u64>,
    image: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, k: usize, used: u64) -> bool {
        if k == self.order.len() {
            return true;
        }
        let mut candidates = self.allowed[k] & !used;
        for j in 0..k {
            let h = self.image[j];
            if self.adjacent_before[k] >> j & 1 == 1 {
                candidates &= self.host.neighbours(h);
            } else {
                candidates &= !self.host.neighbours(h);
            }
            if candidates == 0 {
                return false;
            }
        }
        for h in bits(candidates) {
            self.image[k] = h;
            if self.extend(k + 1, used | 1 << h) {
                return true;
            }
        }
        false
    }
}

/// Find an induced copy of `pattern` in `host`.
///
/// The search is deterministic: pattern vertices are placed in a fixed
/// order and host candidates are tried in increasing index order, so the
/// same inputs always produce the same witness.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Witness> {
    let (n, hn) = (pattern.n(), host.n());
    if n > hn {
        return None;
    }
    if n == 0 {
        return Some(Witness { mapping: vec![] });
    }
    if pattern.edge_count() > host.edge_count()
        || pattern.complement().edge_count() > host.complement().edge_count()
    {
        return None;
    }
    let order = search_order(pattern);
    let position: Vec<usize> = {
        let mut p = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            p[v] = k;
        }
        p
    };
    let adjacent_before = order
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            bits(pattern.neighbours(v))
                .filter(|&u| position[u] < k)
                .fold(0u64, |acc, u| acc | 1 << position[u])
        })
        .collect();
    let allowed = order
        .iter()
        .map(|&v| {
            let deg = pattern.degree(v);
            let non_deg = n - 1 - deg;
            (0..hn)
                .filter(|&h| host.degree(h) >= deg && hn - 1 - host.degree(h) >= non_deg)
                .fold(0u64, |acc, h| acc | 1 << h)
        })
        .collect();
    let mut search = Search {
        host,
        order,
        adjacent_before,
        allowed,
        image: vec![0; n],
    };
    if !search.extend(0, 0) {
        return None;
    }
    let mut mapping = vec![0; n];
    for (k, &v) in search.order.iter().enumerate() {
        mapping[v] = search.image[k];
    }
    Some(Witness { mapping })
}
