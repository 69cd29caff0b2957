//! Exact solvers: NAE-3SAT by exhaustive search, maximum clique, and
//! k-colouring / list colouring by deterministic backtracking.
//!
//! The colouring search keeps one colour-domain bitmask per vertex, fixes
//! every vertex whose domain is a singleton before branching, and branches
//! on the uncoloured vertex with the smallest domain (lowest index on ties).
//! For plain k-colouring a maximum clique is coloured `1..=q` up front and
//! at most one unused colour is tried per branch.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadget::{ListAssignment, NaeInstance};
use crate::graph::{bits, low_mask, Graph};

/// Largest variable count accepted by [`solve_nae`].
pub const MAX_NAE_VARS: usize = 24;

/// Search-node budget used by the colouring solvers unless overridden.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Colour of each vertex, colours starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colouring(pub Vec<u32>);

impl Colouring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.0.len() == g.n()
            && self.0.iter().all(|&c| c >= 1)
            && g.edges().iter().all(|&(u, v)| self.0[u] != self.0[v])
    }

    pub fn respects(&self, lists: &ListAssignment) -> bool {
        self.0.len() == lists.len() && self.0.iter().enumerate().all(|(v, &c)| lists.contains(v, c))
    }

    pub fn max_colour(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

/// Truth value of each variable; index 0 is variable 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    /// Every clause has a true and a false variable.
    pub fn nae_satisfies(&self, inst: &NaeInstance) -> bool {
        self.0.len() == inst.num_vars()
            && inst.clauses().iter().all(|cl| {
                let vals = cl.map(|v| self.0[v - 1]);
                vals.contains(&true) && vals.contains(&false)
            })
    }
}

pub fn solve_nae(inst: &NaeInstance) -> Result<Option<Assignment>> {
    let n = inst.num_vars();
    if n > MAX_NAE_VARS {
        return Err(Error::limit(format!(
            "{n} variables exceeds the exhaustive limit of {MAX_NAE_VARS}"
        )));
    }
    let masks: Vec<u32> = inst
        .clauses()
        .iter()
        .map(|cl| cl.iter().fold(0, |m, &v| m | 1 << (v - 1)))
        .collect();
    let found = (0u32..1 << n).find(|&a| masks.iter().all(|&m| a & m != 0 && a & m != m));
    Ok(found.map(|a| Assignment((0..n).map(|i| a >> i & 1 == 1).collect())))
}

/// A maximum clique as a vertex mask: greedy seed, then branch and bound
/// with a greedy-colouring bound.
pub fn max_clique(g: &Graph) -> u64 {
    let mut best = greedy_clique(g);
    expand(g, 0, g.vertex_mask(), &mut best);
    best
}

fn greedy_clique(g: &Graph) -> u64 {
    let mut clique = 0u64;
    let mut cand = g.vertex_mask();
    while cand != 0 {
        let v = bits(cand)
            .max_by_key(|&v| ((g.neighbours(v) & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("non-empty");
        clique |= 1 << v;
        cand &= g.neighbours(v);
    }
    clique
}

fn expand(g: &Graph, current: u64, cand: u64, best: &mut u64) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    // Greedy colour classes over cand; a vertex with colour c bounds the
    // clique through it and earlier vertices by |current| + c.
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut avail = uncoloured;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !g.neighbours(v);
            uncoloured &= !(1 << v);
            order.push((v, colour));
        }
    }
    let mut cand = cand;
    for &(v, bound) in order.iter().rev() {
        if current.count_ones() + bound <= best.count_ones() {
            return;
        }
        expand(g, current | 1 << v, cand & g.neighbours(v), best);
        cand &= !(1 << v);
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// Colours 0..k are interchangeable; try only one unused colour per node.
    interchangeable: bool,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Assign `colour` to `v` and remove it from neighbours' domains.
    /// Returns false when a neighbour's domain empties.
    fn assign(&self, v: usize, colour: usize, assigned: &mut [Option<usize>], domains: &mut [u64]) -> bool {
        assigned[v] = Some(colour);
        domains[v] = 1 << colour;
        for u in bits(self.g.neighbours(v)) {
            if assigned[u].is_none() {
                domains[u] &= !(1 << colour);
                if domains[u] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn propagate(&self, assigned: &mut [Option<usize>], domains: &mut [u64]) -> bool {
        loop {
            let forced = (0..assigned.len())
                .find(|&v| assigned[v].is_none() && domains[v].count_ones() == 1);
            match forced {
                None => return true,
                Some(v) => {
                    let c = domains[v].trailing_zeros() as usize;
                    if !self.assign(v, c, assigned, domains) {
                        return false;
                    }
                }
            }
        }
    }

    fn run(&mut self, mut assigned: Vec<Option<usize>>, mut domains: Vec<u64>) -> Result<Option<Vec<usize>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::limit(format!(
                "colouring search exceeded {} nodes",
                self.budget
            )));
        }
        if !self.propagate(&mut assigned, &mut domains) {
            return Ok(None);
        }
        let next = (0..assigned.len())
            .filter(|&v| assigned[v].is_none())
            .min_by_key(|&v| (domains[v].count_ones(), v));
        let Some(v) = next else {
            return Ok(Some(assigned.into_iter().map(|c| c.expect("all assigned")).collect()));
        };
        let used = assigned.iter().flatten().fold(0u64, |m, &c| m | 1 << c);
        let mut tried_fresh = false;
        for c in bits(domains[v]) {
            if self.interchangeable && used >> c & 1 == 0 {
                if tried_fresh {
                    continue;
                }
                tried_fresh = true;
            }
            let mut a = assigned.clone();
            let mut d = domains.clone();
            if self.assign(v, c, &mut a, &mut d) {
                if let Some(found) = self.run(a, d)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }
}

pub fn solve_k_colouring(g: &Graph, k: usize) -> Result<Option<Colouring>> {
    solve_k_colouring_with_budget(g, k, DEFAULT_NODE_BUDGET)
}

pub fn solve_k_colouring_with_budget(g: &Graph, k: usize, budget: u64) -> Result<Option<Colouring>> {
    let n = g.n();
    if k >= n {
        return Ok(Some(Colouring((1..=n as u32).collect())));
    }
    let clique = max_clique(g);
    if clique.count_ones() as usize > k {
        return Ok(None);
    }
    let mut search = Search { g, interchangeable: true, nodes: 0, budget };
    let mut assigned = vec![None; n];
    let mut domains = vec![low_mask(k); n];
    for (colour, v) in bits(clique).enumerate() {
        if !search.assign(v, colour, &mut assigned, &mut domains) {
            return Ok(None);
        }
    }
    Ok(search
        .run(assigned, domains)?
        .map(|cs| Colouring(cs.into_iter().map(|c| c as u32 + 1).collect())))
}

pub fn solve_list_colouring(g: &Graph, lists: &ListAssignment) -> Result<Option<Colouring>> {
    solve_list_colouring_with_budget(g, lists, DEFAULT_NODE_BUDGET)
}

pub fn solve_list_colouring_with_budget(
    g: &Graph,
    lists: &ListAssignment,
    budget: u64,
) -> Result<Option<Colouring>> {
    if lists.len() != g.n() {
        return Err(Error::validation(format!(
            "{} lists for a graph on {} vertices",
            lists.len(),
            g.n()
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| lists.get(v).is_empty()) {
        return Err(Error::validation(format!("vertex {v} has an empty list")));
    }
    if let Some(v) = (0..g.n()).find(|&v| lists.contains(v, 0)) {
        return Err(Error::validation(format!("vertex {v} lists colour 0, colours start at 1")));
    }
    // Compress the colours that occur into bit positions.
    let mut palette: Vec<u32> = lists.0.iter().flatten().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    if palette.len() > 64 {
        return Err(Error::limit(format!(
            "{} distinct colours in the lists, at most 64 supported",
            palette.len()
        )));
    }
    let domains: Vec<u64> = lists
        .0
        .iter()
        .map(|l| {
            l.iter()
                .map(|c| palette.binary_search(c).expect("colour in palette"))
                .fold(0u64, |m, i| m | 1 << i)
        })
        .collect();
    let mut search = Search { g, interchangeable: false, nodes: 0, budget };
    Ok(search
        .run(vec![None; g.n()], domains)?
        .map(|cs| Colouring(cs.into_iter().map(|i| palette[i]).collect())))
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Least `k` admitting a k-colouring, counting from the clique number.
pub fn chromatic_number_with_budget(g: &Graph, budget: u64) -> Result<usize> {
    let mut k = max_clique(g).count_ones() as usize;
    while solve_k_colouring_with_budget(g, k, budget)?.is_none() {
        k += 1;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::graph_of;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn nae_examples() {
        let single = NaeInstance::new(3, vec![[1, 2, 3]]).unwrap();
        let a = solve_nae(&single).unwrap().unwrap();
        assert!(a.nae_satisfies(&single));
        assert!(solve_nae(&NaeInstance::fano()).unwrap().is_none());
        let empty = NaeInstance::new(4, vec![]).unwrap();
        assert!(solve_nae(&empty).unwrap().is_some());
        let big = NaeInstance::new(25, vec![]).unwrap();
        assert!(matches!(solve_nae(&big), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn k_colouring_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(solve_k_colouring(&c5, 2).unwrap().is_none());
        let c = solve_k_colouring(&c5, 3).unwrap().unwrap();
        assert!(c.is_proper(&c5) && c.max_colour() <= 3);
        let k4 = Graph::complete(4).unwrap();
        assert!(solve_k_colouring(&k4, 4).unwrap().unwrap().is_proper(&k4));
        assert!(solve_k_colouring(&k4, 3).unwrap().is_none());
        assert!(solve_k_colouring(&Graph::empty(0).unwrap(), 0).unwrap().is_some());
    }

    #[test]
    fn list_colouring_examples() {
        let k2 = Graph::complete(2).unwrap();
        let same = ListAssignment::new(vec![vec![1], vec![1]]);
        assert!(solve_list_colouring(&k2, &same).unwrap().is_none());
        let ok = ListAssignment::new(vec![vec![1], vec![1, 7]]);
        let c = solve_list_colouring(&k2, &ok).unwrap().unwrap();
        assert_eq!(c.0, vec![1, 7]);
        assert!(c.respects(&ok));
        let empty = ListAssignment::new(vec![vec![1], vec![]]);
        let err = solve_list_colouring(&k2, &empty).unwrap_err();
        assert!(matches!(&err, Error::Validation(m) if m.contains("vertex 1")));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&graph_of("K3,3").unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let g = petersen();
        assert!(matches!(
            solve_k_colouring_with_budget(&g, 3, 0),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn clique_sizes() {
        assert_eq!(max_clique(&petersen()).count_ones(), 2);
        assert_eq!(max_clique(&graph_of("co(3P2)").unwrap()).count_ones(), 3);
        assert_eq!(max_clique(&Graph::empty(0).unwrap()), 0);
        let g = graph_of("K5+C4").unwrap();
        assert!(g.is_clique(max_clique(&g)));
        assert_eq!(max_clique(&g).count_ones(), 5);
    }
}

#[cfg(test)]
mod gadget_tests {
    use super::*;
    use crate::gadget::{build_variant, Variant};

    #[test]
    fn fano_g1p_has_no_14_colouring() {
        let g = build_variant(&NaeInstance::fano(), Variant::G1p).unwrap();
        assert!(solve_k_colouring(&g.graph, 14).unwrap().is_none());
        let g = build_variant(&NaeInstance::fano(), Variant::G2p).unwrap();
        assert!(solve_k_colouring(&g.graph, 14).unwrap().is_none());
        assert_eq!(chromatic_number(&g.graph).unwrap(), 15);
    }
}
