//! Small simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex, so neighbourhood
//! intersections and complements are single word operations. Graphs are
//! immutable once built; every operation returns a new value.

mod canon;
mod enumerate;
mod format;
mod induced;

pub use canon::{canonical_form, is_isomorphic, Certificate};
pub use enumerate::{
    enumerate_graphs, enumerate_graphs_with_limit, enumerate_up_to, DEFAULT_ENUMERATION_LIMIT,
};
pub use format::{from_graph6, to_dimacs, to_graph6};
pub use induced::{contains_induced, Witness};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Bitmask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate over the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::limit(format!(
                "{n} vertices exceeds the {MAX_VERTICES}-vertex cap"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::validation(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::validation(format!("self-loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Build from adjacency rows that are already symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_VERTICES);
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(u, r)| r & (1 << u) == 0 && bits(*r).all(|v| rows[v] & (1 << u) != 0)));
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::empty(n).map(|g| g.complement())
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::validation(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(r: usize, s: usize) -> Result<Self> {
        let edges: Vec<_> = (0..r)
            .flat_map(|u| (r..r + s).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(r + s, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1 << v))
            .collect();
        Graph::from_rows(rows)
    }

    /// `self + other`, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::limit(format!(
                "disjoint union has {n} vertices, cap is {MAX_VERTICES}"
            )));
        }
        let shift = self.n;
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << shift));
        Ok(Graph::from_rows(rows))
    }

    /// `self` joined to `other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        Ok(self
            .complement()
            .disjoint_union(&other.complement())?
            .complement())
    }

    /// Subgraph induced by the vertices in `vertices`, relabelled in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let rows = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.is_adjacent(u, v))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Relabel so that old vertex `order[i]` becomes vertex `i`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n, "permutation length mismatch");
        self.induced_subgraph(order)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let next = bits(frontier).fold(0u64, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Connected components as induced subgraphs, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Graph> {
        self.component_masks()
            .into_iter()
            .map(|m| self.induced_subgraph(&bits(m).collect::<Vec<_>>()))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// True if the graph has no cycle at all (induced or not).
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_masks().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.is_forest()
    }

    /// True if every component is a path.
    pub fn is_linear_forest(&self) -> bool {
        self.is_forest() && self.max_degree() <= 2
    }

    pub fn is_path(&self) -> bool {
        self.n > 0 && self.is_connected() && self.is_linear_forest()
    }

    /// Line graph: one vertex per edge (in [`Graph::edges`] order), two
    /// adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        if edges.len() > MAX_VERTICES {
            return Err(Error::limit(format!(
                "line graph would have {} vertices, cap is {MAX_VERTICES}",
                edges.len()
            )));
        }
        let rows = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|&(j, &(c, d))| i != j && (a == c || a == d || b == c || b == d))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(Graph::from_rows(rows))
    }

    /// True if `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: u64) -> bool {
        bits(vertices).all(|v| vertices & !(1 << v) & !self.adj[v] == 0)
    }

    /// True if `vertices` are pairwise non-adjacent.
    pub fn is_independent(&self, vertices: u64) -> bool {
        bits(vertices).all(|v| self.adj[v] & vertices == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}
