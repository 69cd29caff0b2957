//! Canonical labelling by individualisation and refinement.
//!
//! The vertex partition is refined until equitable; if cells remain, each
//! vertex of the first non-singleton cell is individualised in turn. A cell
//! made entirely of twins only needs one branch, since swapping twins is an
//! automorphism. The canonical form is the relabelling with the largest
//! adjacency-row sequence over all leaves. Disconnected graphs, and graphs
//! with a disconnected complement, are split first: each part is labelled
//! on its own and the parts are laid out in certificate order.

use super::Graph;

/// Isomorphism-class certificate: vertex count plus canonical adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    pub n: usize,
    pub rows: Vec<u64>,
}

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|m| (g.neighbours(v) & m).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn all_twins(g: &Graph, cell: &[usize]) -> bool {
    cell.iter().enumerate().all(|(i, &u)| {
        cell[i + 1..].iter().all(|&v| {
            g.neighbours(u) & !(1 << v) == g.neighbours(v) & !(1 << u)
        })
    })
}

fn leaf_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    order
        .iter()
        .map(|&u| {
            order
                .iter()
                .enumerate()
                .filter(|&(_, &v)| g.is_adjacent(u, v))
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect()
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = leaf_rows(g, &order);
        if best.as_ref().map_or(true, |(b, _)| rows > *b) {
            *best = Some((rows, order));
        }
        return;
    };
    let cell = &cells[target];
    let branches: &[usize] = if all_twins(g, cell) {
        &cell[..1]
    } else {
        cell
    };
    for &v in branches {
        let mut split = Vec::with_capacity(cells.len() + 1);
        split.extend_from_slice(&cells[..target]);
        split.push(vec![v]);
        split.push(cell.iter().copied().filter(|&u| u != v).collect());
        split.extend_from_slice(&cells[target + 1..]);
        search(g, split, best);
    }
}

fn search_order(g: &Graph) -> Vec<usize> {
    // Initial cells by degree, in increasing degree order.
    let mut by_degree: Vec<(usize, usize)> = (0..g.n()).map(|v| (g.degree(v), v)).collect();
    by_degree.sort();
    let mut cells: Partition = Vec::new();
    for (d, v) in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == d => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = None;
    search(g, cells, &mut best);
    best.expect("at least one leaf").1
}

/// Vertex order of the canonical labelling: `order[i]` becomes vertex `i`.
fn canonical_order(g: &Graph) -> Vec<usize> {
    if g.n() <= 1 {
        return (0..g.n()).collect();
    }
    let parts = g.component_masks();
    let (host, parts) = if parts.len() > 1 {
        (g.clone(), parts)
    } else {
        let co = g.complement();
        let co_parts = co.component_masks();
        if co_parts.len() == 1 {
            return search_order(g);
        }
        (co, co_parts)
    };
    let mut labelled: Vec<(Vec<u64>, Vec<usize>)> = parts
        .into_iter()
        .map(|m| {
            let verts: Vec<usize> = (0..host.n()).filter(|&v| m >> v & 1 == 1).collect();
            let sub = host.induced_subgraph(&verts);
            let local = canonical_order(&sub);
            let rows = leaf_rows(&sub, &local);
            (rows, local.into_iter().map(|i| verts[i]).collect())
        })
        .collect();
    labelled.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)).reverse());
    labelled.into_iter().flat_map(|(_, o)| o).collect()
}

/// Canonical relabelling of `g` and its certificate. Two graphs are
/// isomorphic exactly when their certificates are equal.
pub fn canonical_form(g: &Graph) -> (Graph, Certificate) {
    let order = canonical_order(g);
    let canon = g.permuted(&order);
    let rows = (0..g.n()).map(|v| canon.neighbours(v)).collect();
    (canon, Certificate { n: g.n(), rows })
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g).1 == canonical_form(h).1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_k3_and_p4_is_not_claw() {
        assert!(is_isomorphic(&Graph::cycle(3).unwrap(), &Graph::complete(3).unwrap()));
        assert!(!is_isomorphic(
            &Graph::path(4).unwrap(),
            &Graph::complete_bipartite(1, 3).unwrap()
        ));
    }

    #[test]
    fn relabelled_copies_share_certificate() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (0, 5)]).unwrap();
        let h = g.permuted(&[5, 3, 1, 0, 2, 4]);
        assert_eq!(canonical_form(&g).1, canonical_form(&h).1);
        assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn regular_graphs_are_handled() {
        // C6 and 2C3 are both 2-regular on 6 vertices but not isomorphic.
        let c3 = Graph::cycle(3).unwrap();
        let two_c3 = c3.disjoint_union(&c3).unwrap();
        assert!(!is_isomorphic(&Graph::cycle(6).unwrap(), &two_c3));
        assert!(is_isomorphic(&Graph::complete(12).unwrap(), &Graph::complete(12).unwrap()));
        assert!(is_isomorphic(&Graph::empty(12).unwrap(), &Graph::empty(12).unwrap()));
    }
}
