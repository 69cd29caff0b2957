use std::collections::BTreeMap;

use super::canon::{canonical_form, Certificate};
use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_LIMIT: usize = 7;

/// Largest order for which every edge subset is generated directly.
const DIRECT_LIMIT: usize = 5;

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, ordered by edge count and then by certificate.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_graphs_with_limit(n: usize, limit: usize) -> Result<Vec<Graph>> {
    if n > limit {
        return Err(Error::limit(format!(
            "enumeration of {n}-vertex graphs exceeds the limit of {limit}"
        )));
    }
    let classes = if n <= DIRECT_LIMIT {
        all_edge_subsets(n)
    } else {
        let mut level = all_edge_subsets(DIRECT_LIMIT);
        for m in DIRECT_LIMIT + 1..=n {
            level = augment(&level, m);
        }
        level
    };
    Ok(classes)
}

/// Classes on `1..=max_n` vertices, by order and then as in
/// [`enumerate_graphs`].
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > DEFAULT_ENUMERATION_LIMIT {
        return Err(Error::limit(format!(
            "enumeration of {max_n}-vertex graphs exceeds the limit of {DEFAULT_ENUMERATION_LIMIT}"
        )));
    }
    let mut out = Vec::new();
    let mut level = Vec::new();
    for n in 1..=max_n {
        level = if n <= DIRECT_LIMIT {
            all_edge_subsets(n)
        } else {
            augment(&level, n)
        };
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

fn collect(map: BTreeMap<(usize, Certificate), Graph>) -> Vec<Graph> {
    map.into_values().collect()
}

fn insert(map: &mut BTreeMap<(usize, Certificate), Graph>, g: &Graph) {
    let (canon, cert) = canonical_form(g);
    map.entry((canon.edge_count(), cert)).or_insert(canon);
}

fn all_edge_subsets(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut map = BTreeMap::new();
    for subset in 0u64..1 << pairs.len() {
        let mut rows = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if subset >> i & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        insert(&mut map, &Graph::from_rows(rows));
    }
    collect(map)
}

/// Every class on `n` vertices, from the classes on `n - 1` by adding a new
/// vertex with each possible neighbourhood.
fn augment(smaller: &[Graph], n: usize) -> Vec<Graph> {
    let mut map = BTreeMap::new();
    for g in smaller {
        for nbhd in 0u64..1 << (n - 1) {
            let mut rows: Vec<u64> = (0..n - 1)
                .map(|v| g.neighbours(v) | (nbhd >> v & 1) << (n - 1))
                .collect();
            rows.push(nbhd);
            insert(&mut map, &Graph::from_rows(rows));
        }
    }
    collect(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_graphs(0).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(3).unwrap().len(), 4);
    }

    #[test]
    fn over_limit_is_resource_error() {
        assert!(matches!(enumerate_graphs(8), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn up_to_concatenates_levels() {
        let all = enumerate_up_to(5).unwrap();
        assert_eq!(all.len(), 1 + 2 + 4 + 11 + 34);
        assert_eq!(all[7..18].to_vec(), enumerate_graphs(4).unwrap());
    }

    #[test]
    fn ordered_by_edge_count() {
        let gs = enumerate_graphs(4).unwrap();
        assert!(gs.windows(2).all(|w| w[0].edge_count() <= w[1].edge_count()));
        assert_eq!(gs.first().unwrap().edge_count(), 0);
        assert_eq!(gs.last().unwrap().edge_count(), 6);
    }
}
