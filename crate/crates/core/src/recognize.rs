//! Membership tests for the structural classes used by the classifier.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::graph_of;
use crate::graph::{bits, contains_induced, low_mask, is_isomorphic, Graph, Witness};

/// All triangles `(u, v, w)` with `u < v < w`.
pub fn triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        let up = g.neighbours(u) & !low_mask(u + 1);
        for v in bits(up) {
            let common = up & g.neighbours(v) & !low_mask(v + 1);
            out.extend(bits(common).map(|w| (u, v, w)));
        }
    }
    out
}

/// The sorted triple `(h, i, j)` with `g` isomorphic to `T_{h,i,j}`, if any.
///
/// A graph is some `T_{h,i,j}` exactly when it is connected, has exactly
/// one triangle and as many edges as vertices (so the triangle is its only
/// cycle), every corner has degree at most 3 and every other vertex degree
/// at most 2. The tail lengths are then the sizes of the pendant paths.
pub fn recognize_t(g: &Graph) -> Option<(usize, usize, usize)> {
    let tri = triangles(g);
    if tri.len() != 1 || !g.is_connected() || g.edge_count() != g.n() {
        return None;
    }
    let (a, b, c) = tri[0];
    let corners = 1u64 << a | 1 << b | 1 << c;
    let degrees_ok = (0..g.n()).all(|v| {
        let limit = if corners >> v & 1 == 1 { 3 } else { 2 };
        g.degree(v) <= limit
    });
    if !degrees_ok {
        return None;
    }
    let mut tails: Vec<usize> = [a, b, c]
        .iter()
        .map(|&corner| {
            // Walk away from the triangle along the pendant path.
            let mut len = 0;
            let mut prev = corner;
            let mut cur = g.neighbours(corner) & !corners;
            while cur != 0 {
                let v = cur.trailing_zeros() as usize;
                len += 1;
                cur = g.neighbours(v) & !(1 << prev);
                prev = v;
            }
            len
        })
        .collect();
    tails.sort_unstable();
    Some((tails[0], tails[1], tails[2]))
}

/// Which `T_{h,i,j}` components count as members of class 𝒯.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTReading {
    /// Components `T_{h,i,j}` with `1 <= h`, as the class is usually written.
    AsWritten,
    /// Components `T_{h,i,j}` with `0 <= h`: every line graph of a
    /// subdivided claw. This is the class the NP-completeness criterion for
    /// complements is stated for, and it contains `C3` and the paw.
    LineGraph,
}

impl ClassTReading {
    fn min_h(self) -> usize {
        match self {
            ClassTReading::AsWritten => 1,
            ClassTReading::LineGraph => 0,
        }
    }
}

/// Class 𝒯 membership with `1 <= h <= i <= j` for non-path components.
pub fn in_class_t(g: &Graph) -> bool {
    in_class_t_with(g, ClassTReading::AsWritten)
}

pub fn in_class_t_with(g: &Graph, reading: ClassTReading) -> bool {
    g.components().iter().all(|c| {
        c.is_path() || recognize_t(c).is_some_and(|(h, _, _)| h >= reading.min_h())
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum TreeTrichotomyOutcome {
    ContainsK14 { witness: Witness },
    ContainsS112 { witness: Witness },
    LongPath { vertices: usize },
}

/// Split trees other than the claw, `P5` and induced subgraphs of `P4`
/// into three kinds: those with an induced `K1,4`, those with an induced
/// fork `S1,1,2`, and paths on at least six vertices.
pub fn tree_trichotomy(g: &Graph) -> Result<TreeTrichotomyOutcome> {
    if !g.is_tree() {
        return Err(Error::validation("tree_trichotomy: input is not a tree"));
    }
    if is_isomorphic(g, &Graph::complete_bipartite(1, 3)?) {
        return Err(Error::validation("tree_trichotomy: input is the claw K1,3"));
    }
    if is_isomorphic(g, &Graph::path(5)?) {
        return Err(Error::validation("tree_trichotomy: input is P5"));
    }
    if g.is_path() && g.n() <= 4 {
        return Err(Error::validation(
            "tree_trichotomy: input is an induced subgraph of P4",
        ));
    }
    let found = |pattern: &str| -> Result<Witness> {
        let p = graph_of(pattern)?;
        contains_induced(g, &p).ok_or_else(|| {
            Error::Inconsistency(format!("tree with this degree lacks an induced {pattern}"))
        })
    };
    match g.max_degree() {
        d if d >= 4 => Ok(TreeTrichotomyOutcome::ContainsK14 {
            witness: found("K1,4")?,
        }),
        3 => Ok(TreeTrichotomyOutcome::ContainsS112 {
            witness: found("S1,1,2")?,
        }),
        _ => Ok(TreeTrichotomyOutcome::LongPath { vertices: g.n() }),
    }
}

/// A parameterised family of complements `co(H)` whose Colouring status on
/// `(2P2, H)`-free and `(P5, H)`-free graphs is open. Families are numbered
/// 1..=6 in the order they are usually listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenPatternMatch {
    pub family: u8,
    pub s: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hij: Option<(usize, usize, usize)>,
}

impl OpenPatternMatch {
    /// Check the parameter bounds of the family.
    pub fn satisfies_bounds(&self) -> bool {
        let s = self.s;
        match (self.family, self.t, self.u, self.hij) {
            // sP1 + Pt + T_{h,i,j}, h <= i <= j <= 1, 2 <= t <= 3
            (1, Some(t), None, Some((h, i, j))) => h <= i && i <= j && j <= 1 && (2..=3).contains(&t),
            // sP1 + T_{h,i,j}, h <= i <= 1 <= j <= 3, h + i + j + s >= 3
            (2, None, None, Some((h, i, j))) => {
                h <= i && i <= 1 && 1 <= j && j <= 3 && h + i + j + s >= 3
            }
            // sP1 + T_{0,0,0}, s >= 2
            (3, None, None, Some((0, 0, 0))) => s >= 2,
            // sP1 + Pt, 3 <= t <= 7, s + t >= 6
            (4, Some(t), None, None) => (3..=7).contains(&t) && s + t >= 6,
            // sP1 + Pt + Pu, 2 <= t <= 3, 3 <= u <= 4, s + t + u >= 6
            (5, Some(t), Some(u), None) => {
                (2..=3).contains(&t) && (3..=4).contains(&u) && s + t + u >= 6
            }
            // sP1 + 2P2, s >= 1
            (6, Some(2), Some(2), None) => s >= 1,
            _ => false,
        }
    }
}

/// Shape of `co(H)`: isolated vertices, longer paths, and T components.
struct Shape {
    isolated: usize,
    paths: Vec<usize>,
    ts: Vec<(usize, usize, usize)>,
}

fn shape(g: &Graph) -> Option<Shape> {
    let mut sh = Shape {
        isolated: 0,
        paths: Vec::new(),
        ts: Vec::new(),
    };
    for c in g.components() {
        if c.n() == 1 {
            sh.isolated += 1;
        } else if c.is_path() {
            sh.paths.push(c.n());
        } else {
            sh.ts.push(recognize_t(&c)?);
        }
    }
    sh.paths.sort_unstable();
    Some(sh)
}

/// Every open family that `co_h` (the complement of H) belongs to.
pub fn all_open_matches(co_h: &Graph) -> Vec<OpenPatternMatch> {
    let Some(sh) = shape(co_h) else {
        return Vec::new();
    };
    let s = sh.isolated;
    let mut candidates = Vec::new();
    match (sh.paths.as_slice(), sh.ts.as_slice()) {
        (&[t], &[hij]) => candidates.push(OpenPatternMatch {
            family: 1,
            s,
            t: Some(t),
            u: None,
            hij: Some(hij),
        }),
        (&[], &[hij]) => {
            candidates.push(OpenPatternMatch {
                family: 2,
                s,
                t: None,
                u: None,
                hij: Some(hij),
            });
            candidates.push(OpenPatternMatch {
                family: 3,
                s,
                t: None,
                u: None,
                hij: Some(hij),
            });
        }
        (&[t], &[]) => candidates.push(OpenPatternMatch {
            family: 4,
            s,
            t: Some(t),
            u: None,
            hij: None,
        }),
        (&[t, u], &[]) => {
            candidates.push(OpenPatternMatch {
                family: 5,
                s,
                t: Some(t),
                u: Some(u),
                hij: None,
            });
            candidates.push(OpenPatternMatch {
                family: 6,
                s,
                t: Some(t),
                u: Some(u),
                hij: None,
            });
        }
        _ => {}
    }
    candidates.retain(OpenPatternMatch::satisfies_bounds);
    candidates
}

/// The lowest-numbered open family containing `co_h`, if any.
pub fn match_open_pattern(co_h: &Graph) -> Option<OpenPatternMatch> {
    all_open_matches(co_h).into_iter().next()
}

/// Complements `co(H)` of the ten minimal open cases.
pub const MINIMAL_OPEN_CO_H: [&str; 10] = [
    "C3+2P1",
    "C3+P2",
    "P1+2P2",
    "3P1+P3",
    "2P1+P4",
    "2P3",
    "P6",
    "T0,1,1+P1",
    "T0,1,2",
    "T1,1,1",
];

pub fn minimal_open_co_h() -> Vec<Graph> {
    MINIMAL_OPEN_CO_H
        .iter()
        .map(|e| graph_of(e).expect("valid expression"))
        .collect()
}
