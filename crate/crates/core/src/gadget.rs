//! The NAE-3SAT to Colouring construction.
//!
//! From an instance with variables `x1..xn` and positive 3-clauses
//! `C1..Cm`, [`build_g1`] makes the complete bipartite list-colouring
//! instance on `x1..xn` versus `C1..Cm, C1'..Cm'`, [`build_g2`] additionally
//! turns the x side into a clique, and [`extend_with_clique`] replaces the
//! lists by a clique `k1..k2n` with `k_l ~ u` exactly when `l` is not in
//! `L(u)`, giving the plain 2n-colouring instances G1' and G2'.
//!
//! Vertex order is always `x1..xn, C1..Cm, C1'..Cm', k1..k2n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, is_isomorphic, Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NaeInstance {
    n: usize,
    clauses: Vec<[usize; 3]>,
}

impl NaeInstance {
    /// Variables are numbered `1..=n`; each clause names three distinct ones.
    pub fn new(n: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("instance needs at least one variable"));
        }
        for (idx, clause) in clauses.iter().enumerate() {
            if let Some(&v) = clause.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::validation(format!(
                    "clause {}: variable {v} out of range 1..={n}",
                    idx + 1
                )));
            }
            if clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2] {
                return Err(Error::validation(format!(
                    "clause {}: a variable appears more than once in {:?}",
                    idx + 1,
                    clause
                )));
            }
        }
        Ok(NaeInstance { n, clauses })
    }

    /// The seven lines of the Fano plane; not NAE-satisfiable.
    pub fn fano() -> Self {
        let lines = [
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6],
        ];
        NaeInstance::new(7, lines.to_vec()).expect("Fano lines are valid")
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Pairs `(a, b)` of 1-based clause indices, `a < b`, over the same
    /// variable set.
    pub fn duplicate_clauses(&self) -> Vec<(usize, usize)> {
        let keys: Vec<[usize; 3]> = self
            .clauses
            .iter()
            .map(|c| {
                let mut k = *c;
                k.sort_unstable();
                k
            })
            .collect();
        let mut out = Vec::new();
        for a in 0..keys.len() {
            for b in a + 1..keys.len() {
                if keys[a] == keys[b] {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }
}

impl fmt::Display for NaeInstance {
    /// The instance file format accepted by [`parse_nae`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p nae {} {}", self.n, self.clauses.len())?;
        for [a, b, c] in &self.clauses {
            writeln!(f, "{a} {b} {c} 0")?;
        }
        Ok(())
    }
}

/// Parse `p nae <n> <m>` followed by `m` clauses `v1 v2 v3 0`. Lines
/// starting with `c` are comments.
pub fn parse_nae(text: &str) -> Result<NaeInstance> {
    let mut tokens = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_start();
        if !trimmed.starts_with('c') {
            let base = offset;
            let mut col = 0;
            for piece in line.split_inclusive(char::is_whitespace) {
                let word = piece.trim_end();
                if !word.is_empty() {
                    tokens.push((base + col, word));
                }
                col += piece.len();
            }
        }
        offset += line.len();
    }
    let mut it = tokens.into_iter();
    match (it.next(), it.next()) {
        (Some((_, "p")), Some((_, "nae"))) => {}
        (Some((pos, _)), _) => return Err(Error::syntax(pos, "expected header 'p nae <n> <m>'")),
        (None, _) => return Err(Error::syntax(0, "empty instance")),
    }
    let mut header_number = |what: &str| -> Result<usize> {
        match it.next() {
            Some((pos, w)) => w
                .parse()
                .map_err(|_| Error::syntax(pos, format!("header {what} must be a non-negative integer, found '{w}'"))),
            None => Err(Error::syntax(text.len(), format!("header is missing {what}"))),
        }
    };
    let n = header_number("variable count")?;
    let m = header_number("clause count")?;
    let mut clauses = Vec::with_capacity(m);
    let mut current: Vec<usize> = Vec::new();
    for (pos, w) in it {
        let lit: i64 = w
            .parse()
            .map_err(|_| Error::syntax(pos, format!("expected an integer literal, found '{w}'")))?;
        if lit < 0 {
            return Err(Error::validation(format!(
                "clause {}: negative literal {lit}; only positive literals are allowed",
                clauses.len() + 1
            )));
        }
        if lit == 0 {
            if current.len() != 3 {
                return Err(Error::validation(format!(
                    "clause {}: expected 3 literals, found {}",
                    clauses.len() + 1,
                    current.len()
                )));
            }
            clauses.push([current[0], current[1], current[2]]);
            current.clear();
        } else {
            current.push(lit as usize);
        }
    }
    if !current.is_empty() {
        return Err(Error::syntax(text.len(), "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(Error::validation(format!(
            "header declares {m} clauses, found {}",
            clauses.len()
        )));
    }
    NaeInstance::new(n, clauses)
}

/// Per-vertex colour lists; colours are positive integers, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ListAssignment(pub Vec<Vec<u32>>);

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<u32>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment(lists)
    }

    /// Every vertex gets `{1..=k}`.
    pub fn uniform(n: usize, k: u32) -> Self {
        ListAssignment(vec![(1..=k).collect(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> &[u32] {
        &self.0[v]
    }

    pub fn contains(&self, v: usize, colour: u32) -> bool {
        self.0[v].binary_search(&colour).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", content = "index", rename_all = "snake_case")]
pub enum Role {
    /// Variable vertex `x_i`.
    XType(usize),
    /// Clause vertex `C_j` (odd colours).
    CTypeOdd(usize),
    /// Clause vertex `C_j'` (even colours).
    CTypeEven(usize),
    /// Clique vertex `k_l`.
    KType(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    G1,
    G2,
    G1p,
    G2p,
}

impl Variant {
    pub fn is_extended(self) -> bool {
        matches!(self, Variant::G1p | Variant::G2p)
    }

    /// True for the variants whose x side is a clique.
    pub fn is_split(self) -> bool {
        matches!(self, Variant::G2 | Variant::G2p)
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g1" => Ok(Variant::G1),
            "g2" => Ok(Variant::G2),
            "g1p" => Ok(Variant::G1p),
            "g2p" => Ok(Variant::G2p),
            other => Err(Error::validation(format!(
                "unknown gadget variant '{other}' (expected g1, g2, g1p or g2p)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub variant: Variant,
    pub instance: NaeInstance,
    pub graph: Graph,
    pub roles: Vec<Role>,
    /// Lists of the original vertices; k-type vertices have empty lists.
    pub lists: ListAssignment,
    pub colour_budget: u32,
}

/// JSON sidecar written next to a gadget's graph6 line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetSidecar {
    pub variant: Variant,
    pub roles: Vec<Role>,
    pub lists: ListAssignment,
    pub colour_budget: u32,
}

impl GadgetGraph {
    pub fn sidecar(&self) -> GadgetSidecar {
        GadgetSidecar {
            variant: self.variant,
            roles: self.roles.clone(),
            lists: self.lists.clone(),
            colour_budget: self.colour_budget,
        }
    }

    fn mask_where(&self, pred: impl Fn(&Role) -> bool) -> u64 {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| pred(r))
            .fold(0u64, |acc, (v, _)| acc | 1 << v)
    }

    pub fn x_mask(&self) -> u64 {
        self.mask_where(|r| matches!(r, Role::XType(_)))
    }

    pub fn c_mask(&self) -> u64 {
        self.mask_where(|r| matches!(r, Role::CTypeOdd(_) | Role::CTypeEven(_)))
    }

    pub fn k_mask(&self) -> u64 {
        self.mask_where(|r| matches!(r, Role::KType(_)))
    }

    /// Index of `k_l` (1-based `l`), if present.
    pub fn k_vertex(&self, l: usize) -> Option<usize> {
        self.roles.iter().position(|r| *r == Role::KType(l))
    }

    pub fn original_count(&self) -> usize {
        self.instance.num_vars() + 2 * self.instance.num_clauses()
    }
}

fn base_lists(inst: &NaeInstance) -> (Vec<Role>, ListAssignment) {
    let n = inst.num_vars();
    let mut roles: Vec<Role> = (1..=n).map(Role::XType).collect();
    let mut lists: Vec<Vec<u32>> = (1..=n as u32).map(|i| vec![2 * i - 1, 2 * i]).collect();
    let m = inst.num_clauses();
    roles.extend((1..=m).map(Role::CTypeOdd));
    roles.extend((1..=m).map(Role::CTypeEven));
    for clause in inst.clauses() {
        lists.push(clause.iter().map(|&v| 2 * v as u32 - 1).collect());
    }
    for clause in inst.clauses() {
        lists.push(clause.iter().map(|&v| 2 * v as u32).collect());
    }
    (roles, ListAssignment::new(lists))
}

fn build(inst: &NaeInstance, split: bool) -> Result<GadgetGraph> {
    let n = inst.num_vars();
    let total = n + 2 * inst.num_clauses();
    if total > MAX_VERTICES {
        return Err(Error::limit(format!(
            "gadget would have {total} vertices, cap is {MAX_VERTICES}"
        )));
    }
    let mut edges = Vec::new();
    for x in 0..n {
        edges.extend((n..total).map(|c| (x, c)));
        if split {
            edges.extend((x + 1..n).map(|y| (x, y)));
        }
    }
    let (roles, lists) = base_lists(inst);
    Ok(GadgetGraph {
        variant: if split { Variant::G2 } else { Variant::G1 },
        instance: inst.clone(),
        graph: Graph::from_edges(total, &edges)?,
        roles,
        lists,
        colour_budget: 2 * n as u32,
    })
}

/// Complete bipartite list-colouring instance.
pub fn build_g1(inst: &NaeInstance) -> Result<GadgetGraph> {
    build(inst, false)
}

/// Complete split list-colouring instance: [`build_g1`] plus a clique on x.
pub fn build_g2(inst: &NaeInstance) -> Result<GadgetGraph> {
    build(inst, true)
}

/// Add the clique `k1..k2n`, joining `k_l` to each original vertex whose
/// list misses `l`.
pub fn extend_with_clique(g: &GadgetGraph) -> Result<GadgetGraph> {
    let next = match g.variant {
        Variant::G1 => Variant::G1p,
        Variant::G2 => Variant::G2p,
        other => {
            return Err(Error::validation(format!(
                "{other:?} already carries the colour clique"
            )))
        }
    };
    let base = g.graph.n();
    let budget = g.colour_budget as usize;
    let total = base + budget;
    if total > MAX_VERTICES {
        return Err(Error::limit(format!(
            "extended gadget would have {total} vertices, cap is {MAX_VERTICES}"
        )));
    }
    let mut edges = g.graph.edges();
    for l in 1..=budget {
        let k = base + l - 1;
        edges.extend((base + l..total).map(|other| (k, other)));
        edges.extend((0..base).filter(|&u| !g.lists.contains(u, l as u32)).map(|u| (u, k)));
    }
    let mut roles = g.roles.clone();
    roles.extend((1..=budget).map(Role::KType));
    let mut lists = g.lists.0.clone();
    lists.extend(std::iter::repeat(Vec::new()).take(budget));
    Ok(GadgetGraph {
        variant: next,
        instance: g.instance.clone(),
        graph: Graph::from_edges(total, &edges)?,
        roles,
        lists: ListAssignment(lists),
        colour_budget: g.colour_budget,
    })
}

/// Build any of the four variants.
pub fn build_variant(inst: &NaeInstance, variant: Variant) -> Result<GadgetGraph> {
    match variant {
        Variant::G1 => build_g1(inst),
        Variant::G2 => build_g2(inst),
        Variant::G1p => extend_with_clique(&build_g1(inst)?),
        Variant::G2p => extend_with_clique(&build_g2(inst)?),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub variant: Variant,
    pub checks: Vec<StructureCheck>,
    /// Clause pairs over the same variables; harmless, reported for audit.
    pub duplicate_clauses: Vec<(usize, usize)>,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }
}

/// Verify the structural facts the construction is supposed to have, both
/// on the gadget and (for G1', G2') on its complement.
pub fn gadget_structure_report(g: &GadgetGraph) -> StructureReport {
    let inst = &g.instance;
    let n = inst.num_vars();
    let m = inst.num_clauses();
    let graph = &g.graph;
    let (x, c, k) = (g.x_mask(), g.c_mask(), g.k_mask());
    let mut checks = Vec::new();
    let mut check = |name, passed| checks.push(StructureCheck { name, passed });

    let (expected_roles, expected_lists) = base_lists(inst);
    check(
        "roles_in_order",
        g.roles[..g.original_count()] == expected_roles[..]
            && g.roles[g.original_count()..]
                .iter()
                .enumerate()
                .all(|(i, r)| *r == Role::KType(i + 1)),
    );
    check(
        "x_lists_disjoint_pairs",
        (0..n).all(|i| g.lists.get(i) == [2 * i as u32 + 1, 2 * i as u32 + 2]),
    );
    check(
        "clause_lists_odd_even",
        (n..g.original_count()).all(|v| g.lists.get(v) == expected_lists.get(v))
            && (n..n + m).all(|v| g.lists.get(v).iter().all(|c| c % 2 == 1))
            && (n + m..n + 2 * m).all(|v| g.lists.get(v).iter().all(|c| c % 2 == 0)),
    );
    check(
        "colours_within_budget",
        g.colour_budget == 2 * n as u32
            && g.lists.0.iter().flatten().all(|&c| 1 <= c && c <= g.colour_budget),
    );
    check(
        "x_c_complete_join",
        bits(x).all(|v| graph.neighbours(v) & c == c),
    );
    check("c_type_independent", graph.is_independent(c));
    if g.variant.is_split() {
        check("x_type_clique", graph.is_clique(x));
    } else {
        check("x_type_independent", graph.is_independent(x));
    }
    let original: Vec<usize> = (0..g.original_count()).collect();
    let core = graph.induced_subgraph(&original);
    let expected_core = if g.variant.is_split() {
        Graph::complete(n).and_then(|kx| kx.join(&Graph::empty(2 * m)?))
    } else {
        Graph::complete_bipartite(n, 2 * m).or_else(|_| Graph::empty(n))
    };
    let core_name = if g.variant.is_split() {
        "complete_split"
    } else {
        "complete_bipartite"
    };
    check(
        core_name,
        expected_core.is_ok_and(|e| if m == 0 { core.edge_count() == e.edge_count() && core.n() == n } else { is_isomorphic(&core, &e) }),
    );

    if g.variant.is_extended() {
        check("k_type_clique", graph.is_clique(k) && k.count_ones() as usize == 2 * n);
        check(
            "k_adjacency_rule",
            (1..=2 * n).all(|l| {
                g.k_vertex(l).is_some_and(|kv| {
                    original
                        .iter()
                        .all(|&u| graph.is_adjacent(kv, u) != g.lists.contains(u, l as u32))
                })
            }),
        );

        let co = graph.complement();
        if g.variant.is_split() {
            check("co_x_type_independent", co.is_independent(x));
        } else {
            check("co_x_type_clique", co.is_clique(x));
        }
        check("co_c_type_clique", co.is_clique(c));
        check("co_k_type_independent", co.is_independent(k));
        check("co_x_c_nonadjacent", bits(x).all(|v| co.neighbours(v) & c == 0));
        let xc: Vec<usize> = bits(x | c).collect();
        check(
            "co_x_c_p3_free",
            crate::graph::contains_induced(&co.induced_subgraph(&xc), &Graph::path(3).expect("P3"))
                .is_none(),
        );
        if g.variant.is_split() {
            check("co_x_degree_two", bits(x).all(|v| co.degree(v) == 2));
            let xk: Vec<usize> = bits(x | k).collect();
            check(
                "co_x_k_disjoint_p3s",
                co.induced_subgraph(&xk)
                    .components()
                    .iter()
                    .all(|comp| comp.n() == 3 && comp.is_path()),
            );
        }
    }
    StructureReport {
        variant: g.variant,
        checks,
        duplicate_clauses: inst.duplicate_clauses(),
    }
}
