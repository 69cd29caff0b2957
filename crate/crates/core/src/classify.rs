//! Rule engine for the complexity of Colouring on `(H1, H2)`-free graphs.
//!
//! Each rule is a known complexity fact plus a predicate on the pair.
//! Polynomial rules apply when each forbidden graph is an induced subgraph
//! of a graph in a polynomial case (downward closure); hardness rules
//! apply when each of `H1`, `H2` contains some member of a hard forbidden
//! set (upward closure). Open entries match exact shapes. A pair matched
//! by rules of two different statuses is reported as an inconsistency.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::graph_of;
use crate::graph::{contains_induced, enumerate_up_to, from_graph6, is_isomorphic, to_graph6, Graph, MAX_VERTICES};
use crate::recognize::{all_open_matches, in_class_t_with, ClassTReading};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    PolynomialTime,
    NpComplete,
    Open,
    Unknown,
}

impl Status {
    pub const ALL: [Status; 4] = [Status::PolynomialTime, Status::NpComplete, Status::Open, Status::Unknown];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::PolynomialTime => "polynomial_time",
            Status::NpComplete => "np_complete",
            Status::Open => "open",
            Status::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Status::ALL
            .into_iter()
            .find(|st| st.as_str() == s)
            .ok_or_else(|| Error::validation(format!("unknown status '{s}'")))
    }
}

/// One entry of the knowledge base.
#[derive(Clone, Serialize)]
pub struct Rule {
    pub id: &'static str,
    pub status: Status,
    pub citation: &'static str,
    /// Human-readable form of the predicate.
    pub condition: &'static str,
    #[serde(skip)]
    eval: fn(&Graph, &Graph) -> Result<Option<String>>,
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rule")
            .field("id", &self.id)
            .field("status", &self.status)
            .finish()
    }
}

impl Rule {
    /// The matched condition when the rule applies to `(h1, h2)` in either order.
    pub fn applies(&self, h1: &Graph, h2: &Graph) -> Result<Option<String>> {
        if let Some(why) = (self.eval)(h1, h2)? {
            return Ok(Some(why));
        }
        Ok((self.eval)(h2, h1)?.map(|why| format!("{why} (H1 and H2 swapped)")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub rule: String,
    pub citation: String,
    pub condition: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub h1_g6: String,
    pub h2_g6: String,
    pub status: Status,
    pub trace: Vec<TraceEntry>,
}

fn g(text: &str) -> Graph {
    graph_of(text).expect("built-in pattern parses")
}

fn has(host: &Graph, pattern: &str) -> bool {
    contains_induced(host, &g(pattern)).is_some()
}

fn within(small: &Graph, pattern: &str) -> bool {
    contains_induced(&g(pattern), small).is_some()
}

/// Some member of `set` in `a` and some member in `b`.
fn closure(a: &Graph, b: &Graph, set: &[&str]) -> Option<String> {
    let fa = set.iter().find(|p| has(a, p))?;
    let fb = set.iter().find(|p| has(b, p))?;
    Some(format!("H1 contains {fa}, H2 contains {fb}"))
}

fn ok(x: Option<String>) -> Result<Option<String>> {
    Ok(x)
}

const POLY_CO_H: [&str; 7] = ["2P1+P3", "P1+P4", "P2+P3", "P5", "T0,0,1+P1", "T0,1,1", "T0,0,2"];
const N12_SET: [&str; 3] = ["2P2", "co(3P2)", "co(T0,2,2)"];
const N13_SET: [&str; 5] = ["2P2", "co(2C3)", "co(C3+P4)", "co(2P4)", "co(T0,0,4)"];
const N14_CO_H: [&str; 3] = ["C3+P4", "3P2", "2P4"];

fn p1(a: &Graph, _: &Graph) -> Result<Option<String>> {
    ok(["P4", "P1+P3"]
        .into_iter()
        .find(|p| within(a, p))
        .map(|p| format!("H1 is an induced subgraph of {p}")))
}

fn p2(a: &Graph, b: &Graph) -> Result<Option<String>> {
    if !within(a, "P5") {
        return Ok(None);
    }
    let co_b = b.complement();
    if co_b.edge_count() <= 1 {
        return Ok(Some("H1 in P5, co(H2) is an induced subgraph of sP1+P2".into()));
    }
    ok(POLY_CO_H
        .into_iter()
        .find(|p| contains_induced(&g(p), &co_b).is_some())
        .map(|p| format!("H1 in P5, co(H2) is an induced subgraph of {p}")))
}

fn p3(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok((within(a, "K1,3") && within(b, "P5"))
        .then(|| "H1 in K1,3, H2 in P5".to_string()))
}

fn n1(a: &Graph, b: &Graph) -> Result<Option<String>> {
    let out = |h: &Graph| !in_class_t_with(&h.complement(), ClassTReading::LineGraph);
    ok((out(a) && out(b)).then(|| "co(H1) and co(H2) are not in class T".to_string()))
}

fn n2(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok((!a.is_forest() && !b.is_forest()).then(|| "H1 and H2 both contain a cycle".to_string()))
}

fn n3(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok((has(a, "K1,3") && has(b, "K1,3")).then(|| "H1 and H2 both contain K1,3".to_string()))
}

fn n4(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(closure(a, b, &["P22", "C3"]))
}

fn n5(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(closure(a, b, &["P9", "C4"]))
}

/// `{F, C_r}` for one `r >= from`: each side contains `F` or that cycle.
fn with_long_cycle(a: &Graph, b: &Graph, f: &str, from: usize) -> Option<String> {
    let (fa, fb) = (has(a, f), has(b, f));
    if fa && fb {
        return Some(format!("H1 and H2 both contain {f}"));
    }
    let top = a.n().max(b.n());
    (from..=top).find_map(|r| {
        let cr = Graph::cycle(r).ok()?;
        let ca = contains_induced(a, &cr).is_some();
        let cb = contains_induced(b, &cr).is_some();
        ((fa || ca) && (fb || cb)).then(|| {
            let name = |f_in: bool| if f_in { f.to_string() } else { format!("C{r}") };
            format!("H1 contains {}, H2 contains {}", name(fa), name(fb))
        })
    })
}

fn n6(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(with_long_cycle(a, b, "2P2", 5))
}

fn n7(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(closure(a, b, &["4P1", "2P1+P2"]))
}

fn n8(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(closure(a, b, &["P6", "K6"]))
}

fn n9(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(closure(a, b, &["K1,5", "C3"]))
}

fn n10(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(with_long_cycle(a, b, "K1,3", 4))
}

fn n11(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(closure(a, b, &["K1,3", "K4"]))
}

fn n12(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(closure(a, b, &N12_SET))
}

fn n13(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(closure(a, b, &N13_SET))
}

fn n14(a: &Graph, b: &Graph) -> Result<Option<String>> {
    if !has(a, "2P2") {
        return Ok(None);
    }
    let co_b = b.complement();
    if let Some(p) = N14_CO_H.into_iter().find(|p| has(&co_b, p)) {
        return Ok(Some(format!("H1 contains 2P2, co(H2) contains {p}")));
    }
    let n = b.n();
    if 2 * n + 6 > MAX_VERTICES {
        return Err(Error::limit(format!("H2 on {n} vertices is too large for the T1,1,3 test")));
    }
    let host = g("T1,1,3").disjoint_union(&Graph::path(2 * n - 1)?)?;
    ok(contains_induced(&host, &co_b).is_none().then(|| {
        format!("H1 contains 2P2, co(H2) is not an induced subgraph of T1,1,3+P{}", 2 * n - 1)
    }))
}

fn exact_pair(a: &Graph, b: &Graph, pairs: &[(&str, &str)]) -> Option<String> {
    pairs
        .iter()
        .find(|(x, y)| is_isomorphic(a, &g(x)) && is_isomorphic(b, &g(y)))
        .map(|(x, y)| format!("(H1, H2) is ({x}, {y})"))
}

fn o1(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(exact_pair(a, b, &[("K1,3", "4P1"), ("K1,3", "2P1+P2"), ("C4", "4P1")]))
}

fn o2(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok(exact_pair(
        a,
        b,
        &[
            ("P5", "co(C3+2P1)"),
            ("P5", "co(C3+P2)"),
            ("P5", "co(P1+2P2)"),
            ("K1,3", "co(C4+P1)"),
        ],
    ))
}

fn o3(a: &Graph, b: &Graph) -> Result<Option<String>> {
    let Some(name) = ["2P2", "P5"].into_iter().find(|p| is_isomorphic(a, &g(p))) else {
        return Ok(None);
    };
    ok(all_open_matches(&b.complement())
        .first()
        .map(|m| format!("H1 is {name}, co(H2) lies in open family {}", m.family)))
}

fn o4(a: &Graph, b: &Graph) -> Result<Option<String>> {
    ok((is_isomorphic(a, &g("K1,3")) && b.n() >= 6 && b.is_path())
        .then(|| format!("(H1, H2) is (K1,3, P{})", b.n())))
}

/// The knowledge base in evaluation order: open entries, polynomial rules,
/// hardness rules.
pub fn kb_rules() -> Vec<Rule> {
    use Status::*;
    let rule = |id, status, citation, condition, eval| Rule { id, status, citation, condition, eval };
    vec![
        rule("O1", Open, "[LM15] open pairs on four vertices", "(H1, H2) in {(K1,3, 4P1), (K1,3, 2P1+P2), (C4, 4P1)}", o1),
        rule("O2", Open, "[KMP], [ML17] open pairs on five vertices", "(H1, H2) in {(P5, co(C3+2P1)), (P5, co(C3+P2)), (P5, co(P1+2P2)), (K1,3, co(C4+P1))}", o2),
        rule("O3", Open, "open (2P2, H) and (P5, H) families", "H1 is 2P2 or P5 and co(H2) lies in an open family", o3),
        rule("O4", Open, "[Ma13] (K1,3, Pt) open for t >= 6", "(H1, H2) is (K1,3, Pt) with t >= 6", o4),
        rule("P1", PolynomialTime, "[KKTW01] one forbidden graph", "H1 is an induced subgraph of P4 or P1+P3", p1),
        rule("P2", PolynomialTime, "[Ma], [BLM04], [ML17], [HL], [KMP] (P5, H)-free", "H1 in P5 and co(H2) in 2P1+P3, P1+P4, P2+P3, P5, T0,0,1+P1, T0,1,1, T0,0,2 or sP1+P2", p2),
        rule("P3", PolynomialTime, "[Ma13] (K1,3, P5)-free", "H1 in K1,3 and H2 in P5", p3),
        rule("N1", NpComplete, "[Sc05] complements outside class T", "co(H1) and co(H2) not in class T", n1),
        rule("N2", NpComplete, "[EHK98] 3-Colouring, two cycles", "H1 and H2 both contain a cycle", n2),
        rule("N3", NpComplete, "[Ho81] 3-Colouring, two claws", "H1 and H2 both contain K1,3", n3),
        rule("N4", NpComplete, "[HJP14] 4-Colouring on (P22, C3)-free graphs", "closure of {P22, C3}", n4),
        rule("N5", NpComplete, "[GHP] (P9, C4)-free graphs", "closure of {P9, C4}", n5),
        rule("N6", NpComplete, "[KKTW01] (2P2, Cr)-free graphs, r >= 5", "closure of {2P2, Cr} for some r >= 5", n6),
        rule("N7", NpComplete, "[KKTW01] (4P1, 2P1+P2)-free graphs", "closure of {4P1, 2P1+P2}", n7),
        rule("N8", NpComplete, "[Hu16], [GJPS] 5-Colouring on (P6, K6)-free graphs", "closure of {P6, K6}", n8),
        rule("N9", NpComplete, "[MF96] 3-Colouring on (K1,5, C3)-free graphs", "closure of {K1,5, C3}", n9),
        rule("N10", NpComplete, "[KKTW01] 3-Colouring on (K1,3, Cr)-free graphs, r >= 4", "closure of {K1,3, Cr} for some r >= 4", n10),
        rule("N11", NpComplete, "[KKTW01] (K1,3, K4)-free graphs", "closure of {K1,3, K4}", n11),
        rule("N12", NpComplete, "NAE-3SAT gadget G1'", "closure of {2P2, co(3P2), co(T0,2,2)}", n12),
        rule("N13", NpComplete, "NAE-3SAT gadget G2'", "closure of {2P2, co(2C3), co(C3+P4), co(2P4), co(T0,0,4)}", n13),
        rule("N14", NpComplete, "NAE-3SAT gadgets with [Sc05], (2P2, H)-free", "H1 contains 2P2 and co(H2) contains C3+P4, 3P2 or 2P4, or is not in T1,1,3+P(2n-1)", n14),
    ]
}

fn fire(rules: &[Rule], status: Status, h1: &Graph, h2: &Graph) -> Result<Vec<TraceEntry>> {
    let mut trace = Vec::new();
    for r in rules.iter().filter(|r| r.status == status) {
        if let Some(condition) = r.applies(h1, h2)? {
            trace.push(TraceEntry {
                rule: r.id.to_string(),
                citation: r.citation.to_string(),
                condition,
            });
        }
    }
    Ok(trace)
}

fn describe(trace: &[TraceEntry]) -> String {
    trace
        .iter()
        .map(|t| format!("{} ({})", t.rule, t.condition))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn classify(h1: &Graph, h2: &Graph) -> Result<Verdict> {
    classify_with(&kb_rules(), h1, h2)
}

pub fn classify_with(rules: &[Rule], h1: &Graph, h2: &Graph) -> Result<Verdict> {
    let open = fire(rules, Status::Open, h1, h2)?;
    let poly = fire(rules, Status::PolynomialTime, h1, h2)?;
    let hard = fire(rules, Status::NpComplete, h1, h2)?;
    let fired: Vec<(Status, &Vec<TraceEntry>)> = [
        (Status::Open, &open),
        (Status::PolynomialTime, &poly),
        (Status::NpComplete, &hard),
    ]
    .into_iter()
    .filter(|(_, t)| !t.is_empty())
    .collect();
    if fired.len() > 1 {
        let parts: Vec<String> = fired
            .iter()
            .map(|(s, t)| format!("{s}: {}", describe(t)))
            .collect();
        return Err(Error::Inconsistency(format!(
            "conflicting rules for ({}, {}): {}",
            to_graph6(h1),
            to_graph6(h2),
            parts.join(" | ")
        )));
    }
    let (status, trace) = fired
        .first()
        .map(|(s, t)| (*s, (*t).clone()))
        .unwrap_or((Status::Unknown, Vec::new()));
    Ok(Verdict {
        h1_g6: to_graph6(h1),
        h2_g6: to_graph6(h2),
        status,
        trace,
    })
}

/// Which statement of the `(2P2, H)` / `(P5, H)` summary `H` falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Hard,
    Polynomial,
    Open,
}

impl Category {
    fn as_str(self) -> &'static str {
        match self {
            Category::Hard => "hard",
            Category::Polynomial => "polynomial",
            Category::Open => "open",
        }
    }
}

pub fn categories(h: &Graph) -> Result<Vec<Category>> {
    let mut out = Vec::new();
    if n14(&g("2P2"), h)?.is_some() {
        out.push(Category::Hard);
    }
    if p2(&g("P5"), h)?.is_some() {
        out.push(Category::Polynomial);
    }
    if !all_open_matches(&h.complement()).is_empty() {
        out.push(Category::Open);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub index: usize,
    pub n: usize,
    pub edges: usize,
    pub graph6: String,
    pub status: Status,
    pub rules: Vec<String>,
    pub categories: Vec<Category>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survey {
    pub forbidden_g6: String,
    pub max_n: usize,
    pub counts: BTreeMap<Status, usize>,
    /// Indices of rows whose graph lies in zero or several categories.
    pub anomalies: Vec<usize>,
    pub rows: Vec<SurveyRow>,
}

/// Classify `(forbidden, H)` for every graph class `H` on `1..=max_n`
/// vertices.
pub fn survey(forbidden: &Graph, max_n: usize) -> Result<Survey> {
    let rules = kb_rules();
    let mut rows = Vec::new();
    for h in enumerate_up_to(max_n)? {
        let v = classify_with(&rules, forbidden, &h)?;
        let cats = categories(&h)?;
        rows.push(SurveyRow {
            index: rows.len(),
            n: h.n(),
            edges: h.edge_count(),
            graph6: v.h2_g6,
            status: v.status,
            rules: v.trace.into_iter().map(|t| t.rule).collect(),
            categories: cats,
        });
    }
    let mut counts: BTreeMap<Status, usize> = Status::ALL.iter().map(|&s| (s, 0)).collect();
    for r in &rows {
        *counts.entry(r.status).or_default() += 1;
    }
    let anomalies = rows
        .iter()
        .filter(|r| r.categories.len() != 1)
        .map(|r| r.index)
        .collect();
    Ok(Survey {
        forbidden_g6: to_graph6(forbidden),
        max_n,
        counts,
        anomalies,
        rows,
    })
}

const CSV_HEADER: [&str; 7] = ["index", "n", "edges", "graph6", "status", "rules", "categories"];

/// Flat CSV form of a [`SurveyRow`]; list fields are `;`-separated.
#[derive(Serialize, Deserialize)]
struct CsvRow {
    index: usize,
    n: usize,
    edges: usize,
    graph6: String,
    status: Status,
    rules: String,
    categories: String,
}

impl Survey {
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for r in &self.rows {
            let cats: Vec<&str> = r.categories.iter().map(|c| c.as_str()).collect();
            w.serialize(CsvRow {
                index: r.index,
                n: r.n,
                edges: r.edges,
                graph6: r.graph6.clone(),
                status: r.status,
                rules: r.rules.join(";"),
                categories: cats.join(";"),
            })
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII output")
    }
}

/// Rows of a table written by [`Survey::to_csv`].
pub fn parse_survey_csv(text: &str) -> Result<Vec<SurveyRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| Error::syntax(0, e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::syntax(0, "missing survey CSV header"));
    }
    let split = |s: &str| -> Vec<String> {
        s.split(';').filter(|x| !x.is_empty()).map(str::to_string).collect()
    };
    let mut rows = Vec::new();
    for record in reader.deserialize::<CsvRow>() {
        let row = record.map_err(|e| {
            let offset = e.position().map_or(0, |p| p.byte() as usize);
            Error::syntax(offset, e.to_string())
        })?;
        from_graph6(&row.graph6).map_err(|e| Error::validation(format!("bad graph6 '{}': {e}", row.graph6)))?;
        let categories = split(&row.categories)
            .iter()
            .map(|c| match c.as_str() {
                "hard" => Ok(Category::Hard),
                "polynomial" => Ok(Category::Polynomial),
                "open" => Ok(Category::Open),
                other => Err(Error::validation(format!("unknown category '{other}'"))),
            })
            .collect::<Result<_>>()?;
        rows.push(SurveyRow {
            index: row.index,
            n: row.n,
            edges: row.edges,
            graph6: row.graph6,
            status: row.status,
            rules: split(&row.rules),
            categories,
        });
    }
    Ok(rows)
}
