//! Executable checks of the four gadget lemmas.
//!
//! Lemmas 1 and 2 are checked as biconditionals over solver outputs
//! (NAE-satisfiable iff the list / 2n-colouring exists on both variants),
//! plus the explicit colouring built from a satisfying assignment.
//! Lemmas 3 and 4 run the induced-subgraph search on the extended gadget
//! and, independently, on its complement against the complemented
//! patterns.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{graph_of, parse_family};
use crate::gadget::{build_variant, GadgetGraph, NaeInstance, Role, Variant};
use crate::graph::{contains_induced, Witness};
use crate::solve::{
    solve_k_colouring, solve_list_colouring, solve_nae, Assignment, Colouring, MAX_NAE_VARS,
};

/// Patterns excluded from G1' (direct form, complement form).
pub const G1P_PATTERNS: [(&str, &str); 3] = [
    ("2P2", "C4"),
    ("co(3P2)", "3P2"),
    ("co(T0,2,2)", "T0,2,2"),
];

/// Patterns excluded from G2' (direct form, complement form).
pub const G2P_PATTERNS: [(&str, &str); 5] = [
    ("2P2", "C4"),
    ("co(2C3)", "2C3"),
    ("co(C3+P4)", "C3+P4"),
    ("co(2P4)", "2P4"),
    ("co(T0,0,4)", "T0,0,4"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lemma {
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
}

impl Lemma {
    pub const ALL: [Lemma; 4] = [Lemma::Lemma1, Lemma::Lemma2, Lemma::Lemma3, Lemma::Lemma4];
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = *self as usize + 1;
        write!(f, "lemma{idx}")
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.to_string() == s)
            .ok_or_else(|| Error::validation(format!("unknown lemma '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Holds,
    Violated,
}

/// Evidence that localizes a violated claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CounterWitness {
    /// An assignment the colouring side failed to match, or vice versa.
    Assignment { assignment: Assignment },
    Colouring { variant: Variant, colouring: Colouring },
    /// An induced copy of a pattern that should be absent.
    Induced { pattern: String, complement_side: bool, witness: Witness },
    /// Direct and complement searches disagreed on this pattern.
    SearchDisagreement { pattern: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<CounterWitness>,
}

impl Claim {
    fn holds(name: impl Into<String>) -> Self {
        Claim { name: name.into(), status: ClaimStatus::Holds, witness: None }
    }

    fn check(name: impl Into<String>, violation: Option<CounterWitness>) -> Self {
        match violation {
            None => Claim::holds(name),
            Some(w) => Claim { name: name.into(), status: ClaimStatus::Violated, witness: Some(w) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub clauses: Vec<[usize; 3]>,
}

impl InstanceDescriptor {
    pub fn new(label: impl Into<String>, inst: &NaeInstance) -> Self {
        InstanceDescriptor {
            label: label.into(),
            n: inst.num_vars(),
            m: inst.num_clauses(),
            clauses: inst.clauses().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lemma: Lemma,
    pub instance: InstanceDescriptor,
    pub claims: Vec<Claim>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.claims.iter().all(|c| c.status == ClaimStatus::Holds)
    }

    pub fn violated(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Violated).collect()
    }
}

fn report(lemma: Lemma, label: &str, inst: &NaeInstance, start: Instant, claims: Vec<Claim>) -> VerificationReport {
    VerificationReport {
        lemma,
        instance: InstanceDescriptor::new(label, inst),
        claims,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// The colouring a NAE assignment induces on a gadget: `x_i` takes `2i-1`
/// when true and `2i` when false, `C_j` the odd colour of a false variable,
/// `C_j'` the even colour of a true one, `k_l` takes `l`.
pub fn colouring_from_assignment(g: &GadgetGraph, a: &Assignment) -> Option<Colouring> {
    let clauses = g.instance.clauses();
    let pick = |j: usize, want: bool| clauses[j - 1].iter().copied().find(|&v| a.0[v - 1] == want);
    g.roles
        .iter()
        .map(|role| {
            Some(match *role {
                Role::XType(i) => 2 * i as u32 - u32::from(a.0[i - 1]),
                Role::CTypeOdd(j) => 2 * pick(j, false)? as u32 - 1,
                Role::CTypeEven(j) => 2 * pick(j, true)? as u32,
                Role::KType(l) => l as u32,
            })
        })
        .collect::<Option<Vec<u32>>>()
        .map(Colouring)
}

fn solve_gadget(g: &GadgetGraph) -> Result<Option<Colouring>> {
    let found = if g.variant.is_extended() {
        solve_k_colouring(&g.graph, g.colour_budget as usize)?
    } else {
        solve_list_colouring(&g.graph, &g.lists)?
    };
    if let Some(c) = &found {
        let valid = c.is_proper(&g.graph)
            && if g.variant.is_extended() {
                c.max_colour() <= g.colour_budget
            } else {
                c.respects(&g.lists)
            };
        if !valid {
            return Err(Error::Inconsistency(format!(
                "solver returned an invalid colouring for {:?}",
                g.variant
            )));
        }
    }
    Ok(found)
}

fn colouring_claims(lemma: Lemma, label: &str, inst: &NaeInstance, variants: [Variant; 2]) -> Result<VerificationReport> {
    let start = Instant::now();
    let assignment = solve_nae(inst)?;
    if let Some(a) = &assignment {
        if !a.nae_satisfies(inst) {
            return Err(Error::Inconsistency("NAE solver returned a non-satisfying assignment".into()));
        }
    }
    let mut claims = Vec::new();
    for variant in variants {
        let g = build_variant(inst, variant)?;
        let colouring = solve_gadget(&g)?;
        let name = format!("nae_iff_{}_colourable", variant_name(variant));
        let violation = match (&assignment, colouring) {
            (Some(a), None) => Some(CounterWitness::Assignment { assignment: a.clone() }),
            (None, Some(c)) => Some(CounterWitness::Colouring { variant, colouring: c }),
            _ => None,
        };
        claims.push(Claim::check(name, violation));
        if let Some(a) = &assignment {
            let name = format!("assignment_colours_{}", variant_name(variant));
            let violation = match colouring_from_assignment(&g, a) {
                Some(c) if c.is_proper(&g.graph) && (variant.is_extended() || c.respects(&g.lists)) => None,
                Some(c) => Some(CounterWitness::Colouring { variant, colouring: c }),
                None => Some(CounterWitness::Assignment { assignment: a.clone() }),
            };
            claims.push(Claim::check(name, violation));
        }
    }
    Ok(report(lemma, label, inst, start, claims))
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::G1 => "g1",
        Variant::G2 => "g2",
        Variant::G1p => "g1p",
        Variant::G2p => "g2p",
    }
}

fn freeness_claims(
    lemma: Lemma,
    label: &str,
    inst: &NaeInstance,
    variant: Variant,
    patterns: &[(&str, &str)],
) -> Result<VerificationReport> {
    let start = Instant::now();
    let g = build_variant(inst, variant)?;
    let co = g.graph.complement();
    let mut claims = Vec::new();
    for &(direct, co_form) in patterns {
        let found = contains_induced(&g.graph, &graph_of(direct)?);
        let co_found = contains_induced(&co, &graph_of(co_form)?);
        let agree = found.is_some() == co_found.is_some();
        claims.push(Claim::check(
            format!("{}_free_of_{}", variant_name(variant), parse_family(direct)?),
            found.map(|witness| CounterWitness::Induced {
                pattern: direct.to_string(),
                complement_side: false,
                witness,
            }),
        ));
        claims.push(Claim::check(
            format!("complement_free_of_{}", parse_family(co_form)?),
            co_found.map(|witness| CounterWitness::Induced {
                pattern: co_form.to_string(),
                complement_side: true,
                witness,
            }),
        ));
        claims.push(Claim::check(
            format!("direct_matches_complement_{}", parse_family(co_form)?),
            (!agree).then(|| CounterWitness::SearchDisagreement { pattern: direct.to_string() }),
        ));
    }
    Ok(report(lemma, label, inst, start, claims))
}

/// NAE-satisfiable iff G1 and G2 admit list colourings.
pub fn verify_lemma1(inst: &NaeInstance) -> Result<VerificationReport> {
    verify_lemma1_labelled(inst, "instance")
}

/// NAE-satisfiable iff G1' and G2' are 2n-colourable.
pub fn verify_lemma2(inst: &NaeInstance) -> Result<VerificationReport> {
    verify_lemma2_labelled(inst, "instance")
}

/// G1' is free of 2P2, co(3P2) and co(T0,2,2).
pub fn verify_lemma3(inst: &NaeInstance) -> Result<VerificationReport> {
    verify_lemma3_labelled(inst, "instance")
}

/// G2' is free of 2P2, co(2C3), co(C3+P4), co(2P4) and co(T0,0,4).
pub fn verify_lemma4(inst: &NaeInstance) -> Result<VerificationReport> {
    verify_lemma4_labelled(inst, "instance")
}

pub fn verify_lemma1_labelled(inst: &NaeInstance, label: &str) -> Result<VerificationReport> {
    colouring_claims(Lemma::Lemma1, label, inst, [Variant::G1, Variant::G2])
}

pub fn verify_lemma2_labelled(inst: &NaeInstance, label: &str) -> Result<VerificationReport> {
    colouring_claims(Lemma::Lemma2, label, inst, [Variant::G1p, Variant::G2p])
}

pub fn verify_lemma3_labelled(inst: &NaeInstance, label: &str) -> Result<VerificationReport> {
    freeness_claims(Lemma::Lemma3, label, inst, Variant::G1p, &G1P_PATTERNS)
}

pub fn verify_lemma4_labelled(inst: &NaeInstance, label: &str) -> Result<VerificationReport> {
    freeness_claims(Lemma::Lemma4, label, inst, Variant::G2p, &G2P_PATTERNS)
}

pub fn verify(lemma: Lemma, inst: &NaeInstance, label: &str) -> Result<VerificationReport> {
    match lemma {
        Lemma::Lemma1 => verify_lemma1_labelled(inst, label),
        Lemma::Lemma2 => verify_lemma2_labelled(inst, label),
        Lemma::Lemma3 => verify_lemma3_labelled(inst, label),
        Lemma::Lemma4 => verify_lemma4_labelled(inst, label),
    }
}

/// `count` seeded instances. Each draws `n` uniformly from
/// `3..=max_vars`, then `m` uniformly from `1..=min(max_clauses, C(n,3))`,
/// then `m` distinct triples uniformly without replacement.
pub fn random_instances(count: usize, max_vars: usize, max_clauses: usize, seed: u64) -> Result<Vec<NaeInstance>> {
    if !(3..=MAX_NAE_VARS).contains(&max_vars) {
        return Err(Error::validation(format!(
            "max_vars must lie in 3..={MAX_NAE_VARS}, got {max_vars}"
        )));
    }
    let available = max_vars * (max_vars - 1) * (max_vars - 2) / 6;
    if max_clauses == 0 || max_clauses > available {
        return Err(Error::validation(format!(
            "max_clauses must lie in 1..={available} for {max_vars} variables, got {max_clauses}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(3..=max_vars);
        let triples: Vec<[usize; 3]> = (1..=n)
            .flat_map(|a| (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| [a, b, c])))
            .collect();
        let m = rng.gen_range(1..=max_clauses.min(triples.len()));
        let mut picked = sample(&mut rng, triples.len(), m).into_vec();
        picked.sort_unstable();
        out.push(NaeInstance::new(n, picked.into_iter().map(|i| triples[i]).collect())?);
    }
    Ok(out)
}


/// Version of the JSON document written by [`emit_report`].
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: u32,
    pub reports: Vec<VerificationReport>,
}

/// Compact JSON `{"version":1,"reports":[...]}`.
pub fn emit_report(reports: &[VerificationReport]) -> String {
    let doc = ReportDocument { version: REPORT_SCHEMA_VERSION, reports: reports.to_vec() };
    serde_json::to_string(&doc).expect("reports serialize")
}
