//! Named graph families and a compact expression language for them.
//!
//! ```text
//! expr  := term ('+' term)*
//! term  := [count] atom
//! atom  := 'P'r | 'C'r | 'K'r | 'K'r','s | 'S'h','i','j | 'T'h','i','j
//!        | name | 'co(' expr ')' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. `3P2` is three disjoint copies of P2,
//! `co(C3+2P1)` the complement of a triangle plus two isolated vertices.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Claw,
    Fork,
    Paw,
    Bull,
    Net,
    Hammer,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 6] = [
        NamedGraph::Claw,
        NamedGraph::Fork,
        NamedGraph::Paw,
        NamedGraph::Bull,
        NamedGraph::Net,
        NamedGraph::Hammer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::Claw => "claw",
            NamedGraph::Fork => "fork",
            NamedGraph::Paw => "paw",
            NamedGraph::Bull => "bull",
            NamedGraph::Net => "net",
            NamedGraph::Hammer => "hammer",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        match name {
            "claw" => Some(NamedGraph::Claw),
            "fork" | "chair" => Some(NamedGraph::Fork),
            "paw" => Some(NamedGraph::Paw),
            "bull" => Some(NamedGraph::Bull),
            "net" => Some(NamedGraph::Net),
            "hammer" => Some(NamedGraph::Hammer),
            _ => None,
        }
    }

    /// The S or T atom this name stands for.
    pub fn expansion(self) -> Atom {
        match self {
            NamedGraph::Claw => Atom::SubdividedClaw(1, 1, 1),
            NamedGraph::Fork => Atom::SubdividedClaw(1, 1, 2),
            NamedGraph::Paw => Atom::T(0, 0, 1),
            NamedGraph::Bull => Atom::T(0, 1, 1),
            NamedGraph::Net => Atom::T(1, 1, 1),
            NamedGraph::Hammer => Atom::T(0, 0, 2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Tree with one degree-3 vertex whose legs have lengths h, i, j.
    SubdividedClaw(usize, usize, usize),
    /// Triangle with pendant paths of lengths h, i, j on its corners.
    T(usize, usize, usize),
    Named(NamedGraph),
}

impl Atom {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::validation(format!("{self}: requires {what}")));
        match *self {
            Atom::Path(r) if r < 1 => bad("r >= 1"),
            Atom::Complete(r) if r < 1 => bad("r >= 1"),
            Atom::Cycle(r) if r < 3 => bad("r >= 3"),
            Atom::CompleteBipartite(r, s) if r < 1 || s < 1 => bad("r >= 1 and s >= 1"),
            Atom::SubdividedClaw(h, i, j) if !(1 <= h && h <= i && i <= j) => {
                bad("1 <= h <= i <= j")
            }
            Atom::T(h, i, j) if !(h <= i && i <= j) => bad("0 <= h <= i <= j"),
            _ => Ok(()),
        }
    }

    fn vertex_count(&self) -> usize {
        match *self {
            Atom::Path(r) | Atom::Cycle(r) | Atom::Complete(r) => r,
            Atom::CompleteBipartite(r, s) => r.saturating_add(s),
            Atom::SubdividedClaw(h, i, j) => h.saturating_add(i).saturating_add(j).saturating_add(1),
            Atom::T(h, i, j) => h.saturating_add(i).saturating_add(j).saturating_add(3),
            Atom::Named(name) => name.expansion().vertex_count(),
        }
    }

    fn realize(&self) -> Result<Graph> {
        match *self {
            Atom::Path(r) => Graph::path(r),
            Atom::Cycle(r) => Graph::cycle(r),
            Atom::Complete(r) => Graph::complete(r),
            Atom::CompleteBipartite(r, s) => Graph::complete_bipartite(r, s),
            Atom::SubdividedClaw(h, i, j) => {
                // Centre is vertex 0; legs follow in order h, i, j.
                let mut edges = Vec::new();
                let mut next = 1;
                for len in [h, i, j] {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                Graph::from_edges(next, &edges)
            }
            Atom::T(h, i, j) => {
                // a0..ah, b0..bi, c0..cj in that order.
                let (a0, b0, c0) = (0, h + 1, h + i + 2);
                let mut edges = vec![(a0, b0), (b0, c0), (a0, c0)];
                for (start, len) in [(a0, h), (b0, i), (c0, j)] {
                    edges.extend((start..start + len).map(|p| (p, p + 1)));
                }
                Graph::from_edges(h + i + j + 3, &edges)
            }
            Atom::Named(name) => name.expansion().realize(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Path(r) => write!(f, "P{r}"),
            Atom::Cycle(r) => write!(f, "C{r}"),
            Atom::Complete(r) => write!(f, "K{r}"),
            Atom::CompleteBipartite(r, s) => write!(f, "K{r},{s}"),
            Atom::SubdividedClaw(h, i, j) => write!(f, "S{h},{i},{j}"),
            Atom::T(h, i, j) => write!(f, "T{h},{i},{j}"),
            Atom::Named(name) => f.write_str(name.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyExpr {
    Atom(Atom),
    /// Disjoint union of `(multiplicity, expression)` terms.
    Union(Vec<(usize, FamilyExpr)>),
    Complement(Box<FamilyExpr>),
}

impl FamilyExpr {
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilyExpr::Atom(a) => a.validate(),
            FamilyExpr::Union(terms) => {
                if terms.is_empty() {
                    return Err(Error::validation("empty union"));
                }
                terms.iter().try_for_each(|(count, e)| {
                    if *count < 1 {
                        return Err(Error::validation(format!(
                            "multiplicity of {e} must be >= 1"
                        )));
                    }
                    e.validate()
                })
            }
            FamilyExpr::Complement(e) => e.validate(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            FamilyExpr::Atom(a) => a.vertex_count(),
            FamilyExpr::Union(terms) => terms
                .iter()
                .map(|(k, e)| k.saturating_mul(e.vertex_count()))
                .fold(0, usize::saturating_add),
            FamilyExpr::Complement(e) => e.vertex_count(),
        }
    }
}

impl fmt::Display for FamilyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyExpr::Atom(a) => write!(f, "{a}"),
            FamilyExpr::Complement(e) => write!(f, "co({e})"),
            FamilyExpr::Union(terms) => {
                for (idx, (count, e)) in terms.iter().enumerate() {
                    if idx > 0 {
                        f.write_str("+")?;
                    }
                    if *count != 1 || terms.len() == 1 {
                        write!(f, "{count}")?;
                    }
                    match e {
                        FamilyExpr::Union(_) => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

struct Parser<'a> {
    // (byte offset in the original text, char) with whitespace removed.
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(off, _)| off)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(Error::syntax(self.offset(), format!("expected '{want}', found '{c}'"))),
            None => Err(Error::syntax(self.offset(), format!("expected '{want}', found end of input"))),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        let start_offset = self.offset();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(match self.peek() {
                Some(c) => Error::syntax(start_offset, format!("expected a number, found '{c}'")),
                None => Error::syntax(start_offset, "expected a number, found end of input"),
            });
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        digits
            .parse()
            .map_err(|_| Error::syntax(start_offset, format!("number {digits} is too large")))
    }

    fn numbers(&mut self, count: usize) -> Result<Vec<usize>> {
        let mut out = vec![self.number()?];
        for _ in 1..count {
            self.expect(',')?;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<FamilyExpr> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some('+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        if terms.len() == 1 && terms[0].0.is_none() {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(FamilyExpr::Union(
            terms.into_iter().map(|(k, e)| (k.unwrap_or(1), e)).collect(),
        ))
    }

    fn term(&mut self) -> Result<(Option<usize>, FamilyExpr)> {
        let count = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.number()?),
            _ => None,
        };
        Ok((count, self.atom()?))
    }

    fn atom(&mut self) -> Result<FamilyExpr> {
        let at = self.offset();
        let atom = match self.peek() {
            Some('P') => {
                self.pos += 1;
                Atom::Path(self.number()?)
            }
            Some('C') => {
                self.pos += 1;
                Atom::Cycle(self.number()?)
            }
            Some('K') => {
                self.pos += 1;
                let r = self.number()?;
                if self.peek() == Some(',') {
                    self.pos += 1;
                    Atom::CompleteBipartite(r, self.number()?)
                } else {
                    Atom::Complete(r)
                }
            }
            Some('S') => {
                self.pos += 1;
                let v = self.numbers(3)?;
                Atom::SubdividedClaw(v[0], v[1], v[2])
            }
            Some('T') => {
                self.pos += 1;
                let v = self.numbers(3)?;
                Atom::T(v[0], v[1], v[2])
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                return Ok(inner);
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_lowercase()) {
                    self.pos += 1;
                }
                let word: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
                if word == "co" && self.peek() == Some('(') {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.expect(')')?;
                    return Ok(FamilyExpr::Complement(Box::new(inner)));
                }
                match NamedGraph::from_name(&word) {
                    Some(name) => Atom::Named(name),
                    None => return Err(Error::syntax(at, format!("unknown graph name '{word}'"))),
                }
            }
            Some(c) => return Err(Error::syntax(at, format!("unexpected '{c}'"))),
            None => return Err(Error::syntax(at, "unexpected end of input")),
        };
        atom.validate()?;
        Ok(FamilyExpr::Atom(atom))
    }
}

pub fn parse_family(text: &str) -> Result<FamilyExpr> {
    let chars = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser {
        chars,
        pos: 0,
        text,
    };
    let expr = parser.expr()?;
    if let Some(c) = parser.peek() {
        return Err(Error::syntax(parser.offset(), format!("unexpected '{c}' after expression")));
    }
    expr.validate()?;
    Ok(expr)
}

pub fn realize(expr: &FamilyExpr) -> Result<Graph> {
    expr.validate()?;
    let size = expr.vertex_count();
    if size > MAX_VERTICES {
        return Err(Error::limit(format!(
            "{expr} has {size} vertices, cap is {MAX_VERTICES}"
        )));
    }
    realize_unchecked(expr)
}

fn realize_unchecked(expr: &FamilyExpr) -> Result<Graph> {
    match expr {
        FamilyExpr::Atom(a) => a.realize(),
        FamilyExpr::Complement(e) => Ok(realize_unchecked(e)?.complement()),
        FamilyExpr::Union(terms) => {
            let mut g = Graph::empty(0)?;
            for (count, e) in terms {
                let part = realize_unchecked(e)?;
                for _ in 0..*count {
                    g = g.disjoint_union(&part)?;
                }
            }
            Ok(g)
        }
    }
}

/// Parse and realize in one step.
pub fn graph_of(text: &str) -> Result<Graph> {
    realize(&parse_family(text)?)
}

/// Expressions for every graph used as a fixture by the acceptance suite.
pub const FIXTURE_EXPRESSIONS: [&str; 20] = [
    "K1,3",
    "C4",
    "4P1",
    "2P1+P2",
    "co(C4+P1)",
    "P5",
    "co(C3+2P1)",
    "co(C3+P2)",
    "co(P1+2P2)",
    "paw",
    "bull",
    "net",
    "hammer",
    "2P2",
    "3P2",
    "T0,2,2",
    "2C3",
    "C3+P4",
    "2P4",
    "T0,0,4",
];

pub fn catalog_fixtures() -> BTreeMap<&'static str, Graph> {
    FIXTURE_EXPRESSIONS
        .iter()
        .map(|&e| (e, graph_of(e).expect("fixture expressions are valid")))
        .collect()
}
