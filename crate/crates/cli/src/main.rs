//! Command-line front end.
//!
//! Data goes to stdout; every failure prints one line to stderr and exits
//! with 1 (bad input), 2 (resource limit) or 3 (inconsistency or a
//! violated lemma claim).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bigenic::classify::{classify, survey};
use bigenic::families::{catalog_fixtures, parse_family, realize};
use bigenic::gadget::{build_variant, gadget_structure_report, parse_nae, ListAssignment, NaeInstance, Variant};
use bigenic::graph::{
    contains_induced, enumerate_graphs, from_graph6, to_dimacs, to_graph6, Graph,
};
use bigenic::recognize::{
    all_open_matches, in_class_t_with, recognize_t, tree_trichotomy, ClassTReading,
};
use bigenic::solve::{chromatic_number, solve_k_colouring, solve_list_colouring, solve_nae};
use bigenic::verify::{emit_report, random_instances, verify, Lemma, VerificationReport};
use bigenic::Error;

#[derive(Parser)]
#[command(name = "bigenic", version, about = "Colouring gadgets, solvers and a classifier for (H1, H2)-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph6 encoding of a family expression, or every fixture.
    Catalog {
        expr: Option<String>,
        /// Emit DIMACS .col instead of graph6.
        #[arg(long)]
        dimacs: bool,
    },
    /// Structural recognizers; prints JSON.
    Recognize(RecognizeArgs),
    /// Complexity verdict for Colouring on (H1, H2)-free graphs.
    Classify {
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a gadget from a NAE-3SAT instance: graph6 line, then the JSON sidecar.
    Reduce {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Write the sidecar here instead of stdout.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        /// Also write the graph in DIMACS .col format.
        #[arg(long)]
        dimacs: Option<PathBuf>,
        /// Fail with status 3 unless every structural check passes.
        #[arg(long)]
        check: bool,
    },
    /// Exact solvers; prints JSON.
    Solve {
        #[command(subcommand)]
        problem: Problem,
    },
    /// Check the gadget lemmas on given or seeded random instances.
    Verify(VerifyArgs),
    /// Classify (F, H) for every graph H up to a vertex bound.
    Survey {
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Search a host graph for induced copies of patterns.
    Freeness {
        #[arg(long)]
        host: String,
        /// Patterns separated by ',' or ';' (commas inside K1,3 or T0,1,2 are kept).
        #[arg(long, num_args = 1.., required = true)]
        patterns: Vec<String>,
    },
    /// Stream the graph6 codes of all graphs on n vertices, one per class.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("mode").required(true)))]
struct RecognizeArgs {
    /// Membership in class T.
    #[arg(long = "class-T", group = "mode")]
    class_t: bool,
    /// Recognize T_{h,i,j}.
    #[arg(long = "T", group = "mode")]
    t: bool,
    /// Match the graph, read as co(H), against the open families.
    #[arg(long, group = "mode")]
    open_pattern: bool,
    /// Classify a tree as containing K1,4, S1,1,2 or being a long path.
    #[arg(long, group = "mode")]
    tree_trichotomy: bool,
    /// Reading of class T for --class-T.
    #[arg(long, value_enum, default_value_t = ReadingArg::AsWritten)]
    reading: ReadingArg,
    graph: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    lemma: LemmaArg,
    #[arg(long, conflicts_with = "random")]
    instance: Option<PathBuf>,
    #[arg(long, requires_all = ["max_vars", "max_clauses", "seed"])]
    random: Option<usize>,
    #[arg(long)]
    max_vars: Option<usize>,
    #[arg(long)]
    max_clauses: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Keep measured run times; otherwise elapsed_ms is 0 so output is reproducible.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Problem {
    Chromatic { graph: String },
    Kcol {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        graph: String,
    },
    Listcol {
        /// JSON array of lists, a gadget sidecar, or one whitespace-separated list per line.
        #[arg(long)]
        lists: PathBuf,
        graph: String,
    },
    Nae {
        #[arg(long)]
        instance: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    G1,
    G2,
    G1p,
    G2p,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::G1 => Variant::G1,
            VariantArg::G2 => Variant::G2,
            VariantArg::G1p => Variant::G1p,
            VariantArg::G2p => Variant::G2p,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReadingArg {
    AsWritten,
    LineGraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaArg {
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    All,
}

impl LemmaArg {
    fn lemmas(self) -> Vec<Lemma> {
        match self {
            LemmaArg::Lemma1 => vec![Lemma::Lemma1],
            LemmaArg::Lemma2 => vec![Lemma::Lemma2],
            LemmaArg::Lemma3 => vec![Lemma::Lemma3],
            LemmaArg::Lemma4 => vec![Lemma::Lemma4],
            LemmaArg::All => Lemma::ALL.to_vec(),
        }
    }
}

/// A failure and the exit status it maps to.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind, message) = match e {
            Error::Syntax { position, message } => (1, "syntax", format!("at position {position}: {message}")),
            Error::Validation(m) => (1, "validation", m),
            Error::ResourceLimit(m) => (2, "resource_limit", m),
            Error::Inconsistency(m) => (3, "inconsistency", m),
        };
        Failure { code, kind, message }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: 1, kind: "io", message: format!("{}: {e}", path.display()) }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

/// A family expression, or graph6 (optionally prefixed with `g6:`).
fn parse_graph(text: &str) -> CliResult<Graph> {
    let text = text.trim();
    if let Some(code) = text.strip_prefix("g6:") {
        return Ok(from_graph6(code)?);
    }
    match parse_family(text) {
        Ok(expr) => Ok(realize(&expr)?),
        Err(family_err) => from_graph6(text).map_err(|_| family_err.into()),
    }
}

/// Split a pattern list at separators that are not part of an atom's
/// parameter list.
fn split_patterns(values: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for value in values {
        for chunk in value.split(';') {
            let mut pieces = chunk.split(',').map(str::trim).filter(|p| !p.is_empty());
            let Some(first) = pieces.next() else { continue };
            let mut cur = first.to_string();
            for piece in pieces {
                let complete = parse_family(&cur).is_ok();
                if complete && parse_family(piece).is_ok() {
                    out.push(std::mem::replace(&mut cur, piece.to_string()));
                } else {
                    cur = format!("{cur},{piece}");
                }
            }
            out.push(cur);
        }
    }
    out
}

fn json_line(value: &serde_json::Value) -> String {
    serde_json::to_string(value).expect("JSON values serialize")
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Catalog { expr, dimacs } => {
            let render = |g: &Graph| if dimacs { to_dimacs(g) } else { format!("{}\n", to_graph6(g)) };
            match expr {
                Some(e) => Ok(render(&parse_graph(&e)?)),
                None if dimacs => Err(Error::Validation("--dimacs needs an expression".into()).into()),
                None => Ok(catalog_fixtures()
                    .iter()
                    .map(|(name, g)| format!("{name}\t{}\n", to_graph6(g)))
                    .collect()),
            }
        }
        Command::Recognize(args) => recognize(args),
        Command::Classify { h1, h2, json } => {
            let v = classify(&parse_graph(&h1)?, &parse_graph(&h2)?)?;
            if json {
                return Ok(format!("{}\n", serde_json::to_string(&v).expect("verdict serializes")));
            }
            let mut out = format!("{}\n", v.status);
            for t in &v.trace {
                out.push_str(&format!("{}\t{}\t{}\n", t.rule, t.citation, t.condition));
            }
            Ok(out)
        }
        Command::Reduce { instance, variant, sidecar, dimacs, check } => {
            let inst = parse_nae(&read(&instance)?)?;
            let g = build_variant(&inst, variant.into())?;
            if check {
                let report = gadget_structure_report(&g);
                if !report.all_passed() {
                    return Err(Error::Inconsistency(format!(
                        "gadget structure checks failed: {}",
                        report.failed().join(", ")
                    ))
                    .into());
                }
            }
            let side = serde_json::to_string(&g.sidecar()).expect("sidecar serializes");
            if let Some(path) = dimacs {
                write(&path, &to_dimacs(&g.graph))?;
            }
            let mut out = format!("{}\n", to_graph6(&g.graph));
            match sidecar {
                Some(path) => write(&path, &format!("{side}\n"))?,
                None => out.push_str(&format!("{side}\n")),
            }
            Ok(out)
        }
        Command::Solve { problem } => solve(problem),
        Command::Verify(args) => verify_cmd(args),
        Command::Survey { forbid, max_n, format } => {
            let s = survey(&parse_graph(&forbid)?, max_n)?;
            Ok(match format {
                TableFormat::Csv => s.to_csv(),
                TableFormat::Json => format!("{}\n", serde_json::to_string(&s).expect("survey serializes")),
            })
        }
        Command::Freeness { host, patterns } => {
            let host = parse_graph(&host)?;
            let mut found = Vec::new();
            for p in split_patterns(&patterns) {
                if let Some(w) = contains_induced(&host, &parse_graph(&p)?) {
                    found.push(json!({"pattern": p, "mapping": w.mapping}));
                }
            }
            if found.is_empty() {
                Ok("free\n".into())
            } else {
                Ok(format!("{}\n", json_line(&json!(found))))
            }
        }
        Command::Enumerate { n } => Ok(enumerate_graphs(n)?
            .iter()
            .map(|g| format!("{}\n", to_graph6(g)))
            .collect()),
    }
}

fn recognize(args: RecognizeArgs) -> CliResult<String> {
    let g = parse_graph(&args.graph)?;
    let value = if args.class_t {
        let (reading, name) = match args.reading {
            ReadingArg::AsWritten => (ClassTReading::AsWritten, "as_written"),
            ReadingArg::LineGraph => (ClassTReading::LineGraph, "line_graph"),
        };
        json!({"in_class_t": in_class_t_with(&g, reading), "reading": name})
    } else if args.t {
        json!({"t": recognize_t(&g)})
    } else if args.open_pattern {
        let all = all_open_matches(&g);
        json!({"match": all.first(), "all": all})
    } else {
        serde_json::to_value(tree_trichotomy(&g)?).expect("outcome serializes")
    };
    Ok(format!("{}\n", json_line(&value)))
}

fn parse_lists(text: &str) -> CliResult<ListAssignment> {
    let trimmed = text.trim_start();
    let invalid = |e: serde_json::Error| Failure::from(Error::Validation(format!("lists file: {e}")));
    if trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(trimmed).map_err(invalid)?;
        let lists = v.get("lists").cloned().unwrap_or(serde_json::Value::Null);
        return Ok(ListAssignment::new(serde_json::from_value(lists).map_err(invalid)?));
    }
    if trimmed.starts_with('[') {
        return Ok(ListAssignment::new(serde_json::from_str(trimmed).map_err(invalid)?));
    }
    let mut lists = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let list = line
            .split_whitespace()
            .map(|w| match w.parse::<u32>() {
                Ok(c) if c >= 1 => Ok(c),
                _ => Err(Error::Validation(format!("lists file line {}: bad colour '{w}'", i + 1))),
            })
            .collect::<Result<Vec<u32>, Error>>()?;
        lists.push(list);
    }
    Ok(ListAssignment::new(lists))
}

fn solve(problem: Problem) -> CliResult<String> {
    let value = match problem {
        Problem::Chromatic { graph } => {
            let g = parse_graph(&graph)?;
            let k = chromatic_number(&g)?;
            let colouring = solve_k_colouring(&g, k)?;
            json!({"chromatic_number": k, "colouring": colouring})
        }
        Problem::Kcol { k, graph } => {
            let g = parse_graph(&graph)?;
            if k < 0 {
                return Err(Error::Validation(format!("k must be non-negative, got {k}")).into());
            }
            let c = solve_k_colouring(&g, k as usize)?;
            json!({"k": k, "colourable": c.is_some(), "colouring": c})
        }
        Problem::Listcol { lists, graph } => {
            let g = parse_graph(&graph)?;
            let lists = parse_lists(&read(&lists)?)?;
            let c = solve_list_colouring(&g, &lists)?;
            json!({"colourable": c.is_some(), "colouring": c})
        }
        Problem::Nae { instance } => {
            let inst = parse_nae(&read(&instance)?)?;
            let a = solve_nae(&inst)?;
            json!({"satisfiable": a.is_some(), "assignment": a})
        }
    };
    Ok(format!("{}\n", json_line(&value)))
}

fn verify_cmd(args: VerifyArgs) -> CliResult<String> {
    let instances: Vec<(String, NaeInstance)> = match (&args.instance, args.random) {
        (Some(path), None) => vec![(path.display().to_string(), parse_nae(&read(path)?)?)],
        (None, Some(count)) => random_instances(
            count,
            args.max_vars.expect("required by clap"),
            args.max_clauses.expect("required by clap"),
            args.seed.expect("required by clap"),
        )?
        .into_iter()
        .enumerate()
        .map(|(i, inst)| (format!("random-{i}"), inst))
        .collect(),
        _ => {
            return Err(Error::Validation("verify needs --instance FILE or --random N".into()).into())
        }
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for (label, inst) in &instances {
        for lemma in args.lemma.lemmas() {
            let mut r = verify(lemma, inst, label)?;
            if !args.timing {
                r.elapsed_ms = 0;
            }
            reports.push(r);
        }
    }
    let doc = format!("{}\n", emit_report(&reports));
    let violated: Vec<String> = reports
        .iter()
        .filter(|r| !r.holds())
        .map(|r| format!("{} on {}", r.lemma, r.instance.label))
        .collect();
    if violated.is_empty() {
        Ok(doc)
    } else {
        print!("{doc}");
        Err(Error::Inconsistency(format!("violated claims: {}", violated.join(", "))).into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered
                .lines()
                .map(|l| l.trim().trim_start_matches("error:").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("invalid arguments");
            eprintln!("bigenic: usage: {line}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("bigenic: {}: {}", f.kind, f.message.replace('\n', " "));
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_lists_keep_atom_commas() {
        let v = |s: &str| split_patterns(&[s.to_string()]);
        assert_eq!(v("K1,3,C4"), vec!["K1,3", "C4"]);
        assert_eq!(v("2P2,3P2"), vec!["2P2", "3P2"]);
        assert_eq!(v("T0,1,2,co(3P2)"), vec!["T0,1,2", "co(3P2)"]);
        assert_eq!(v("K1,3;2P2"), vec!["K1,3", "2P2"]);
    }

    #[test]
    fn graph_arguments() {
        assert_eq!(to_graph6(&parse_graph("P4").unwrap()), "Ch");
        assert_eq!(to_graph6(&parse_graph("Ch").unwrap()), "Ch");
        assert_eq!(to_graph6(&parse_graph("g6:Ch").unwrap()), "Ch");
        assert_eq!(parse_graph("co(").err().map(|f| f.code), Some(1));
    }

    #[test]
    fn list_files() {
        assert_eq!(parse_lists("1 2\n3\n").unwrap().0, vec![vec![1, 2], vec![3]]);
        assert_eq!(parse_lists("[[2,1],[3]]").unwrap().0, vec![vec![1, 2], vec![3]]);
        assert_eq!(parse_lists(r#"{"lists":[[1]]}"#).unwrap().0, vec![vec![1]]);
        assert!(parse_lists("1 x\n").is_err());
    }
}
