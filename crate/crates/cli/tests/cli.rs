use std::fs;
use std::process::{Command, Output};

fn bigenic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigenic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr_lines(o: &Output) -> usize {
    String::from_utf8_lossy(&o.stderr).lines().count()
}

fn assert_fails(o: &Output, code: i32) {
    assert_eq!(o.status.code(), Some(code), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stderr_lines(o), 1);
}

#[test]
fn catalog_prints_five_vertex_graph6() {
    let o = bigenic(&["catalog", "co(C3+2P1)"]);
    assert!(o.status.success());
    let g6 = stdout(&o);
    assert_eq!(g6.trim().as_bytes()[0] - 63, 5);
    let all = stdout(&bigenic(&["catalog"]));
    assert_eq!(all.lines().count(), 20);
}

#[test]
fn classify_gadget_pair_json() {
    let o = bigenic(&["classify", "--h1", "2P2", "--h2", "co(3P2)", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "np_complete");
    let rules: Vec<&str> = v["trace"].as_array().unwrap().iter().map(|t| t["rule"].as_str().unwrap()).collect();
    assert!(rules.contains(&"N12"));
    assert!(v["trace"][0]["citation"].is_string());
}

#[test]
fn graph6_and_expressions_are_interchangeable() {
    let a = stdout(&bigenic(&["classify", "--h1", "P4", "--h2", "C5"]));
    let b = stdout(&bigenic(&["classify", "--h1", "Ch", "--h2", "g6:Dhc"]));
    assert_eq!(a, b);
    assert!(a.starts_with("polynomial_time\n"));
}

#[test]
fn verify_random_sweep_holds() {
    let args = ["verify", "all", "--random", "5", "--max-vars", "4", "--max-clauses", "3", "--seed", "1"];
    let o = bigenic(&args);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["version"], 1);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 20);
    let labels: std::collections::BTreeSet<&str> =
        reports.iter().map(|r| r["instance"]["label"].as_str().unwrap()).collect();
    assert_eq!(labels.len(), 5);
    assert!(reports
        .iter()
        .flat_map(|r| r["claims"].as_array().unwrap())
        .all(|c| c["status"] == "holds"));
    assert_eq!(stdout(&bigenic(&args)), stdout(&o));
}

#[test]
fn reduce_then_list_colour() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("one.nae");
    fs::write(&inst, "p nae 3 1\n1 2 3 0\n").unwrap();
    let side = dir.path().join("g1.json");
    let col = dir.path().join("g1.col");
    let o = bigenic(&[
        "reduce", "--instance", inst.to_str().unwrap(), "--variant", "g1",
        "--sidecar", side.to_str().unwrap(), "--dimacs", col.to_str().unwrap(), "--check",
    ]);
    assert!(o.status.success());
    let g6 = stdout(&o).trim().to_string();
    assert!(fs::read_to_string(&col).unwrap().starts_with("p edge 5 6\n"));
    let sidecar: serde_json::Value = serde_json::from_str(&fs::read_to_string(&side).unwrap()).unwrap();
    assert_eq!(sidecar["colour_budget"], 6);
    assert_eq!(sidecar["lists"][3], serde_json::json!([1, 3, 5]));
    let o = bigenic(&["solve", "listcol", "--lists", side.to_str().unwrap(), &g6]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["colourable"], true);

    let o = bigenic(&["reduce", "--instance", inst.to_str().unwrap(), "--variant", "g2p"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].as_bytes()[0] - 63, 11);
}

#[test]
fn solvers() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&bigenic(&["solve", "chromatic", "C5"]))).unwrap();
    assert_eq!(v["chromatic_number"], 3);
    let v: serde_json::Value = serde_json::from_str(&stdout(&bigenic(&["solve", "kcol", "--k", "2", "C5"]))).unwrap();
    assert_eq!(v["colourable"], false);
    assert_fails(&bigenic(&["solve", "kcol", "--k", "-1", "C5"]), 1);
}

#[test]
fn freeness_and_recognizers() {
    assert_eq!(stdout(&bigenic(&["freeness", "--host", "C5", "--patterns", "2P2,K1,3"])), "free\n");
    let o = stdout(&bigenic(&["freeness", "--host", "P5", "--patterns", "2P2"]));
    assert!(o.contains("\"pattern\":\"2P2\""));
    assert_eq!(stdout(&bigenic(&["recognize", "--T", "paw"])), "{\"t\":[0,0,1]}\n");
    let o = stdout(&bigenic(&["recognize", "--class-T", "--reading", "line-graph", "C3+P2"]));
    assert!(o.contains("\"in_class_t\":true"));
    let o = stdout(&bigenic(&["recognize", "--tree-trichotomy", "S1,2,2"]));
    assert!(o.contains("\"tag\":\"contains_s112\""), "{o}");
    assert_fails(&bigenic(&["recognize", "--tree-trichotomy", "C4"]), 1);
}

#[test]
fn enumerate_and_survey() {
    assert_eq!(stdout(&bigenic(&["enumerate", "--n", "4"])).lines().count(), 11);
    assert_fails(&bigenic(&["enumerate", "--n", "8"]), 2);
    let csv = stdout(&bigenic(&["survey", "--forbid", "P5", "--max-n", "3"]));
    assert_eq!(csv.lines().count(), 1 + 7);
}

#[test]
fn error_paths_print_one_line() {
    assert_fails(&bigenic(&["catalog", "co("]), 1);
    assert_fails(&bigenic(&["catalog", "C2"]), 1);
    assert_fails(&bigenic(&["no-such-command"]), 1);
    assert_fails(&bigenic(&["classify", "--h1", "P4"]), 1);
    assert_fails(&bigenic(&["reduce", "--instance", "/nonexistent", "--variant", "g1"]), 1);
    assert_fails(&bigenic(&["catalog", "65P1"]), 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.nae");
    fs::write(&bad, "p nae 3 1\n1 1 2 0\n").unwrap();
    assert_fails(&bigenic(&["verify", "lemma1", "--instance", bad.to_str().unwrap()]), 1);
}
