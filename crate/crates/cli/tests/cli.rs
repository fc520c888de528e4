//! End-to-end runs of the `modelcat` binary. Machine-format reports are
//! pinned in `tests/golden`; regenerate with `UPDATE_GOLDEN=1`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_modelcat"));
    cmd.current_dir(fixture(""));
    cmd.args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn golden(name: &str, text: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, text).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {name}"));
    assert_eq!(text, expected, "{name} drifted");
}

#[test]
fn validate_reports_the_summary() {
    let out = run(&["validate", "arrow.json"]);
    assert_eq!(code(&out), 0);
    golden("validate_arrow.json", &stdout(&out));
}

#[test]
fn discrete_structure_on_the_arrow_verifies() {
    let out = run(&["check-model", "arrow_discrete.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["status"], "verified");
    golden("check_model_discrete.json", &stdout(&out));
}

#[test]
fn all_all_all_is_refuted_with_a_square() {
    let out = run(&["check-model", "arrow_not_model.json"]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["structure"]["witness"]["type"], "square");
    golden("check_model_refuted.json", &stdout(&out));
}

#[test]
fn identity_classes_do_not_factor_the_arrow() {
    let out = run(&["check-wfs", "arrow_ids_wfs.json"]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["failed_clause"], "factorization");
    assert_eq!(report["witness"]["morphism"], "0->1");

    assert_eq!(code(&run(&["check-wfs", "arrow_all_isos_wfs.json"])), 0);
}

#[test]
fn recognition_reports_all_six_conditions() {
    let out = run(&["recognize", "arrow_gen_discrete.json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    let labels: Vec<&str> = report["recognition"]["conditions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["i", "ii", "iii", "iv", "v", "vi"]);
    golden("recognize_discrete.txt", &stdout(&run(&["--human", "recognize", "arrow_gen_discrete.json"])));
}

#[test]
fn intersecting_the_arrow_pair_returns_the_discrete_structure() {
    let out = run(&["intersect", "arrow_discrete.json", "arrow_trivial_cof.json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["summary"]["result"]["weq"], serde_json::json!(["id_0", "id_1"]));
    assert!(report["summary"]["proof_steps"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["status"] == "pass"));
    golden("intersect_classes.json", &stdout(&out));
}

#[test]
fn generator_route_agrees_with_the_class_route() {
    let out = run(&["intersect", "arrow_gen_discrete.json", "arrow_gen_trivial_cof.json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["class_agreement"]["status"], "pass");
    assert_eq!(report["symmetric_choice"]["status"], "pass");
    let classes = json(&run(&["intersect", "arrow_discrete.json", "arrow_trivial_cof.json"]));
    let induced = &report["recognition"]["induced"];
    for key in ["cof", "fib", "weq"] {
        assert_eq!(induced[key], classes["summary"]["result"][key]);
    }
}

#[test]
fn different_fibrations_are_a_precondition_error() {
    let out = run(&["intersect", "arrow_discrete.json", "arrow_trivial_fib.json"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("fibrations do not agree"));
    assert!(out.stdout.is_empty());
}

#[test]
fn diagram_checks_pass_on_the_arrow() {
    let out = run(&[
        "diagram",
        "arrow_discrete.json",
        "arrow.json",
        "--with",
        "arrow_trivial_cof.json",
    ]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["round_trip"]["equals_input"], true);
    assert_eq!(report["commutation"]["status"], "pass");
    golden("diagram_arrow.json", &stdout(&out));

    let only = json(&run(&["diagram", "arrow_discrete.json", "terminal.json", "--check", "hypotheses"]));
    assert!(only.get("hypotheses").is_some());
    assert!(only.get("round_trip").is_none() && only.get("adjoint_lemma").is_none());
}

#[test]
fn commutation_without_a_second_structure_is_rejected() {
    let out = run(&["diagram", "arrow_discrete.json", "arrow.json", "--check", "commutation"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--with"));
}

#[test]
fn both_enumeration_methods_list_the_same_structures() {
    let fast = json(&run(&["enumerate", "chain2.json"]));
    let naive = json(&run(&["enumerate", "chain2.json", "--naive"]));
    assert_eq!(fast["count"], 10);
    assert_eq!(fast["structures"], naive["structures"]);
}

#[test]
fn tight_budget_is_reported_not_truncated() {
    let out = run(&["enumerate", "diamond.json", "--budget", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn diamond_quiver_exports() {
    let dot = run(&["quiver", "diamond.json", "--format", "dot"]);
    assert_eq!(code(&dot), 0);
    golden("quiver_diamond.dot", &stdout(&dot));

    let out = run(&["quiver", "diamond.json", "--certify"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["status"], "certified");
    assert_eq!(report["quiver"]["nodes"].as_array().unwrap().len(), 23);
    assert_eq!(report["certificates"].as_array().unwrap().len(), 30);
    assert_eq!(report["components"]["components"].as_array().unwrap().len(), 1);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let args = ["quiver", "diamond.json", "--certify"];
    let one = run(&[&["--threads", "1"], &args[..]].concat());
    let four = run(&[&["--threads", "4"], &args[..]].concat());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = run(&["-o", target.to_str().unwrap(), "validate", "arrow.json"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(&target).unwrap(), stdout(&run(&["validate", "arrow.json"])));
}

#[test]
fn category_paths_resolve_against_the_structure_file() {
    let dir = tempfile::tempdir().unwrap();
    fs::create_dir(dir.path().join("cats")).unwrap();
    fs::copy(fixture("arrow.json"), dir.path().join("cats/arrow.json")).unwrap();
    let structure = dir.path().join("m.json");
    fs::write(&structure, r#"{"category": "cats/arrow.json", "cof": "all", "fib": "all", "weq": "isos"}"#).unwrap();
    assert_eq!(code(&run(&["check-model", structure.to_str().unwrap()])), 0);
}

#[test]
fn input_errors_cite_file_and_field() {
    let out = run(&["check-model", "bad_member.json"]);
    assert_eq!(code(&out), 2);
    let msg = stderr(&out);
    assert!(msg.contains("bad_member.json") && msg.contains("`fib`") && msg.contains("nope"), "{msg}");

    let out = run(&["validate", "bad_category.json"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown object `y`"));

    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    fs::write(&broken, "{\"kind\": \"poset\",\n \"elements\": [\"0\"],\n \"leq\": [[\"0\"]]}").unwrap();
    let out = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    assert_eq!(code(&run(&["check-model", "arrow_gen_discrete.json"])), 2);
    assert_eq!(code(&run(&["validate", "missing.json"])), 2);
}
