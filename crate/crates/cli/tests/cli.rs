use std::path::PathBuf;
use std::process::{Command, Output};

use quantlang_cli::{AutomatonDocument, ResultDocument};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn quantlang(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quantlang")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> ResultDocument {
    let out = quantlang(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn tmp(name: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name).display().to_string()
}

#[test]
fn bank_value_is_a_geometric_series() {
    let doc = ok(&["eval", &fixture("bank_a1"), "--word", "(g1g2)"]);
    assert_eq!(doc.value.as_deref(), Some("16/1"));
    let doc = ok(&["eval", &fixture("bank_a1"), "--word", "(g1g2)", "--decimal", "3"]);
    assert_eq!(doc.decimal.as_deref(), Some("16.000"));
}

#[test]
fn limavg_min_is_refused_with_a_citation() {
    let out = quantlang(&["compose", "min", &fixture("limavg_a"), &fixture("limavg_b")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not closed under min"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn motor_refinement_workflow() {
    let out = quantlang(&["compose", "max", &fixture("motor_a"), &fixture("motor_b")]);
    assert_eq!(out.status.code(), Some(2));
    let max = tmp("motor_max.json");
    ok(&["compose", "max", "--nondet", &fixture("motor_a"), &fixture("motor_b"), "-o", &max]);
    let doc = ok(&["diff", &max, &fixture("motor_b"), "--samples", "200", "--seed", "7"]);
    assert_eq!(doc.value.as_deref(), Some("0/1"));
    assert_eq!(doc.witness, None);
    let doc = ok(&["diff", &fixture("motor_a"), &fixture("motor_b"), "--samples", "200", "--seed", "7"]);
    assert_eq!(doc.witness, None);
    assert_eq!(doc.status.as_deref(), Some("refines"));
}

#[test]
fn emitted_automata_round_trip() {
    let path = tmp("sum_counts.json");
    let doc = ok(&["compose", "sum", &fixture("count_a"), &fixture("count_b"), "-o", &path]);
    let emitted = doc.automaton.unwrap();
    let reread: AutomatonDocument = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reread, emitted);
    let again = ok(&["eval", &path, "--word", "a b b"]);
    assert_eq!(again.value.as_deref(), Some("3/1"));
    let c = tmp("cut.json");
    ok(&["cutpoint", &fixture("two_scc_limavg"), "--eta", "1/2", "-o", &c]);
    let acc = ok(&["eval", &c, "--word", "(a)"]);
    assert_eq!(acc.status.as_deref(), Some("accepted"));
    let rej = ok(&["eval", &c, "--word", "a (b)"]);
    assert_eq!(rej.status.as_deref(), Some("rejected"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["perturb", "FIX", "--eps", "1/10", "--seed", "3"],
        vec!["dsup", "FIX", "FIX2", "--samples", "50", "--seed", "3"],
        vec!["top", "FIX"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| match *a {
                "FIX" => fixture("motor_a"),
                "FIX2" => fixture("motor_b"),
                other => other.to_string(),
            })
            .collect();
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (x, y) = (quantlang(&refs), quantlang(&refs));
        assert!(x.status.success());
        assert_eq!(x.stdout, y.stdout, "{refs:?}");
    }
}

#[test]
fn exit_codes() {
    let partial = tmp("partial.json");
    let mut doc: AutomatonDocument = serde_json::from_str(&std::fs::read_to_string(fixture("freq_a_limavg")).unwrap()).unwrap();
    doc.transitions.pop();
    std::fs::write(&partial, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = quantlang(&["eval", &partial, "--word", "(a)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(q, b)"));
    assert_eq!(quantlang(&["validate", &partial]).status.code(), Some(1));
    assert_eq!(quantlang(&["eval", &fixture("freq_a_limavg"), "--word", "a (b"]).status.code(), Some(1));
    let out = quantlang(&["eval", &fixture("freq_a_limavg"), "--word", "a a (b)", "--max-positions", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = quantlang(&["cutpoint", &fixture("freq_a_limavg"), "--eta", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(quantlang(&["eval", "/nonexistent.json", "--word", "(a)"]).status.code(), Some(1));
}

#[test]
fn isolation_and_cutpoints() {
    let doc = ok(&["isolate", &fixture("two_scc_limavg"), "--eta", "1/2"]);
    assert_eq!(doc.status.as_deref(), Some("isolated"));
    assert_eq!(doc.margin.as_deref(), Some("1/2"));
    let doc = ok(&["isolate", &fixture("freq_a_limavg"), "--eta", "1/2"]);
    assert_eq!(doc.status.as_deref(), Some("not-isolated"));
    assert_eq!(doc.value.as_deref(), Some("1/2"));
    let doc = ok(&["isolate", &fixture("disc_quarter"), "--eta", "1/2", "--delta", "1/10"]);
    assert_eq!(doc.status.as_deref(), Some("isolated"));
    let doc = ok(&["cutpoint", &fixture("disc_quarter"), "--eta", "1/2", "--eps", "1/8"]);
    assert_eq!(doc.depth, Some(2));
    assert_eq!(doc.automaton.unwrap().kind, "buchi");
    assert_eq!(quantlang(&["cutpoint", &fixture("disc_quarter"), "--eta", "1/2"]).status.code(), Some(1));
}

#[test]
fn unary_transformations() {
    let doc = ok(&["shift", &fixture("freq_a_limavg"), "-c", "-1/2"]);
    assert!(doc.automaton.unwrap().transitions.iter().any(|t| t.weight.as_deref() == Some("-1/2")));
    let doc = ok(&["scale", &fixture("freq_a_limavg"), "-c", "3"]);
    assert!(doc.automaton.unwrap().transitions.iter().any(|t| t.weight.as_deref() == Some("3/1")));
    assert_eq!(quantlang(&["scale", &fixture("freq_a_limavg"), "-c", "-1"]).status.code(), Some(1));
    let doc = ok(&["reduce-bool", &fixture("freq_a_limavg")]);
    assert_eq!(doc.automaton.unwrap().states.len(), 1);
    let doc = ok(&["complement", &fixture("count_a")]);
    assert_eq!(doc.automaton.unwrap().kind, "sum");
    assert_eq!(quantlang(&["complement", &fixture("motor_a")]).status.code(), Some(2));
}
