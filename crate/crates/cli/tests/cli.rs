use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn psl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psl"))
        .args(args)
        .current_dir(fixtures())
        .env("PSL_COLOR", "0")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn payload(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&o.stdout))
    })
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn verify_like_geometric_c4_fixture() {
    let o = psl(&["verify", "--graph", "c4.json", "--labeling", "c4_like_geometric.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let r = payload(&o);
    assert_eq!(r["valid"], json!(true));
    assert_eq!(r["strong"], json!(true));
    assert_eq!(r["uniform"], json!(4));
    assert_eq!(r["like_geometric"], json!(2));
}

#[test]
fn verify_duplicate_label_names_both_vertices() {
    let o = psl(&["verify", "--graph", "c4.json", "--labeling", "c4_duplicate.json"]);
    assert_eq!(code(&o), 1);
    let err = stderr(&o);
    assert!(err.contains("vertices a and c"), "{err}");
    assert_eq!(payload(&o)["valid"], json!(false));
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = psl(&["verify", "--graph", "c4.json", "--labeling", "/nonexistent/labels.json"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_json_reports_position() {
    let o = psl(&["verify", "--graph", "c4.json", "--labeling", "malformed.json"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2 column"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn edge_labels_on_k2() {
    let o = psl(&["edge-labels", "--graph", "k2.json", "--labeling", "k2_labels.json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(payload(&o), json!({"a-b": ["3", "6", "12"]}));

    let o = psl(&["edge-labels", "--graph", "k2.json", "--labeling", "k2_singletons.json"]);
    assert_eq!(payload(&o), json!({"a-b": ["9"]}));
}

#[test]
fn edge_labels_reject_invalid_labeling() {
    let o = psl(&["edge-labels", "--graph", "c4.json", "--labeling", "c4_duplicate.json"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn strong_construction_on_c4() {
    let o = psl(&["construct", "--graph", "c4.json", "--scheme", "strong", "--ratio", "2", "--size", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(
        payload(&o),
        json!({"assignments": {"a": ["1", "2"], "b": ["3", "12"], "c": ["5", "10"], "d": ["7", "28"]}})
    );
}

#[test]
fn like_geometric_refuses_triangle_with_witness() {
    let o = psl(&["construct", "--graph", "c3.json", "--scheme", "like-geometric"]);
    assert_eq!(code(&o), 1);
    assert_eq!(payload(&o)["odd_cycle"], json!(["a", "b", "c"]));
}

#[test]
fn ratio_one_is_rejected() {
    for scheme in ["isogeometric", "uniform", "like-geometric", "strong"] {
        let o = psl(&["construct", "--graph", "c4.json", "--scheme", scheme, "--ratio", "1"]);
        assert_eq!(code(&o), 2, "{scheme}");
    }
}

#[test]
fn inapplicable_flags_are_rejected() {
    let o = psl(&["construct", "--graph", "c4.json", "--scheme", "isogeometric", "--k", "2"]);
    assert_eq!(code(&o), 2);
    let o = psl(&["construct", "--graph", "c4.json", "--scheme", "like-geometric", "--k", "3"]);
    assert_eq!(code(&o), 2, "k above the x-side size");
}

#[test]
fn constructions_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    type Case<'a> = (&'a str, &'a [&'a str], &'a [(&'a str, Value)]);
    let cases: &[Case] = &[
        ("c4.json", &["--scheme", "isogeometric", "--ratio", "3", "--size", "3"], &[("isogeometric", json!("3/1"))]),
        ("c3.json", &["--scheme", "isogeometric"], &[("isogeometric", json!("2/1"))]),
        ("c3.json", &["--scheme", "uniform", "--size", "3"], &[("uniform", json!(5))]),
        ("c4.json", &["--scheme", "uniform", "--size", "2", "--size-y", "4"], &[("uniform", json!(5))]),
        ("c4.json", &["--scheme", "like-geometric", "--size", "3", "--k", "2"], &[("like_geometric", json!(2))]),
        ("c4.json", &["--scheme", "strong", "--size", "2", "--size-y", "3"], &[("strong", json!(true)), ("uniform", json!(6))]),
    ];
    for (i, (graph, args, expect)) in cases.iter().enumerate() {
        let out = dir.path().join(format!("labeling{i}.json"));
        let mut full = vec!["construct", "--graph", graph, "--out", out.to_str().unwrap()];
        full.extend_from_slice(args);
        let o = psl(&full);
        assert_eq!(code(&o), 0, "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty(), "--out keeps stdout clean");

        let v = psl(&["verify", "--graph", graph, "--labeling", out.to_str().unwrap()]);
        assert_eq!(code(&v), 0, "{args:?}");
        let report = payload(&v);
        for (field, value) in expect.iter() {
            assert_eq!(&report[field], value, "{args:?} field {field}");
        }
    }
}

#[test]
fn sizes_file_drives_isogeometric_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let sizes = dir.path().join("sizes.json");
    std::fs::write(&sizes, r#"{"a": 1, "b": 2, "c": 3, "d": 2}"#).unwrap();
    let o = psl(&["construct", "--graph", "c4.json", "--scheme", "isogeometric", "--sizes-file", sizes.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let f = payload(&o);
    let lens: Vec<usize> = ["a", "b", "c", "d"]
        .iter()
        .map(|v| f["assignments"][v].as_array().unwrap().len())
        .collect();
    assert_eq!(lens, [1, 2, 3, 2]);
}

#[test]
fn unknown_theorem_id_is_a_usage_error() {
    assert_eq!(code(&psl(&["check-theorem", "thm9"])), 2);
}

#[test]
fn graph_checks_need_a_graph() {
    assert_eq!(code(&psl(&["check-theorem", "thm3"])), 2);
    assert_eq!(code(&psl(&["check-theorem", "thm5"])), 2);
}

#[test]
fn no_like_geometric_labeling_of_a_triangle() {
    let o = psl(&["check-theorem", "thm5", "--graph", "c3.json", "--exp-max", "3", "--size-max", "3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = payload(&o);
    assert_eq!(v["verdict"], json!("pass"));
    assert_eq!(v["counterexample"], Value::Null);
}

#[test]
fn like_geometric_labeling_of_c4_is_found() {
    let o = psl(&["check-theorem", "thm5", "--graph", "c4.json", "--exp-max", "2", "--size-max", "2"]);
    assert_eq!(code(&o), 0);
    assert!(payload(&o)["witness"].is_object());
}

#[test]
fn thm2_default_sweep_passes() {
    let o = psl(&["check-theorem", "thm2", "--universe", "20", "--max-size", "4"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(payload(&o)["checked"], json!(19_068_400));
}

#[test]
fn thm3_on_triangle() {
    let o = psl(&["check-theorem", "thm3", "--graph", "c3.json", "--universe", "6", "--max-size", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn invalid_budget_is_a_usage_error() {
    assert_eq!(code(&psl(&["check-theorem", "thm1", "--universe", "1"])), 2);
    assert_eq!(code(&psl(&["check-theorem", "thm1", "--min-size", "4", "--max-size", "2"])), 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let runs: &[&[&str]] = &[
        &["check-theorem", "thm1", "--universe", "1000", "--max-size", "6", "--samples", "2000", "--seed", "9"],
        &["check-theorem", "geomchar"],
        &["check-theorem", "prop3"],
        &["construct", "--graph", "c4.json", "--scheme", "like-geometric", "--size", "3"],
    ];
    for args in runs {
        let a = psl(args);
        let b = psl(args);
        assert_eq!(code(&a), 0, "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn timing_is_opt_in() {
    let o = psl(&["check-theorem", "prop3"]);
    assert!(payload(&o).get("elapsed_ms").is_none());
    let o = psl(&["check-theorem", "prop3", "--timing"]);
    assert!(payload(&o)["elapsed_ms"].is_u64());
}
