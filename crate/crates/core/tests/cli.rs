//! The `arbor` binary end to end: exit codes, outputs, determinism, and the
//! shipped JSON schema.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn arbor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arbor"))
        .args(args)
        .env_remove("ARBOR_CAP_N")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/arbor-output.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let validator = schema();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema errors: {errors:?}");
}

#[test]
fn analyze_hand_instance() {
    let out = arbor(&["analyze", "--tree", "1-2,2-3", "--map", "2,3,1", "--orientation", "00"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_valid(&v);
    assert_eq!(v["oriented"]["rows"], serde_json::json!([["0", "1"], ["-1", "-1"]]));
    assert_eq!(v["oriented_charpoly"]["display"], "x^2 + x + 1");
    assert_eq!(v["all_pass"], true);
    for (_, c) in v["claims"].as_object().unwrap() {
        assert_eq!(c["status"], "pass");
    }
}

#[test]
fn analyze_with_primes_and_all_witnesses() {
    let out = arbor(&[
        "analyze", "--tree", "2,2,3", "--map", "(1 3 5 2 4)", "--primes", "2,3", "--all-witnesses",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_valid(&v);
    assert_eq!(v["modular"].as_array().unwrap().len(), 2);
    assert_eq!(v["modular"][0]["similar_to_companion"], true);
    // 4 edges, 5 vertices: j in {1,2,3,4} all coprime to 5, 5 starts
    assert_eq!(v["all_witnesses"].as_array().unwrap().len(), 20);
}

#[test]
fn usage_errors_exit_2() {
    let out = arbor(&["analyze", "--tree", "1-2,2-3", "--map", "1,3,2"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_valid(&v);
    assert_eq!(v["kind"], "NotSingleCycle");

    let out = arbor(&["analyze", "--tree", "1-2,2-3", "--map", "2,3,1", "--orientation", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["kind"], "Parse");

    let out = arbor(&["analyze", "--tree", "1-2,2-x", "--map", "2,3,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().contains("column 7"));

    let out = arbor(&["verify", "--n", "12"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["kind"], "CapExceeded");

    let out = arbor(&["reproduce", "--figure", "7q"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["kind"], "FixtureMissing");

    // clap's own usage errors
    assert_eq!(arbor(&["verify"]).status.code(), Some(2));
    assert_eq!(arbor(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn cap_can_be_raised_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_arbor"))
        .args(["enumerate", "--n", "10"])
        .env("ARBOR_CAP_N", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["per_vertex_count"][0]["trees"], "235");
    let out = arbor(&["enumerate", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let out = arbor(&["enumerate", "--vertices", "3..8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_valid(&v);
    let counts: Vec<&str> = v["per_vertex_count"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["trees"].as_str().unwrap())
        .collect();
    assert_eq!(counts, ["1", "2", "3", "6", "11", "23"]);
}

#[test]
fn verify_small_range_all_orientations() {
    let out = arbor(&["verify", "--n", "2..5", "--orientations", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_valid(&v);
    assert_eq!(v["all_pass"], true);
    // Σ_n trees(n+1) · n! · 2^n
    assert_eq!(v["total_instances"], (2 * 4 + 2 * 6 * 8 + 3 * 24 * 16 + 6 * 120 * 32).to_string());
}

#[test]
fn verify_full_checks_small_range() {
    let out = arbor(&["verify", "--n", "2..4", "--orientations", "all", "--full"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_valid(&v);
    let row = &v["per_n"][2];
    assert_eq!(row["claim_decided"]["lemma1"], row["instances"]);
    assert_eq!(row["claim_decided"]["basis_witness"], row["instances"]);
}

#[test]
fn verify_is_byte_stable() {
    let args = ["verify", "--n", "2..5", "--orientations", "sample:16", "--seed", "7"];
    let a = arbor(&args);
    let b = arbor(&args);
    let mut with_workers = args.to_vec();
    with_workers.extend(["--workers", "4"]);
    let c = arbor(&with_workers);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn reproduce_every_figure() {
    for id in arbor::figures::FIGURE_IDS {
        let out = arbor(&["reproduce", "--figure", id]);
        assert_eq!(out.status.code(), Some(0), "figure {id}");
        let v = json(&out);
        assert_valid(&v);
        assert_eq!(v["all_match"], true);
    }
    let v = json(&arbor(&["reproduce", "--figure", "1a"]));
    assert_eq!(v["unoriented_charpoly"]["display"], "x^5 - 3x^4 + x^3 + x^2 - 3x + 1");
    let v = json(&arbor(&["reproduce", "--figure", "3b"]));
    assert_eq!(
        v["unoriented_charpoly"]["display"],
        "x^11 - x^10 - 7x^9 + 3x^8 + 11x^7 + 5x^6 + x^5 - 5x^4 - 5x^3 - 3x^2 + x + 1"
    );
    let v = json(&arbor(&["reproduce", "--figure", "4"]));
    assert_eq!(v["product_identity"]["holds"], true);
    assert_eq!(v["unoriented_charpoly"]["display"], "x^5 - x^4 - 3x^3 - x^2 + 3x + 1");
}

#[test]
fn reproduce_reads_a_fixture_directory() {
    let dir = tempfile::tempdir().unwrap();
    let good = arbor::figures::builtin_text("1f").unwrap();
    std::fs::write(dir.path().join("fig1f.txt"), good).unwrap();
    // a transcription error in the caption must be reported, not hidden
    let bad = good.replace("unoriented_charpoly -1", "unoriented_charpoly 1");
    assert_ne!(bad, good);
    std::fs::write(dir.path().join("fig1e.txt"), bad.replace("figure 1f", "figure 1e")).unwrap();
    let d = dir.path().to_str().unwrap();

    let out = arbor(&["reproduce", "--figure", "1f", "--fixtures", d]);
    assert_eq!(out.status.code(), Some(0));
    let out = arbor(&["reproduce", "--figure", "1e", "--fixtures", d]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_valid(&v);
    assert_eq!(v["caption_match"], false);
    let out = arbor(&["reproduce", "--figure", "1a", "--fixtures", d]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["kind"], "FixtureMissing");
}

#[test]
fn search_detmf_outputs() {
    let out = arbor(&["search-detmf", "--n", "2..5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_valid(&v);
    assert_eq!(v["all_odd"], true);

    let out = arbor(&["search-detmf", "--n", "2..6", "--paths-only"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for row in v["per_n"].as_array().unwrap() {
        assert_eq!(row["histogram"].as_array().unwrap().len(), 1);
        assert_eq!(row["histogram"][0]["abs_det"], "1");
        assert_eq!(row["all_petrie"], true);
    }

    let args = ["search-detmf", "--n", "4..6", "--sample-budget", "50", "--seed", "7"];
    let a = arbor(&args);
    let b = arbor(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["per_n"][2]["sampled"], true);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = arbor(&["reproduce", "--figure", "2a", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["figure"], "2a");
}
