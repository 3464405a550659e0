use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use daisylab::canon::{are_isomorphic, canonical_form};
use daisylab::constructions::{Caps, ConstructionLabel};
use daisylab::hgf;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_daisylab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn daisylab")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn assert_schema(name: &str, v: &Value) {
    let path = schema_dir().join(format!("{name}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name} output violates schema: {errors:?}\n{v:#}");
}

fn write_tmp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn construct_to(dir: &tempfile::TempDir, name: &str, args: &[&str]) -> (PathBuf, Value) {
    let p = dir.path().join(name);
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", p.to_str().unwrap(), "--format", "json"]);
    let out = run(&all);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_schema("construct", &v);
    (p, v)
}

#[test]
fn construct_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let (_, v) = construct_to(&dir, "p2.hgf", &["--family", "pg-noncollinear", "--q", "2"]);
    assert_eq!((v["n"].as_u64(), v["edges"].as_u64()), (Some(7), Some(28)));
    assert_eq!(v["density"]["value"], "4/5");

    let (_, v) = construct_to(&dir, "b.hgf", &["--family", "gf-blowup", "--q", "2", "--r", "3", "--N", "5"]);
    assert_eq!((v["n"].as_u64(), v["edges"].as_u64()), (Some(35), Some(3500)));

    let (_, v) = construct_to(&dir, "r2.hgf", &["--family", "pg-recursive", "--q", "2", "--depth", "2"]);
    assert_eq!((v["n"].as_u64(), v["edges"].as_u64()), (Some(49), Some(9800)));

    let (_, v) = construct_to(&dir, "g.hgf", &["--family", "gf-independent", "--q", "3", "--r", "3"]);
    assert_eq!((v["n"].as_u64(), v["edges"].as_u64()), (Some(26), Some(1872)));
}

#[test]
fn construct_stdout_matches_golden() {
    let out = run(&["construct", "--family", "pg-noncollinear", "--q", "2"]);
    assert_eq!(code(&out), 0);
    let got = String::from_utf8(out.stdout).unwrap();
    let want = std::fs::read_to_string(data("p2.hgf")).unwrap();
    let body = |s: &str| s.lines().filter(|l| !l.starts_with("# tool:")).map(str::to_owned).collect::<Vec<_>>();
    assert_eq!(body(&got), body(&want));
    assert!(got.contains("# family: pg-noncollinear"));
}

#[test]
fn construct_respects_caps() {
    let out = run(&["construct", "--family", "pg-recursive", "--q", "2", "--depth", "3", "--max-vertices", "100"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn round_trip_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let (p, _) = construct_to(&dir, "b.hgf", &["--family", "gf-blowup", "--q", "2", "--r", "3", "--N", "2"]);
    let doc = hgf::read_file(&p).unwrap();
    let label = ConstructionLabel::gf_blowup(3, 2, 2);
    let direct = label.build(&Caps::default()).unwrap();
    assert_eq!(doc.hypergraph, direct);
    assert_eq!(doc.comments, label.comments());
    let again = hgf::parse(&hgf::write(&doc.hypergraph, &doc.comments)).unwrap();
    assert_eq!(again, doc);
    assert_eq!(
        canonical_form(&doc.hypergraph).hypergraph,
        canonical_form(&direct).hypergraph
    );
    assert!(are_isomorphic(&doc.hypergraph, &direct));
}

#[test]
fn certify_exit_codes() {
    let p2 = data("p2.hgf");
    let p2 = p2.to_str().unwrap();

    let out = run(&["certify", p2, "--daisy", "3,4"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_schema("certify", &v);
    assert_eq!(v["verdict"], true);
    assert!(v["witness"].is_null());

    let out = run(&["certify", p2, "--daisy", "3,3"]);
    assert_eq!(code(&out), 1);
    let v = json_of(&out);
    assert_schema("certify", &v);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["S"].as_array().unwrap().len(), 1);
    assert_eq!(v["witness"]["clique"].as_array().unwrap().len(), 3);

    let out = run(&["certify", p2, "--links-partite", "3", "--certificates"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_schema("certify", &v);
    assert_eq!(v["colorings"].as_array().unwrap().len(), 7);

    let out = run(&["certify", p2, "--links-clique", "4"]);
    assert_eq!(code(&out), 0);
    assert_schema("certify", &json_of(&out));
}

#[test]
fn malformed_input_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_tmp(&dir, "bad.hgf", "3 3\n0 1 5\n");
    let out = run(&["certify", bad.to_str().unwrap(), "--daisy", "3,3"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let missing = dir.path().join("nope.hgf");
    let out = run(&["stats", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    let out = run(&["certify", data("p2.hgf").to_str().unwrap(), "--daisy", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn formulas_t3() {
    let out = run(&["formulas", "--t", "3", "--r", "3"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_schema("formulas", &v);
    assert_eq!(v["link_lower"]["value"], "1/2");
    assert_eq!(v["codeg_lower"]["value"], "4/7");
    assert_eq!(v["t_minus_1_prime_power"], true);

    let out = run(&["formulas", "--t", "3", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("quantity,value,decimal\n"));
    assert!(text.contains("codeg_lower,4/7,"));
}

#[test]
fn stats_on_blowup() {
    let dir = tempfile::tempdir().unwrap();
    let (p, _) = construct_to(&dir, "b.hgf", &["--family", "gf-blowup", "--q", "2", "--r", "3", "--N", "5"]);
    let out = run(&["stats", p.to_str().unwrap(), "--t", "4"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_schema("stats", &v);
    assert_eq!(v["delta_plus"], 20);
    assert_eq!(v["codegree_bound"]["holds"], true);

    let out = run(&["stats", p.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 36);
}

#[test]
fn partition_and_audit() {
    let p2 = data("p2.hgf");
    let p2 = p2.to_str().unwrap();
    let out = run(&["partition", p2, "--x", "0", "--t", "3"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_schema("partition", &v);
    assert_eq!(v["cross_edges"], 12);
    assert_eq!(v["l2_balance"]["value"], "1/147");

    let out = run(&["partition", p2, "--x", "0", "--t", "3", "--mode", "heuristic", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    assert_schema("partition", &json_of(&out));

    let out = run(&["audit", p2, "--t", "3", "--claims"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_schema("audit", &v);
    assert_eq!(v["phi_identity"]["ok"], true);
    assert_eq!(v["claims"]["all_pass"], true);

    let out = run(&["partition", p2, "--x", "9", "--t", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn search_with_oracle() {
    let out = run(&["search", "--mode", "daisy", "--t", "3", "--n", "5", "--oracle"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_schema("search", &v);
    assert_eq!(v["optimum"], 5);
    assert_eq!(v["complete"], true);
    assert_eq!(v["oracle"]["agree"], true);

    let out = run(&["--threads", "2", "search", "--mode", "link-partite", "--t", "3", "--n", "6"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_schema("search", &v);
    assert_eq!(v["optimum"], 16);
}
