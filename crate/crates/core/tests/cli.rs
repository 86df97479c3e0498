use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upper-cluster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn check_reports_certificates() {
    let o = run(&["--json", "check", &fixture("markov2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["acyclic"], false);
    assert_eq!(v["full_rank"], false);
    assert_eq!(v["certificate"], "rank3_nonacyclic");

    let v = json(&run(&["--json", "check", &fixture("rank2_frozen.json")]));
    assert_eq!(v["acyclic"], true);
    assert_eq!(v["certificate"], "full_rank");

    let v = json(&run(&["--json", "check", &fixture("mwp.json")]));
    assert_eq!(v["rank"], 3);
    assert_eq!(v["certificate"], "full_rank");
}

#[test]
fn mutate_twice_is_identity() {
    let seed = std::fs::read_to_string(fixture("rank2_frozen.json")).unwrap();
    let seed: serde_json::Value = serde_json::from_str(&seed).unwrap();
    let o = run(&["--json", "mutate", &fixture("rank2_frozen.json"), "1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["matrix"], seed["matrix"]);

    let o = run(&["mutate", &fixture("markov2.json"), "1"]);
    assert!(stdout(&o).contains("x1' = (x2^2 + x3^2)*x1^-1"), "{}", stdout(&o));
}

#[test]
fn bad_input_exits_one() {
    let o = run(&["check", "/nonexistent/seed.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));

    let o = run(&["mutate", &fixture("markov2.json"), "4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn present_without_iterations_is_incomplete() {
    let o = run(&["present", &fixture("markov2.json"), "--max-iters", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn present_markov_is_deterministic() {
    let a = run(&["--json", "present", &fixture("markov2.json")]);
    let b = run(&["--json", "present", &fixture("markov2.json")]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["status"], "verified_equal_U");
    assert_eq!(v["relations"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_fixture_passes_and_corruption_fails() {
    let o = run(&[
        "verify",
        &fixture("markov2.json"),
        &fixture("markov2_gens.json"),
        &fixture("markov2_relations.json"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("substitution: PASS"));

    let dir = std::env::temp_dir().join(format!("upper-cluster-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("relations.json");
    std::fs::write(&bad, r#"{"relations": ["x1*x2*x3*M - x1^2 - x2^2 + x3^2"]}"#).unwrap();
    let o = run(&[
        "verify",
        &fixture("markov2.json"),
        &fixture("markov2_gens.json"),
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    assert!(stdout(&o).contains("substitution: FAIL"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn laurent_fuzz_finds_no_violations() {
    let o = run(&[
        "--json",
        "laurent-fuzz",
        &fixture("markov2.json"),
        "--max-len",
        "6",
        "--trials",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["trials"], 100);
}
