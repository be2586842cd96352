use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn maxilat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxilat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn seven_map_fails_maxitivity_with_exit_one() {
    let o = maxilat(&["map", "check", &fixture("seven_map.json"), "--pairwise"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("{a,b,c}"), "{text}");
    assert!(text.contains("pairwise maxitive: yes"), "{text}");
}

#[test]
fn poset_check_reports_way_above_sets() {
    let o = maxilat(&["poset", "check", "diamond", "--selection", "upper"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("continuous         yes"));
}

#[test]
fn heyting_arrow_on_the_diamond() {
    let o = maxilat(&["lattice", "arrow", "diamond", "--r", "a", "--s", "⊤"]);
    assert_eq!(stdout(&o), "a ← ⊤ = b\n");
    let o = maxilat(&["lattice", "arrow", "m3", "--r", "a", "--s", "⊤"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn adjoint_of_the_identity_is_the_identity() {
    let o = maxilat(&["map", "adjoint", &fixture("chain_id.json")]);
    assert_eq!(stdout(&o), "w(0) = 0\nw(1) = 1\nw(2) = 2\n");
}

#[test]
fn converse_counterexample_is_reported_not_residuated() {
    let o = maxilat(&[
        "map",
        "residuated",
        &fixture("antichain_map.json"),
        "--ext",
        &fixture("antichain_in_m3.json"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("completely maxitive: yes"));
}

#[test]
fn harness_writes_json_records() {
    let dir = std::env::temp_dir().join(format!("maxilat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("seven.json");
    let o = maxilat(&["harness", "run", "seven-element", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(json[0]["records"][0]["verdict"], "pass");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(maxilat(&["map", "check", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(maxilat(&["harness", "run", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(maxilat(&["map", "frobnicate"]).status.code(), Some(2));
}

#[test]
fn mspace_build_lists_maps() {
    let o = maxilat(&["mspace", "build", "--source", "chain:2", "--target", "chain:2"]);
    assert_eq!(stdout(&o), "3 maxitive maps on (0,1)\n  (0,0)\n  (0,1)\n  (1,1)\n");
}
