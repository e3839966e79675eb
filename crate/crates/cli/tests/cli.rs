use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weakhopf"))
        .args(args)
        .env_remove("WEAKHOPF_DEGREE_BOUND")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn classify_lists_the_seven_orbits() {
    let (code, out, _) = run(&["classify", "--n", "3", "--list-orbits"]);
    assert_eq!(code, 0);
    assert!(out.contains("d = 0, {1,2,4,8}, {3,12}, {5,10}, {6,9}, {7,11,13,14}, 15"), "{out}");
}

#[test]
fn verify_all_passes_on_wsl_2_3() {
    let (code, out, _) = run(&["verify", "--algebra", "wsl:2:3", "--checks", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn json_is_versioned_and_reproducible() {
    let args = ["verify", "--algebra", "wsl:2:1", "--seed", "7", "--format", "json"];
    let (code, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 7);
}

#[test]
fn failing_checks_exit_with_one() {
    let (code, out, _) = run(&["isocheck", "--map", "sec5-psi", "--weak-hopf"]);
    assert_eq!(code, 1);
    assert!(out.contains("PASS psi[3:10->9] algebra-hom"));
    assert!(out.contains("FAIL psi[3:10->9] consistency-coproduct"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["verify", "--algebra", "wsl:2:9"]).0, 2);
    assert_eq!(run(&["verify", "--algebra", "wsl:2:1", "--checks", "nope"]).0, 2);
    assert_eq!(run(&["classify"]).0, 2);
    assert_eq!(run(&["sweedler", "--alpha", "x/0"]).0, 2);
}

#[test]
fn isocheck_lifts_and_slice() {
    for args in [
        &["isocheck", "--map", "omega", "--n", "2", "--d", "1", "--weak-hopf"][..],
        &["isocheck", "--map", "rho", "--n", "3", "--d", "6", "--weak-hopf"],
        &["isocheck", "--map", "slice", "--n", "3", "--d", "10", "--format", "text"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {out}{err}");
    }
}

#[test]
fn repro_single_criterion() {
    let (code, out, _) = run(&["repro", "--criterion", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["criteria"][0]["id"], 1);
    assert_eq!(run(&["repro", "--criterion", "14"]).0, 2);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("weakhopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, out, _) = run(&["sweedler", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "sweedler");
    std::fs::remove_dir_all(dir).ok();
}
