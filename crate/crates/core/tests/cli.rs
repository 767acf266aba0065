use std::fs;
use std::path::Path;
use std::process::Command;

use precubical::cli::run;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("precubical").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn assert_golden(args: &[&str], name: &str) {
    let (code, out, err) = run_args(args);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, golden(name), "output of {args:?} differs from {name}");
}

#[test]
fn json_goldens() {
    assert_golden(&["cohomology", "--builtin", "torus", "--json"], "torus_cohomology.json");
    assert_golden(&["ring-table", "--builtin", "torus", "--json"], "torus_ring_table.json");
    assert_golden(&["cohomology", "--builtin", "klein", "--json"], "klein_cohomology.json");
    assert_golden(&["cohomology", "--builtin", "klein", "--coeff", "Z/2", "--json"], "klein_cohomology_z2.json");
    assert_golden(
        &["cup", "--builtin", "torus", "--p-cochain", "t2:1", "--q-cochain", "t1:1", "--json"],
        "torus_cup.json",
    );
}

#[test]
fn json_is_well_formed() {
    let (_, out, _) = run_args(&["ring-table", "--builtin", "t3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let groups: Vec<&str> = v["groups"].as_array().unwrap().iter().map(|g| g["group"].as_str().unwrap()).collect();
    assert_eq!(groups, ["Z", "Z^3", "Z^3", "Z"]);
}

#[test]
fn torus_cohomology_text() {
    let (code, out, _) = run_args(&["cohomology", "--builtin", "torus"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "H^0 = Z, H^1 = Z^2, H^2 = Z");
    assert_eq!(&lines[1..], ["g0_1 = o", "g1_1 = t1", "g1_2 = t2", "g2_1 = v"]);
}

#[test]
fn torus_cup_signs() {
    let (_, ab, _) = run_args(&["cup", "--builtin", "torus", "--p-cochain", "t2:1", "--q-cochain", "t1:1"]);
    let (_, ba, _) = run_args(&["cup", "--builtin", "torus", "--p-cochain", "t1:1", "--q-cochain", "t2:1"]);
    assert_eq!(ab, "dimension 2: v\nclass: g2_1\n");
    assert_eq!(ba, "dimension 2: -v\nclass: -g2_1\n");
}

#[test]
fn documents_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("torus.txt");
    let (_, doc, _) = run_args(&["export", "--builtin", "torus"]);
    fs::write(&good, &doc).unwrap();
    let path = good.to_str().unwrap();
    let (code, out, _) = run_args(&["cohomology", path]);
    assert_eq!(code, 0);
    assert!(out.starts_with("H^0 = Z, H^1 = Z^2, H^2 = Z\n"));
    let (code, again, _) = run_args(&["export", path]);
    assert_eq!(code, 0);
    assert_eq!(again, doc);

    let dangling = dir.path().join("dangling.txt");
    fs::write(&dangling, "dims:\n  0: o\n  1: t\nfaces:\n  t = [[o, x]]\n").unwrap();
    let (code, _, err) = run_args(&["validate", dangling.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 5, column 12") && err.contains("'x'"), "{err}");

    // Faces exist but break ∂_1∂_2 = ∂_1∂_1.
    let broken = dir.path().join("broken.txt");
    fs::write(
        &broken,
        "dims:\n  0: p q\n  1: a b\n  2: s\nfaces:\n  a = [[p, p]]\n  b = [[q, q]]\n  s = [[a, a], [b, b]]\n",
    )
    .unwrap();
    let (code, out, _) = run_args(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(!out.is_empty());
    let (code, _, err) = run_args(&["cohomology", broken.to_str().unwrap()]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(run_args(&[]).0, 2);
    assert_eq!(run_args(&["cohomology"]).0, 2);
    assert_eq!(run_args(&["cohomology", "x.txt", "--builtin", "torus"]).0, 2);
    assert_eq!(run_args(&["cohomology", "/nonexistent/file"]).0, 2);
    assert_eq!(run_args(&["cohomology", "--builtin", "torus", "--coeff", "Q"]).0, 2);
    assert_eq!(run_args(&["cup", "--builtin", "torus", "--p-cochain", "zz:1", "--q-cochain", "t1:1"]).0, 2);
    assert_eq!(run_args(&["check", "--props", "leibniz", "--trials", "0"]).0, 2);
    assert_eq!(run_args(&["check", "--props", "leibniz", "--max-dim", "4"]).0, 2);
}

#[test]
fn check_command() {
    let (code, out, _) = run_args(&["check", "--props", "leibniz,unit", "--trials", "5", "--seed", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("leibniz: 5 trials, 0 failures"));
    assert!(out.contains("unit: 5 trials, 0 failures"));

    // Report-only properties never fail the run.
    let (code, out, _) = run_args(&["check", "--builtin", "cube2", "--props", "anticommutativity_cochain", "--trials", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("[reported]"));

    let (code, out, _) = run_args(&["check", "--props", "list"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "prop21_identities"));
}

#[test]
fn seeds_are_reproducible() {
    let a = run_args(&["check", "--props", "anticommutativity_cochain", "--trials", "4", "--seed", "9"]).1;
    let b = run_args(&["check", "--props", "anticommutativity_cochain", "--trials", "4", "--seed", "9"]).1;
    let strip = |s: &str| s.lines().map(|l| l.split(", ").take(3).collect::<Vec<_>>().join(", ")).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_precubical");
    let ok = Command::new(bin).args(["validate", "--builtin", "torus"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "valid: cube counts [1, 2, 1]\n");
    let bad = Command::new(bin).args(["validate", "--builtin", "nothing"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let env_seed = Command::new(bin)
        .args(["check", "--props", "unit", "--trials", "1"])
        .env("PRECUBICAL_SEED", "17")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&env_seed.stdout).starts_with("seed 17,"));
}
