use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/examples").join(name)
}

fn g2star(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2star")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("g2star-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn check_passes_on_bundled_example() {
    let o = g2star(&["check", data("type1_hol5.lie").to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("jacobi: pass"));
    assert!(out.contains("parallel 3-form (C1): pass"));
}

#[test]
fn wrong_convention_fails_the_form_check() {
    let f = data("type1_hol5.lie");
    let o = g2star(&["--convention", "C3", "check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("parallel 3-form (C3): FAIL"));
}

#[test]
fn malformed_input_exits_two_with_location() {
    let f = scratch("bad.lie", "convention: C1\nd b1 = b2^b2\n");
    let o = g2star(&["check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.starts_with("error:"), "{err}");
    assert!(err.contains("line 2, column 10"), "{err}");
}

#[test]
fn holonomy_of_seven_dimensional_example() {
    let o = g2star(&["holonomy", data("type1_hol7.lie").to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("dimension: info (7)"));
    assert!(out.contains("𝔰_{1/2}⋉𝔪"));
}

#[test]
fn berger_on_catalog_entry_and_file() {
    let o = g2star(&["berger", "--catalog", "T1.1-a0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Berger: yes"));

    // A semisimple element alone carries no curvature.
    let f = scratch("line.txt", "convention: C2\n# torus element\nb1_1 - b2_2 + 2 b3_3 - 2 b5_5 - b6_6 + b7_7\n");
    let o = g2star(&["berger", "--file", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("Berger: no"));
}

#[test]
fn catalog_show_prints_every_basis_matrix() {
    let o = g2star(&["catalog", "show", "T2.1-sl2"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(out.lines().filter(|l| l.starts_with("basis ")).count(), 8);
}

#[test]
fn unknown_catalog_id_lists_available_ones() {
    let o = g2star(&["catalog", "show", "T9.9"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("T1.1-a0") && err.contains("T2.1-sl2"), "{err}");
}

#[test]
fn examples_all_verify() {
    let o = g2star(&["examples", "run"]);
    let out = stdout(&o);
    assert!(out.contains("7/7 examples pass"), "{out}");
}

#[test]
fn json_output_is_versioned() {
    let o = g2star(&["--json", "classify", "--catalog", "T3.2-a0-k2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["result"]["type"], "III");
    assert_eq!(v["result"]["indecomposable"], "yes");
}

#[test]
fn parameters_reach_the_family() {
    let o = g2star(&["--json", "catalog", "show", "T1.2a", "--param", "lambda=1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["parameters"]["lambda"], "1/2");
}
