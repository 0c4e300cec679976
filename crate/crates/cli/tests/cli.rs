use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringchar"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap().trim_end().to_string()
}

#[test]
fn lpoly_of_the_five_vertex_walk() {
    let out = stdout(&[
        "lpoly",
        &fixture("ex13.quiver"),
        "--walk",
        "delta^-1 beta gamma",
    ]);
    let expected: stringchar::laurent::LaurentPoly =
        "x[5]^2 x[2]^-1 + x[1] x[5] x[3]^-1 + x[1] x[5]^2 x[2]^-1 x[3]^-1 x[4]^-1 + x[1] x[5]^2 x[3]^-2 x[4]^-1 \
         + 2 * x[1] x[2] x[5] x[3]^-2 + x[1] x[2]^2 x[4] x[3]^-2"
            .parse()
            .unwrap();
    assert_eq!(out, expected.to_string());
    let js = stdout(&[
        "lpoly",
        &fixture("ex13.quiver"),
        "--walk",
        "delta^-1 beta gamma",
        "--json",
    ]);
    let back: stringchar::laurent::LaurentPoly = serde_json::from_str(&js).unwrap();
    assert_eq!(back, expected);
}

#[test]
fn lcount_of_a_trivial_walk() {
    assert_eq!(stdout(&["lcount", "--walk", "e(1)"]), "2");
    assert_eq!(
        stdout(&["lcount", &fixture("a2ice.quiver"), "--walk", "e(1)"]),
        "2"
    );
    assert_eq!(stdout(&["lcount", "--walk", "a b^-1"]), "5");
}

#[test]
fn verify_passes_on_the_cyclic_fixture() {
    let out = stdout(&["verify", &fixture("a3cyclic.quiver"), "--max-length", "4"]);
    let rows: Vec<&str> = out
        .lines()
        .skip(1)
        .filter(|l| !l.contains("passed"))
        .collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.ends_with("PASS")), "{out}");
    assert!(out.ends_with(&format!("{0}/{0} passed", rows.len())));
}

#[test]
fn characters_and_normalisation() {
    let q = fixture("a2ice.quiver");
    assert_eq!(
        stdout(&["character", &q, "--string", "alpha"]),
        "x[2]^-1 + x[1]^-1 + x[1]^-1 x[2]^-1 x[3]"
    );
    assert_eq!(
        stdout(&["normalise", &q, "--string", "alpha"]),
        r#"{"1":0,"2":0,"3":1}"#
    );
    assert_eq!(
        stdout(&["chi", &q, "--string", "alpha"]),
        "0 1\n1:1,2:1 1\n2:1 1"
    );
    assert_eq!(
        stdout(&["chi", &q, "--string", "alpha", "--dimvec", "1:1"]),
        "0"
    );
    assert_eq!(
        stdout(&["match", &q, "--string", "alpha", "--depth", "4"])
            .lines()
            .last(),
        Some("found")
    );
    let e = stdout(&["euler", &q, "--lhs", "e(1)", "--rhs", "e(2)"]);
    assert!(e.starts_with("truncated "), "{e}");
}

#[test]
fn enumerate_type_a2() {
    let out = stdout(&["enumerate", &fixture("a2ice.quiver"), "--depth", "6"]);
    assert_eq!(out.lines().count(), 5);
    let js = stdout(&[
        "enumerate",
        &fixture("a2ice.quiver"),
        "--depth",
        "6",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "enumerate",
        &fixture("d4cyclic.quiver"),
        "--depth",
        "8",
        "--json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    let o = run(&[
        "lpoly",
        &fixture("ex13.quiver"),
        "--walk",
        "beta",
        "--frobnicate",
    ]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["lpoly", &fixture("ex13.quiver"), "--walk", "beta ^"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("--walk:1:6:"));

    let bad = std::env::temp_dir().join("stringchar-cli-bad.quiver");
    std::fs::write(&bad, "vertex 1\nvertex 2\narrow a 1 => 2\n").unwrap();
    let o = run(&["lpoly", bad.to_str().unwrap(), "--walk", "a"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":3:"));

    let o = run(&[
        "character",
        &fixture("a2ice.quiver"),
        "--string",
        "alpha beta",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("NotAString"));

    let o = run(&["character", &fixture("a2ice.quiver"), "--string", "beta"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("UnfrozenViolation"));

    let o = run(&[
        "chi",
        &fixture("a2ice.quiver"),
        "--string",
        "alpha",
        "--dimvec",
        "1:x",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
