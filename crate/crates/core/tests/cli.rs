//! The command-line binary: reports, exit codes and determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn genus2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genus2")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// A fresh scratch directory under the system temp dir.
fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("genus2-cli-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn verify_all_passes_and_reports_counts() {
    let o = genus2(&["verify-all"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    for n in ["W0 has 20 factors", "W1 has 30 factors", "W2 has 29 factors"] {
        assert!(out.contains(&format!("PASS {n}")), "{n}");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_all_names_a_corrupted_certificate() {
    let dir = scratch("corrupt");
    let d = dir.to_str().unwrap();
    assert_eq!(genus2(&["certificate", "freeze", "--cert-dir", d]).status.code(), Some(0));
    fs::write(dir.join("square_to_cube.cert"), "R 1\n").unwrap();
    let o = genus2(&["verify-all", "--cert-dir", d]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL certificate square_to_cube"), "{out}");
    assert!(out.contains("PASS certificate sigma_exchange"));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reduce_reports_stable_forms() {
    let dir = scratch("reduce");
    let w2 = write(&dir, "w2.fact", "W2\n");
    let o = genus2(&["reduce", &w2]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("m: 1\n") && out.contains("k: 0\n") && out.contains("epsilon: 0\n"), "{out}");
    assert!(dir.join("w2.fact.cert").exists());

    let mixed = write(&dir, "mixed.fact", "W0 W1\n");
    let cert = dir.join("mixed.cert");
    let o = genus2(&["reduce", &mixed, "--out", cert.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(out.contains("m: 0\n") && out.contains("k: 1\n") && out.contains("epsilon: 1\n"), "{out}");
    assert!(out.contains("conserved: true"));
    assert!(cert.exists());
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reduce_rejects_non_identity_with_two() {
    let dir = scratch("bad");
    let f = write(&dir, "bad.fact", "W0\nz2\n");
    let o = genus2(&["reduce", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("S6 image"));
    let unparsable = write(&dir, "junk.fact", "z7\n");
    assert_eq!(genus2(&["reduce", &unparsable]).status.code(), Some(2));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn equal_exit_codes() {
    assert_eq!(genus2(&["equal", "(z1 z2)^6", "sigma"]).status.code(), Some(0));
    assert_eq!(genus2(&["equal", "z1", "z2"]).status.code(), Some(1));
    assert_eq!(genus2(&["equal", "I", "1"]).status.code(), Some(1));
    assert_eq!(genus2(&["equal", "--mod-center", "I", "1"]).status.code(), Some(0));
    assert_eq!(genus2(&["equal", "z1 (", "z2"]).status.code(), Some(2));
    assert_eq!(genus2(&["equal", "--braid", "x1 x2 x3 x4 x5^2 x4 x3 x2 x1", "1"]).status.code(), Some(0));
    assert_eq!(genus2(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn invariants_of_w0() {
    let dir = scratch("inv");
    let f = write(&dir, "w0.fact", "W0\n");
    let out = stdout(&genus2(&["invariants", &f]));
    assert!(out.contains("factors: 20\n") && out.contains("separating: 0\n") && out.contains("transitive: yes\n"), "{out}");
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn search_finds_a_single_move_and_checks() {
    let dir = scratch("search");
    let f = write(&dir, "f.fact", "T\n");
    let g_text = stdout(&genus2(&["certificate", "replay", &f, &write(&dir, "one.cert", "R 4\n")]));
    let g = write(&dir, "g.fact", &g_text);
    let o = genus2(&["search", &f, &g]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.starts_with("# 1 moves\n"), "{out}");
    let cert = write(&dir, "found.cert", &out);
    assert_eq!(genus2(&["certificate", "check", &f, &cert, &g]).status.code(), Some(0));
    let wrong = write(&dir, "wrong.cert", "L 2\n");
    assert_eq!(genus2(&["certificate", "check", &f, &wrong, &g]).status.code(), Some(1));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn lift_and_scramble_are_deterministic() {
    let dir = scratch("det");
    let b = write(&dir, "b1.braid", "alphabet x\nB1\n");
    let out = stdout(&genus2(&["lift", &b]));
    assert!(out.starts_with("# product: 1\n"), "{out}");
    let w1 = write(&dir, "w1.fact", "W1\n");
    let a = stdout(&genus2(&["scramble", &w1, "--seed", "9"]));
    assert_eq!(a, stdout(&genus2(&["scramble", &w1, "--seed", "9"])));
    assert_ne!(a, stdout(&genus2(&["scramble", &w1, "--seed", "10"])));
    fs::remove_dir_all(&dir).unwrap();
}
