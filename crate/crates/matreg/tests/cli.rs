//! Black-box checks of the `matreg` binary: exit codes, file emission, and
//! the cross-method agreement output.

use std::process::Command;

use matreg::io;
use matreg::Matroid;

fn matreg() -> Command {
    Command::new(env!("CARGO_BIN_EXE_matreg"))
}

fn square_file(dir: &std::path::Path) -> std::path::PathBuf {
    let m =
        Matroid::from_bases(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
    let path = dir.join("square.mat");
    std::fs::write(&path, io::write_matroid(&m)).unwrap();
    path
}

#[test]
fn enumerate_emits_parseable_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = matreg()
        .args(["enumerate", "--n", "3", "--emit", "files", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 16);
    for entry in files {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let m = io::parse_matroid(&text).unwrap();
        assert_eq!(m.ground_size(), 3);
    }
}

#[test]
fn reg_methods_agree_on_square() {
    let dir = tempfile::tempdir().unwrap();
    let path = square_file(dir.path());
    let out = matreg()
        .args(["reg", "--t", "2", "--method", "all"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    // reg I^(2) = c(t-1) + r(core) + 1 = 2 + 2 + 1 = 5, by all three methods
    assert_eq!(text.matches(": 5 ").count(), 3, "{text}");
    assert!(!text.contains("agree false"), "{text}");
}

#[test]
fn verify_exit_codes() {
    let ok = matreg()
        .args(["verify", "--suite", "mb", "--exhaustive-n", "3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("suite mb:"));

    let bad = matreg().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn analyze_reports_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let path = square_file(dir.path());
    let out = matreg().arg("analyze").arg(&path).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("c(M) = 2"), "{text}");
    assert!(text.contains("a(M) = 2"), "{text}");
    assert!(text.contains("reg I^(3) = 7"), "{text}");
}
