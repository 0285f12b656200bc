//! End-to-end tests of the command-line interface and the `.lie` format.

use std::io::Write;
use std::process::Command;

fn lieko(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lieko"))
        .args(args)
        .output()
        .expect("spawn lieko");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("lieko-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

#[test]
fn betti_of_abelian_four() {
    let path = write_temp("abelian4.lie", "field Q\ndim 4\n");
    let (code, stdout, _) = lieko(&["betti", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1 4 6 4 1");
}

#[test]
fn check_reports_heisenberg() {
    let path = write_temp(
        "heis.lie",
        "field Q\ndim 3\nnames x y z\nbracket 1 2 = 1*3\n",
    );
    let (code, stdout, _) = lieko(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("nilpotent: true (length 2)"), "{stdout}");
}

#[test]
fn invalid_file_exits_2() {
    let path = write_temp("bad.lie", "field Q\ndim 2\nbracket 1 1 = 1*2\n");
    let (code, _, stderr) = lieko(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("diagonal"), "{stderr}");
    // jacobi failure is also an input error
    let path = write_temp(
        "nojacobi.lie",
        "field Q\ndim 3\nbracket 1 2 = 1*3\nbracket 1 3 = 1*1\n",
    );
    let (code, _, stderr) = lieko(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("Jacobi"), "{stderr}");
}

#[test]
fn koszul_on_emitted_g12() {
    let (code, g12, _) = lieko(&["catalog", "emit", "g12"]);
    assert_eq!(code, 0);
    let path = write_temp("g12.lie", &g12);
    let (code, stdout, _) = lieko(&["koszul", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("reduced Koszul rank: 1"), "{stdout}");
    assert!(stdout.contains("dim Kill: 5"), "{stdout}");
    // weight-restricted query on the torsion grading
    let (code, stdout, _) = lieko(&["koszul", path.to_str().unwrap(), "--weight", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("reduced Koszul rank: 0"), "{stdout}");
}

#[test]
fn catalog_list_shows_everything() {
    let (code, stdout, _) = lieko(&["catalog", "list"]);
    assert_eq!(code, 0);
    for name in ["g12", "solvable9", "char3_octonion", "w(a1+a2+...)"] {
        assert!(stdout.contains(name), "{stdout}");
    }
}

#[test]
fn deterministic_output() {
    let (c1, out1, _) = lieko(&["catalog", "emit", "solvable9"]);
    let (c2, out2, _) = lieko(&["catalog", "emit", "solvable9"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);
    let path = write_temp("sol9.lie", &out1);
    let (_, b1, _) = lieko(&["betti", path.to_str().unwrap(), "--up-to", "3"]);
    let (_, b2, _) = lieko(&["betti", path.to_str().unwrap(), "--up-to", "3"]);
    assert_eq!(b1, b2);
}

#[test]
fn forms_and_quadrable() {
    let (_, heis, _) = lieko(&["catalog", "emit", "heisenberg(3)"]);
    let path = write_temp("heis_cat.lie", &heis);
    let (code, stdout, _) = lieko(&["forms", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("dim invariant symmetric forms: 3"),
        "{stdout}"
    );
    let (code, stdout, _) = lieko(&["quadrable", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("degenerate-certified"), "{stdout}");
}

#[test]
fn kill_filtration_output() {
    let (_, fil, _) = lieko(&["catalog", "emit", "filiform(5)"]);
    let path = write_temp("fil5.lie", &fil);
    let (code, stdout, _) = lieko(&["kill", path.to_str().unwrap(), "--filtration", "5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("dim Kill: 3"), "{stdout}");
    assert!(stdout.contains("dim Kill^(3): 0"), "{stdout}");
}

#[test]
fn current_h2_json() {
    let (_, l2, _) = lieko(&["catalog", "emit", "coadjoint(sl2)"]);
    let path = write_temp("coad.lie", &l2);
    let (code, stdout, _) = lieko(&[
        "current-h2",
        "--ring",
        "truncated Q 2",
        path.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(code, 0, "{stdout}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["hh1"], 1);
    assert_eq!(v["hc1"], 0);
    assert_eq!(v["identities_ok"], true);
    // human-readable variant carries the same verdict
    let (code, stdout, _) = lieko(&[
        "current-h2",
        "--ring",
        "truncated Q 2",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("HH1(A) = 1, HC1(A) = 0"), "{stdout}");
    assert!(
        stdout.contains("corollary identities: all hold"),
        "{stdout}"
    );
}

#[test]
fn verify_paper_single_section_and_bad_tag() {
    let (code, stdout, _) = lieko(&["verify-paper", "--only", "nonredu"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("4/4 checks passed"), "{stdout}");
    let (code, _, stderr) = lieko(&["verify-paper", "--only", "nosuch"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown section"), "{stderr}");
    // machine-readable variant
    let (code, stdout, _) = lieko(&["verify-paper", "--only", "nonredu", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["sections"][0]["tag"], "nonredu");
}

#[test]
fn betti_weight_restriction() {
    let (_, sol, _) = lieko(&["catalog", "emit", "solvable9"]);
    let path = write_temp("sol9w.lie", &sol);
    let (code, total, _) = lieko(&["betti", path.to_str().unwrap(), "--up-to", "2"]);
    assert_eq!(code, 0);
    let (code, w10, _) = lieko(&[
        "betti",
        path.to_str().unwrap(),
        "--up-to",
        "2",
        "--weight",
        "1,0",
    ]);
    assert_eq!(code, 0);
    // the weight-(1,0) component sees no degree-0 chains at all
    assert_ne!(total, w10);
    assert!(w10.trim_start().starts_with('0'), "{w10}");
}
