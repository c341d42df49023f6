use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn mla(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mla"))
        .args(args)
        .env_remove("MLA_CATALOG_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_dihedral_algebra() {
    let o = mla(&["verify", &fixture("d4.mla")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid multiplicative Lie algebra\n");
}

#[test]
fn verify_reports_violations_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mla");
    // Z2 with x*x = x breaks x*x = 1.
    std::fs::write(&bad, "mla-kit v1\nkind mla\norder 2\nmul\n0 1\n1 0\nstar\n0 0\n0 1\n").unwrap();
    let o = mla(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("M1"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn syntax_errors_exit_2_with_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mla");
    std::fs::write(&bad, "mla-kit v1\nkind group\norder 2\nmul\n0 1 0\n1 0 1\n").unwrap();
    let o = mla(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(mla(&["frobnicate"]).status.code(), Some(2));
    let o = mla(&["extract", "--ext", &fixture("d4-ext.doc")]);
    assert_eq!(o.status.code(), Some(2), "mode is required");
}

#[test]
fn cohomology_of_z2_by_z2() {
    let z2 = fixture("z2.mla");
    let o = mla(&["cohomology", "--k", &z2, "--h", &z2, "--twist", "trivial", "--mode", "center"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).lines().any(|l| l == "|H2| 2"));
}

#[test]
fn budget_exceeded_exits_3() {
    let z2 = fixture("z2.mla");
    let o = mla(&[
        "cohomology", "--k", &z2, "--h", &z2, "--mode", "center", "--budget", "1",
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn extract_matches_the_golden_factor_system() {
    let o = mla(&[
        "extract",
        "--ext",
        &fixture("d4-ext.doc"),
        "--section",
        &fixture("d4-section.doc"),
        "--mode",
        "center",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("d4-fs-center.doc")).unwrap());
}

#[test]
fn realize_then_extract_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let ext = dir.path().join("e.doc");
    let o = mla(&["realize", &fixture("d4-fs-center.doc"), "--out", ext.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = mla(&["extract", "--ext", ext.to_str().unwrap(), "--mode", "center"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("d4-fs-center.doc")).unwrap());
}

#[test]
fn realized_extension_is_equivalent_to_the_original() {
    let dir = tempfile::tempdir().unwrap();
    let ext = dir.path().join("e.doc");
    mla(&["realize", &fixture("d4-fs-center.doc"), "--out", ext.to_str().unwrap()]);
    let o = mla(&["equiv", &fixture("d4-ext.doc"), ext.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("mla-kit v1\nkind map\n"));
}

#[test]
fn baer_sum_of_an_extension_with_itself() {
    let o = mla(&["baer", &fixture("d4-ext.doc"), &fixture("d4-ext.doc"), "--factor-system"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("mla-kit v1\nkind fs-center\n"));
}

#[test]
fn classify_writes_one_extension_per_class() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = fixture("z2.mla");
    let o = mla(&[
        "classify", "--k", &z2, "--h", &z2, "--mode", "center", "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for i in 0..2 {
        assert!(dir.path().join(format!("class-{i}.ext")).exists());
    }
    assert!(!dir.path().join("class-2.ext").exists());
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let (k, h) = (fixture("d4-quotient.mla"), fixture("z2.mla"));
    let run = |jobs: &str| {
        let o = mla(&[
            "--jobs", jobs, "cohomology", "--k", &k, "--h", &h, "--mode", "center", "--twist", "1",
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        o.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn atlas_fills_the_catalog_once() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().to_str().unwrap();
    let first = mla(&["atlas", "--mode", "center", "--catalog", cat]);
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    let n = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(n, stdout(&first).lines().count());
    let second = mla(&["atlas", "--mode", "center", "--catalog", cat]);
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), n);
}

#[test]
fn selftest_runs_a_single_criterion() {
    let o = mla(&["selftest", "--only", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("criterion 5 [PASS]"));
}
