use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_contactlie"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn export(dir: &TempDir, id: &str) -> PathBuf {
    let out = run(&["catalog", "export", id]);
    assert_eq!(out.status.code(), Some(0));
    write(dir, &format!("{id}.lie"), &stdout(&out))
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    (serde_json::from_slice(&out.stdout).unwrap(), out.status.code().unwrap())
}

fn check<'a>(v: &'a Value, report: usize, name: &str) -> &'a Value {
    v["reports"][report]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name} in {v}"))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

const ITEM1: &str = "dim 5\nbracket [e2,e4] = e1\nbracket [e3,e5] = e1\n";

#[test]
fn item1_contact_with_reeb() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "item1.lie", ITEM1);
    let (v, code) = json(&["check", p(&f), "--form", "e1*"]);
    assert_eq!(code, 0);
    let c = check(&v, 1, "contact");
    assert_eq!(c["verdict"], "pass");
    assert_eq!(c["detail"], "yes");
    assert_eq!(c["payload"]["reeb"], "e1");
}

#[test]
fn abelian_form_is_not_contact() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "ab.lie", "dim 3\n");
    let out = run(&["check", p(&f), "--form", "e1*"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL  contact"));
}

#[test]
fn jacobi_failure_names_triple() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "bad.lie",
        "dim 3\nbracket [e1,e2] = e3\nbracket [e2,e3] = e1\nbracket [e1,e3] = e1\n",
    );
    let (v, code) = json(&["check", p(&f)]);
    assert_eq!(code, 1);
    let c = check(&v, 0, "jacobi");
    assert_eq!(c["verdict"], "fail");
    assert_eq!(c["payload"]["triple"], "(e1,e2,e3)");
}

#[test]
fn parameters_are_substituted_and_constraints_enforced() {
    let dir = TempDir::new().unwrap();
    let f = export(&dir, "dim5.solv.13");
    let (v, code) = json(&["check", p(&f), "--form", "e1* + e4*", "--params", "p=1"]);
    assert_eq!(code, 0, "{v}");
    let (v, code) = json(&["check", p(&f), "--params", "p=0"]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("constraint"));
}

#[test]
fn parameter_dependent_rank_is_undetermined() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "r.lie", "dim 5\nparams p\nbracket [e1,e4] = e1\nbracket [e3,e5] = (p + 1) e3 - 1/2 e2\n");
    let (v, code) = json(&["check", p(&f)]);
    assert_eq!(code, 0, "{v}");
    let c = check(&v, 0, "nilpotent");
    assert_eq!(c["detail"], "undetermined");
    assert!(c["payload"]["reason"].as_str().unwrap().contains("p - 1"));
    let (v, _) = json(&["check", p(&f), "--params", "p=0"]);
    assert_eq!(check(&v, 0, "nilpotent")["detail"], "no");
}

#[test]
fn exists_reports_identically_zero_polynomial() {
    let dir = TempDir::new().unwrap();
    let f = export(&dir, "dim3.r2_id");
    let out = run(&["exists", p(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no (P ≡ 0)"));
}

#[test]
fn exists_finds_heisenberg_witness() {
    let dir = TempDir::new().unwrap();
    let f = export(&dir, "heisenberg.3");
    let (v, code) = json(&["exists", p(&f), "--print-polynomial"]);
    assert_eq!(code, 0);
    assert_eq!(check(&v, 0, "exists")["detail"], "yes");
    assert!(check(&v, 0, "exists")["payload"]["polynomial"].is_string());
    let w = check(&v, 0, "witness");
    assert_eq!(w["verdict"], "pass");
    assert_eq!(w["detail"], "e3*");
}

#[test]
fn exists_frobenius_on_affine_algebra() {
    let dir = TempDir::new().unwrap();
    let f = export(&dir, "gen.aff.2");
    let (v, code) = json(&["exists", p(&f), "--mode", "frobenius"]);
    assert_eq!(code, 0);
    assert_eq!(check(&v, 0, "exists")["detail"], "yes");
    assert_eq!(check(&v, 0, "witness")["verdict"], "pass");
}

#[test]
fn exists_rejects_wrong_parity() {
    let dir = TempDir::new().unwrap();
    let f = export(&dir, "gen.aff.2");
    let out = run(&["exists", p(&f), "--mode", "contact"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd dimension"));
}

#[test]
fn contactize_affine_line_to_sl2() {
    let dir = TempDir::new().unwrap();
    let f = export(&dir, "ext.aff_to_sl2");
    let target = dir.path().join("sl2.lie");
    let (v, code) = json(&["contactize", p(&f), "--form", "e2*", "--s", "1", "--output", p(&target)]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(check(&v, 0, "admissibility")["detail"], "2*s != 0");
    assert_eq!(check(&v, 0, "contact")["payload"]["form"], "e2* + e0*");
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(written, v["emitted"].as_str().unwrap());
    // The result is semisimple: trivial center, perfect.
    let (s, code) = json(&["check", p(&target)]);
    assert_eq!(code, 0);
    assert_eq!(check(&s, 0, "center")["detail"], "dim 0");
    assert_eq!(check(&s, 0, "derived-series")["detail"], "3");
}

#[test]
fn contactize_inadmissible_value_is_input_error() {
    let dir = TempDir::new().unwrap();
    let f = export(&dir, "ext.aff_to_sl2");
    let out = run(&["contactize", p(&f), "--form", "e2*", "--s", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("inadmissible") && err.contains("2*s != 0"), "{err}");
}

#[test]
fn contactize_requires_extension_block() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "h.lie", ITEM1);
    let out = run(&["contactize", p(&f), "--form", "e1*"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn contactize_rejects_broken_cocycle() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "broken.lie",
        "dim 2\nbracket [e1,e2] = e2\nextend psi e2 -> 2 e1\nextend f = e1*\nextend s = 1\n",
    );
    let out = run(&["contactize", p(&f), "--form", "e2*"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cocycle"));
}

#[test]
fn contactize_four_dimensional_example() {
    let dir = TempDir::new().unwrap();
    let f = export(&dir, "ext.r2_sl2");
    let (v, code) = json(&["contactize", p(&f), "--form", "e1*", "--s", "1"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(check(&v, 0, "admissibility")["detail"], "3*s != 0");
    assert_eq!(check(&v, 0, "restricts-to-base")["verdict"], "pass");
    let emitted = v["emitted"].as_str().unwrap();
    assert!(emitted.contains("bracket [e1,e0] = -e2"));
    assert!(emitted.contains("bracket [e4,e0] = -2 e0"));
}

#[test]
fn parse_error_reports_line() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "perr.lie", "dim 3\n# fine\nbracket [e1,e2 = e3\n");
    let out = run(&["check", p(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn missing_file_is_input_error() {
    let out = run(&["check", "/nonexistent/x.lie"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = export(&dir, "dim5.solv.04");
    let args = ["--json", "exists", p(&f), "--print-polynomial"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["--json", "suite", "--filter", "dim=3"]);
    let b = run(&["--json", "suite", "--filter", "dim=3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn suite_passes_on_filtered_catalog() {
    let (v, code) = json(&["suite", "--filter", "prefix=dim5.solv"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    // 24 entries plus the summary.
    assert_eq!(v["reports"].as_array().unwrap().len(), 25);
}

#[test]
fn catalog_list_filters() {
    let (v, code) = json(&["catalog", "list", "--filter", "solvable,dim=5"]);
    assert_eq!(code, 0);
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().all(|e| e["dim"] == 5 && e["solvable"] == true));
    assert!(entries.iter().any(|e| e["id"] == "dim5.solv.24"));
    assert!(!entries.iter().any(|e| e["id"] == "dim5.aff_sl2"));
}

#[test]
fn unknown_catalog_entry_is_input_error() {
    let out = run(&["catalog", "export", "no.such.entry"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exported_entries_reparse() {
    let dir = TempDir::new().unwrap();
    for id in ["dim7.Gt", "dim5.r2_sl2", "specimen.center3"] {
        let f = export(&dir, id);
        let out = run(&["check", p(&f)]);
        assert_eq!(out.status.code(), Some(0), "{id}: {}", stdout(&out));
    }
}
