use std::io::Write;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

fn adelic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adelic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const E5: &str = "E/GF(5):a4=4,a6=0";

/// A setup file in the temp directory, removed on drop.
struct SetupFile(std::path::PathBuf);

static NEXT: AtomicUsize = AtomicUsize::new(0);

fn setup_file(body: &str) -> SetupFile {
    let n = NEXT.fetch_add(1, Ordering::Relaxed);
    let p = std::env::temp_dir().join(format!("adelic-cli-{}-{n}.txt", std::process::id()));
    std::fs::File::create(&p).unwrap().write_all(body.as_bytes()).unwrap();
    SetupFile(p)
}

impl SetupFile {
    fn as_str(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for SetupFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

const Z4: &str = "# Z/4 with the product pairing\nA: 4\nN: 4\npair: 1\nB:\nC: 2\nB':\nC': 2\n";

#[test]
fn weil_methods_agree_on_two_torsion() {
    for method in ["adelic", "miller"] {
        let o = adelic(&["weil", "--curve", E5, "--m", "2", "--D", "(0,0)-O", "--Dp", "(1,0)-O", "--method", method]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert_eq!(stdout(&o).lines().last(), Some("4 (order 2)"), "{method}");
    }
}

#[test]
fn disjoint_method_needs_disjoint_supports() {
    let o = adelic(&["weil", "--curve", E5, "--m", "2", "--D", "(0,0)-O", "--Dp", "(1,0)-O", "--method", "disjoint"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("share O"));
    // (1,0) - O ~ (4,0) - (0,0), since (0,0) + (1,0) + (4,0) = O
    let o =
        adelic(&["weil", "--curve", E5, "--m", "2", "--D", "(1,0)-O", "--Dp", "(4,0)-(0,0)", "--method", "disjoint"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let adel = adelic(&["weil", "--curve", E5, "--m", "2", "--D", "(1,0)-O", "--Dp", "(4,0)-(0,0)"]);
    assert_eq!(stdout(&o).lines().last(), stdout(&adel).lines().last());
}

#[test]
fn tame_symbol_at_a_rational_place() {
    let o = adelic(&["tame", "--curve", "P1/GF(5)", "--f", "t", "--g", "t", "--place", "(t)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("4"));
}

#[test]
fn reciprocity_lists_places_then_product() {
    let o = adelic(&["reciprocity", "--curve", "P1/GF(5)", "--f", "t^2+2", "--g", "t-1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().last(), Some("1"));
    assert!(out.lines().any(|l| l.starts_with("(t^2+2) ")));
}

#[test]
fn riemann_roch_of_three_origin() {
    let o = adelic(&["rr", "--curve", E5, "--D", "3*O"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("h0=3 h1=0 deg=3 g=1"));
}

#[test]
fn torsion_certificate_and_failure() {
    let o = adelic(&["torsion", "--curve", E5, "--D", "(0,0)-O", "--m", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "x");
    let o = adelic(&["torsion", "--curve", "E/GF(7):a4=0,a6=2", "--D", "(0,3)-O", "--m", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not 2-torsion"));
}

#[test]
fn commutator_of_two_exceptions() {
    let o = adelic(&["commutator", "--curve", "P1/GF(5)", "--a", "tail=1; (t)=>t", "--b", "tail=1; (t+4)=>t+4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("4"));
}

#[test]
fn biext_commands_on_z4() {
    let f = setup_file(Z4);
    let o = adelic(&["biext", "validate", "--setup", f.as_str()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = adelic(&["biext", "weil", "--setup", f.as_str(), "--a", "1", "--ap", "1", "--m", "2"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = adelic(&["biext", "weil", "--setup", f.as_str(), "--a", "1", "--ap", "1", "--m", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = adelic(&["biext", "check", "--setup", f.as_str()]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn biext_validate_fails_with_a_witness() {
    let f = setup_file("A: 4\nN: 4\npair: 1\nB:\nC: 1\nB':\nC': 2\n");
    let o = adelic(&["biext", "validate", "--setup", f.as_str()]);
    assert_eq!(o.status.code(), Some(3));
    let all = stdout(&o) + &stderr(&o);
    assert!(all.contains("FAIL"), "{all}");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let o = adelic(&["tame", "--curve", "GF(3)", "--f", "t", "--g", "t", "--place", "(t)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 0"));
    let f = setup_file("A: 4\nN: x\npair: 1\n");
    let o = adelic(&["biext", "validate", "--setup", f.as_str()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 8"));
}

#[test]
fn json_output_carries_exit_code() {
    let o = adelic(&["--format", "json", "weil", "--curve", E5, "--m", "2", "--D", "(0,0)-O", "--Dp", "(1,0)-O"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exit_code"], 0);
    assert_eq!(v["command"], "weil");
    let o = adelic(&["--format", "json", "weil", "--curve", E5, "--m", "10", "--D", "(0,0)-O", "--Dp", "(1,0)-O"]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stderr(&o)).unwrap();
    assert_eq!(v["exit_code"], 3);
    assert!(v["error"].as_str().unwrap().contains("coprime"));
}

#[test]
fn selftest_passes_with_few_samples() {
    let o = adelic(&["--seed", "3", "selftest", "--samples", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}
