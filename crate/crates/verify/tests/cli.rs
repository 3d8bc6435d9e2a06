use std::fs;
use std::process::{Command, Output};

use biharm_algebra::catalog::{entry, MANIFEST_TEXT};
use biharm_algebra::poly::{rat, VarId};
use biharm_algebra::sweep::SweepReport;

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("verify-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn small_resultants() {
    let path = temp_file("small.txt", "g1 := k - 2\ng2 := k - 5\ng3 := k^2 - 1\ng4 := k - 1\n");
    let o = verify(&["resultant", "--manifest", &path, "--a", "g1", "--b", "g2", "--var", "k"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("-3"));
    let o = verify(&["resultant", "--manifest", &path, "--a", "g3", "--b", "g4", "--var", "k"]);
    assert_eq!(stdout(&o).lines().next(), Some("0"));
}

#[test]
fn embedded_p_q_resultant() {
    let o = verify(&[
        "resultant", "--a", "P", "--b", "Q", "--var", "k", "--set", "m=7", "--set", "r=4", "--set", "c=1",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    let res = biharm_algebra::expr::parse_poly(out.lines().next().unwrap()).unwrap();
    assert_eq!(res.variables(), vec![VarId::F]);
    assert_eq!(res.degree(VarId::F), 9);
    let closed = entry("CoefF3")
        .evaluate(&[(VarId::M, rat(7)), (VarId::R, rat(4)), (VarId::C, rat(1))])
        .unwrap();
    let got = res.coefficient(VarId::F, 3).as_constant().unwrap() * rat(4096);
    assert_eq!(got, closed);
    assert!(out.contains("# degree 9 in f"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(verify(&["check", "no-such-check"]).status.code(), Some(2));
    assert_eq!(verify(&["sweep", "--m", "4..31"]).status.code(), Some(2));
    assert_eq!(verify(&["sweep", "--c", "2"]).status.code(), Some(2));
    assert_eq!(verify(&["resultant", "--a", "P", "--b", "nope", "--var", "k"]).status.code(), Some(2));
    let bad = temp_file("bad.txt", "a := b\n");
    assert_eq!(
        verify(&["resultant", "--manifest", &bad, "--a", "a", "--b", "a", "--var", "k"]).status.code(),
        Some(2)
    );
}

#[test]
fn nonic_check_reports_coefficients() {
    let o = verify(&["check", "nonic"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("nonic: pass"));
    for c in ["14386462720", "356598824960", "2331746708480", "42758681977200", "151265495839500"] {
        assert!(out.contains(c), "{c}");
    }
}

#[test]
fn res_pq_check_as_json() {
    let o = verify(&["check", "res-pq", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["name"], "ResPq");
    assert_eq!(v["pass"], true);
    assert!(v["details"].to_string().contains("1474560*c^3"));
}

#[test]
fn sweep_special_case_and_round_trip() {
    let o = verify(&["sweep", "--var", "k", "--m", "7", "--r", "3,4", "--c", "1", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let report: SweepReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.results.len(), 2);
    let special = &report.results[1];
    assert!(special.zero && special.degree.is_none() && special.leading.is_none());
    assert!(!report.results[0].zero);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["results"][1].get("degree").is_none());
    assert_eq!(v["results"][1]["zero"], true);
    assert_eq!(serde_json::from_str::<SweepReport>(&report.to_json()).unwrap(), report);
}

#[test]
fn sweep_in_f_is_all_exceptions() {
    let o = verify(&["sweep", "--var", "f", "--m", "5", "--r", "3", "--c", "1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("m=5 r=3 c=1 var=f zero"));
}

#[test]
fn stable_output_is_deterministic_across_worker_counts() {
    let args = |jobs: &'static str| {
        ["sweep", "--var", "k", "--m", "4..5", "--c", "-1,1", "--stable-output", "--jobs", jobs]
    };
    let one = stdout(&verify(&args("1")));
    let three = stdout(&verify(&args("3")));
    let report: SweepReport = serde_json::from_str(&one).unwrap();
    assert_eq!(report.results.len(), 10);
    assert!(report.exceptions.is_empty());
    // The config echo carries the worker count; everything else matches.
    assert_eq!(one.replace("\"jobs\": 1", "\"jobs\": 3"), three);
}

#[test]
fn export_manifest() {
    let o = verify(&["export-manifest"]);
    assert_eq!(stdout(&o), MANIFEST_TEXT);
    let dir = std::env::temp_dir().join(format!("verify-export-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.txt");
    assert!(verify(&["export-manifest", path.to_str().unwrap()]).status.success());
    assert_eq!(fs::read_to_string(&path).unwrap(), MANIFEST_TEXT);
}
