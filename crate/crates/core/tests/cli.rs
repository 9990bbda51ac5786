use std::path::Path;
use std::process::Command;

use quasiprob::cli::ScenarioFile;
use quasiprob::rational::half;
use quasiprob::scenarios::{mach_zehnder_cases, mz_atom, mz_counterfactual, pr_box};

fn quasiprob(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quasiprob"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const CASE_1_AND_4: &str = r#"{
  "variables": ["Da", "Db", "D1", "D2"],
  "constraints": [
    {"event": {"D1": 1, "D2": -1}, "value": "1"},
    {"event": {"D1": 1, "D2": 1}, "value": "0"},
    {"event": {"D1": -1, "D2": 1}, "value": "0"},
    {"event": {"D1": -1, "D2": -1}, "value": "0"},
    {"event": {"Da": -1, "Db": 1, "D1": -1, "D2": -1}, "value": "1/2"},
    {"event": {"Da": 1, "Db": -1, "D1": -1, "D2": -1}, "value": "1/2"},
    {"event": {"D1": 1, "D2": -1}, "value": "0"},
    {"event": {"D1": -1, "D2": -1}, "value": "1"}
  ]
}"#;

#[test]
fn builtin_reports() {
    let (code, out, _) = quasiprob(&["builtin", "mz-counterfactual"]);
    assert_eq!(code, 0);
    assert!(out.contains("M* = 3"));
    let (code, out, _) = quasiprob(&["builtin", "pr-box"]);
    assert_eq!(code, 0);
    assert!(out.contains("M* = 2"));
    let (code, out, _) = quasiprob(&["builtin", "lg-chain", "--param", "1,1,-1"]);
    assert_eq!(code, 0);
    assert!(out.contains("M* = 2"));
    let (code, out, _) = quasiprob(&["builtin", "tsirelson"]);
    assert_eq!(code, 0);
    assert!(out.contains("M* = 816/577"));
}

#[test]
fn unknown_builtin_is_an_input_error() {
    let (code, _, err) = quasiprob(&["builtin", "mz-case-12"]);
    assert_eq!(code, 1);
    assert!(err.contains("1..=8"));
    assert_eq!(quasiprob(&["builtin", "nothing"]).0, 1);
}

#[test]
fn viable_on_inconsistent_cases() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c14.json", CASE_1_AND_4);
    let (code, out, _) = quasiprob(&["viable", &f]);
    assert_eq!(code, 2);
    assert!(out.contains("NOT VIABLE"));
    let (code, out, _) = quasiprob(&["solve", &f]);
    assert_eq!(code, 2);
    assert!(out.contains("Infeasible"));
}

#[test]
fn viable_and_bias_on_contexts() {
    let dir = tempfile::tempdir().unwrap();
    let pr = write(
        dir.path(),
        "pr.json",
        &ScenarioFile::from_family(&pr_box()).to_json(),
    );
    let (code, out, _) = quasiprob(&["viable", &pr]);
    assert_eq!(code, 2);
    assert!(out.contains("NOT VIABLE"));
    let (code, out, _) = quasiprob(&["bias", &pr]);
    assert_eq!(code, 0);
    assert!(out.contains("NO BIAS"));

    let c56 = write(
        dir.path(),
        "c56.json",
        &ScenarioFile::from_family(&mach_zehnder_cases(&[5, 6]).unwrap()).to_json(),
    );
    let (code, out, _) = quasiprob(&["bias", &c56, "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "BIAS");
    assert_eq!(v["bias"]["event"], "D1=+1");
    assert_eq!(v["bias"]["value_i"], "1");
    assert_eq!(v["bias"]["value_j"], "1/2");
    let (code, _, err) = quasiprob(&["bias", &write(dir.path(), "c.json", CASE_1_AND_4)]);
    assert_eq!(code, 1);
    assert!(err.contains("contexts"));
}

#[test]
fn conditionals_on_counterfactual() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "mz.json",
        r#"{"builtin": {"name": "mz-counterfactual"}}"#,
    );
    let (code, out, _) = quasiprob(&[
        "condition",
        &f,
        "--target",
        "Da=+1",
        "--given",
        "D1=+1",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let w = quasiprob::solver::minimize_l1(&mz_counterfactual())
        .witness
        .unwrap();
    let alpha = w.mass_of(&mz_atom(1, 1, 1, 1)).unwrap().clone();
    assert_eq!(v["conditionals"][0]["value"], (half() + alpha).to_string());
    assert_eq!(v["conditionals"][0]["proper_range"], true);
    let (code, out, _) = quasiprob(&["condition", &f, "--target", "Db=+1", "--given", "D2=+1"]);
    assert_eq!(code, 2);
    assert!(out.contains("undefined"));
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "bad.json",
        "{\n  \"variables\": [\"X\"\n  \"contexts\": []\n}",
    );
    let (code, _, err) = quasiprob(&["solve", &f]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");
    let (code, _, _) = quasiprob(&["solve", "/nonexistent/file.json"]);
    assert_eq!(code, 1);
}

#[test]
fn round_trip_gives_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let fam = mach_zehnder_cases(&[1, 6]).unwrap();
    let text = ScenarioFile::from_family(&fam).to_json();
    let a = write(dir.path(), "a.json", &text);
    let reread = ScenarioFile::parse(&text).unwrap().to_bundle().unwrap();
    let b = write(
        dir.path(),
        "b.json",
        &ScenarioFile::from_family(reread.as_family().unwrap()).to_json(),
    );
    for cmd in ["solve", "viable", "bias"] {
        let ra = quasiprob(&[cmd, &a, "--format", "json"]);
        let rb = quasiprob(&[cmd, &b, "--format", "json"]);
        assert_eq!(ra, rb, "{cmd}");
    }
}

#[test]
fn json_output_is_byte_stable() {
    let first = quasiprob(&[
        "builtin",
        "mz-detuned",
        "--param",
        "eps=1/100",
        "--format",
        "json",
    ]);
    let second = quasiprob(&[
        "builtin",
        "mz-detuned",
        "--param",
        "eps=1/100",
        "--format",
        "json",
    ]);
    assert_eq!(first, second);
    let keys = [
        "command",
        "scenario",
        "variables",
        "status",
        "mstar",
        "witness",
        "bias",
        "rank",
        "nullity",
        "conditionals",
    ];
    let positions: Vec<usize> = keys
        .iter()
        .map(|k| first.1.find(&format!("\n  \"{k}\":")).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
}
