use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bolalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bolalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn classify_example() {
    let o = bolalg(&[
        "classify", "--sign", "minus", "--x", "5", "--y", "-2", "--z", "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("(0,0,1)") && text.contains("findings: []"),
        "{text}"
    );
    let r = json(&bolalg(&[
        "--format", "json", "classify", "--sign", "minus", "--x", "5", "--y", "-2", "--z", "3",
    ]));
    let w = &r["verdicts"][0]["data"]["witness"];
    assert!(w["b"].is_string() && w["f"].is_string() && w["d"].is_string());
}

#[test]
fn x_class_is_a_finding() {
    let o = bolalg(&[
        "--format", "json", "classify", "--sign", "plus", "--x", "-3/4",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["verdicts"][0]["passed"], true);
    assert_eq!(r["findings"][0]["id"], "iso-x-class");
    assert!(r["findings"][0]["location"]
        .as_str()
        .unwrap()
        .contains("representative"));
}

#[test]
fn family_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("v.json");
    let file = file.to_str().unwrap();
    let o = bolalg(&["family", "--sign", "minus", "--z", "1", "--out", file]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = bolalg(&["verify", file]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    for name in ["lts [pass]", "bol [pass]", "pseudo-derivation [pass]"] {
        assert!(text.contains(name), "{text}");
    }
    // Without --out the file itself goes to stdout.
    let o = bolalg(&["family", "--sign", "minus", "--z", "1"]);
    assert_eq!(o.stdout, std::fs::read(file).unwrap());
}

#[test]
fn verify_lie_and_broken_files() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    };
    // so(3): Lie bracket only.
    let so3 = write(
        "so3.json",
        r#"{"dim": 3, "bilinear": [
            {"i":1,"j":2,"k":3,"c":"1"}, {"i":2,"j":1,"k":3,"c":"-1"},
            {"i":2,"j":3,"k":1,"c":"1"}, {"i":3,"j":2,"k":1,"c":"-1"},
            {"i":3,"j":1,"k":2,"c":"1"}, {"i":1,"j":3,"k":2,"c":"-1"}]}"#,
    );
    let o = bolalg(&["verify", so3.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lie [pass]"));
    // Not skew in the first two arguments.
    let bad = write(
        "bad.json",
        r#"{"dim": 2, "trilinear": [{"i":1,"j":1,"k":1,"l":1,"c":"1"}]}"#,
    );
    let o = bolalg(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
    // Input errors are usage errors.
    let oob = write(
        "oob.json",
        r#"{"dim": 3, "bilinear": [{"i":1,"j":2,"k":5,"c":"1"}]}"#,
    );
    let o = bolalg(&["verify", oob.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside 1..=3"));
    assert_eq!(
        bolalg(&["verify", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors() {
    assert_eq!(
        bolalg(&["bol-check", "--chart", "minus1", "--samples", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bolalg(&["bol-check", "--chart", "minus2", "--samples", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bolalg(&[
            "bol-check",
            "--chart",
            "minus1",
            "--y",
            "1",
            "--samples",
            "5"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        bolalg(&[
            "bol-check",
            "--chart",
            "minus1",
            "--samples",
            "5",
            "--radius",
            "2"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        bolalg(&["classify", "--sign", "sideways"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bolalg(&["classify", "--sign", "plus", "--x", "1/0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bolalg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        bolalg(&["tangent-check", "--chart", "plus1", "--eps", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bol_check_report() {
    let o = bolalg(&[
        "--seed",
        "4",
        "--format",
        "json",
        "bol-check",
        "--chart",
        "plus1",
        "--samples",
        "200",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let at = |k: &str| {
        text.find(&format!("\n  \"{k}\":"))
            .unwrap_or_else(|| panic!("{k} missing"))
    };
    assert!(at("command") < at("inputs") && at("inputs") < at("inputs_digest"));
    assert!(at("inputs_digest") < at("verdicts") && at("verdicts") < at("findings"));
    let r = json(&o);
    let d = &r["verdicts"][0]["data"];
    assert_eq!(d["samples"], 200);
    assert!(d["max_residual"].as_f64().unwrap() < 1e-8);
    assert_eq!(r["findings"], Value::Array(vec![]));
    assert_eq!(r["inputs_digest"].as_str().unwrap().len(), 64);
    let other = json(&bolalg(&[
        "--seed",
        "5",
        "--format",
        "json",
        "bol-check",
        "--chart",
        "plus1",
        "--samples",
        "200",
    ]));
    assert_ne!(r["inputs_digest"], other["inputs_digest"]);
}

#[test]
fn timings_only_on_request() {
    let args = ["--format", "json", "envelope", "--sign", "plus", "--y", "2"];
    let plain = json(&bolalg(&args));
    assert!(plain.get("timings").is_none());
    let mut with = vec!["--timings"];
    with.extend(args);
    let timed = json(&bolalg(&with));
    assert!(timed["timings"].as_array().is_some_and(|t| !t.is_empty()));
}

#[test]
fn envelope_and_isotopy() {
    let o = bolalg(&[
        "envelope", "--sign", "minus", "--x", "2", "--y", "1/2", "--z", "-1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = bolalg(&[
        "--format",
        "json",
        "isotopy-classify",
        "--sign",
        "plus",
        "--x",
        "1",
        "--y",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let r = json(&o);
    assert_eq!(r["verdicts"][0]["data"]["class"], "trivial");
    assert_eq!(r["verdicts"][1]["passed"], true);
    // The -2e2 class is absent from the printed minus list.
    let o = bolalg(&[
        "--format",
        "json",
        "isotopy-classify",
        "--sign",
        "minus",
        "--y",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["findings"][0]["id"], "isotopy-list-minus");
}

#[test]
fn tangent_and_web() {
    let o = bolalg(&["tangent-check", "--chart", "minus2", "--y", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("web.csv");
    let o = bolalg(&[
        "web-sample",
        "--chart",
        "plus2",
        "--y",
        "1",
        "--grid",
        "2",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = std::fs::read_to_string(Path::new(&csv)).unwrap();
    assert_eq!(text.lines().count(), 64 + 1);
    assert!(text.starts_with("a_t,a_u,a_v,b_t,b_u,b_v,ab_t,ab_u,ab_v\n"));
}

#[test]
fn displays_account_for_everything() {
    let o = bolalg(&["--format", "json", "displays"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    let d = &r["verdicts"][0]["data"];
    assert_eq!(
        d["findings"].as_u64().unwrap() as usize,
        r["findings"].as_array().unwrap().len()
    );
    assert_eq!(
        d["displays"],
        d["matched"].as_u64().unwrap() + d["findings"].as_u64().unwrap()
    );
}

#[test]
fn threads_env_is_accepted() {
    let o = Command::new(env!("CARGO_BIN_EXE_bolalg"))
        .env("BOLALG_THREADS", "1")
        .args(["bol-check", "--chart", "minus1", "--samples", "50"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn fixed_seed_runs_are_byte_identical() {
    let args = [
        "--seed",
        "9",
        "--format",
        "json",
        "bol-check",
        "--chart",
        "minus2",
        "--y",
        "2",
        "--samples",
        "300",
    ];
    let (a, b) = (bolalg(&args), bolalg(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}
