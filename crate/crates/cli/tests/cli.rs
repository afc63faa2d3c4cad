use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bieberbach"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = bin(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

fn export(dir: &Path, key: &str) -> String {
    let o = bin(&["catalog", "export", key]);
    assert!(o.status.success());
    let path = dir.join(format!("{key}.json"));
    std::fs::write(&path, &o.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn hw_connectivity_text() {
    let dir = tempfile::tempdir().unwrap();
    let hw = export(dir.path(), "hw");
    let o = bin(&["connective", &hw]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "NOT CONNECTIVE; core = input group; H1 = Z/4 + Z/4"
    );
}

#[test]
fn hw_fixed_torus() {
    let dir = tempfile::tempdir().unwrap();
    let hw = export(dir.path(), "hw");
    let v = json(&["fixed-torus", &hw, "--format", "json"]);
    assert_eq!(v["rank"], "0");
    let pts = v["points"].as_array().unwrap();
    assert_eq!(pts.len(), 8);
    for p in pts {
        for x in p.as_array().unwrap() {
            assert!(x == "0" || x == "1/2");
        }
    }
}

#[test]
fn torus_analysis_json() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = export(dir.path(), "torus_2");
    let v = json(&["analyze", &t2, "--format", "json"]);
    assert_eq!(v["h1"]["rank"], "2");
    assert_eq!(v["connectivity"]["verdict"], true);
    assert_eq!(v["center_rank"], "2");
}

#[test]
fn export_then_analyze_matches_catalog_report() {
    let dir = tempfile::tempdir().unwrap();
    for key in [
        "torus_3",
        "klein_bottle",
        "hw",
        "dim3_c4",
        "dim3_c2c2_connective",
    ] {
        let path = export(dir.path(), key);
        let from_file = json(&["--format", "json", "analyze", &path]);
        let shown = json(&["--format", "json", "catalog", "show", key]);
        assert_eq!(from_file, shown["analysis"], "{key}");
        let again = bin(&["catalog", "export", key]);
        assert_eq!(std::fs::read(&path).unwrap(), again.stdout);
    }
}

#[test]
fn json_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = export(dir.path(), "dim3_c2c2_connective");
    for args in [
        vec!["analyze", &path],
        vec!["decompose", &path],
        vec!["connective", &path, "--certificate"],
        vec!["holonomy", &path, "--primitivity", "--coprime-class"],
        vec!["orbits", &path, "--char", "1/3,1/4,1/2"],
    ] {
        let mut args = args.clone();
        args.extend(["--format", "json"]);
        assert_eq!(bin(&args).stdout, bin(&args).stdout, "{args:?}");
    }
}

#[test]
fn certificate_lists_steps() {
    let dir = tempfile::tempdir().unwrap();
    let path = export(dir.path(), "dim3_c2c2_connective");
    let v = json(&["connective", &path, "--certificate", "--format", "json"]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["chain_length"], "3");
    assert_eq!(v["steps"].as_array().unwrap().len(), 3);
    assert!(v["core"].is_null());
    let text = stdout(&bin(&["decompose", &path]));
    assert!(text.contains("reached the trivial group"));
}

#[test]
fn holonomy_flags() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = export(dir.path(), "dim3_c6");
    let v = json(&[
        "holonomy",
        &c6,
        "--primitivity",
        "--coprime-class",
        "--format",
        "json",
    ]);
    assert_eq!(v["order"], "6");
    assert_eq!(v["primitive"], false);
    assert_eq!(
        v["coprime_class"]["factor_orders"],
        serde_json::json!(["6"])
    );
    let hw = export(dir.path(), "hw");
    let v = json(&["holonomy", &hw, "--primitivity", "--format", "json"]);
    assert_eq!(v["primitive"], true);
    assert!(v.get("coprime_class").is_none());
}

#[test]
fn orbits_and_center() {
    let dir = tempfile::tempdir().unwrap();
    let hw = export(dir.path(), "hw");
    let v = json(&["orbits", &hw, "--char", "1/2,1/2,0", "--format", "json"]);
    assert_eq!(v["index"], "1");
    let v = json(&["orbits", &hw, "--char", "1/3,0,0", "--format", "json"]);
    assert_eq!(v["index"], "2");
    assert_eq!(v["stabilizer"].as_array().unwrap().len(), 2);
    let v = json(&["center", &hw, "--format", "json"]);
    assert_eq!(v["rank"], "0");
    let klein = export(dir.path(), "klein_bottle");
    let v = json(&["h1", &klein, "--format", "json"]);
    assert_eq!(
        (v["rank"].clone(), v["torsion"].clone()),
        ("1".into(), serde_json::json!(["2"]))
    );
}

#[test]
fn validate_reports_torsion() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reflection.json");
    std::fs::write(
        &path,
        r#"{"name":"mirror","dimension":1,"generators":[{"matrix":[[-1]],"translation":["0"]}]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let v = json(&["validate", p, "--format", "json"]);
    assert_eq!(v["torsion_free"], false);
    let o = bin(&["connective", p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("torsion"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (
            "decimal.json",
            r#"{"dimension":1,"generators":[{"matrix":[[1]],"translation":["0.5"]}]}"#,
        ),
        (
            "singular.json",
            r#"{"dimension":1,"generators":[{"matrix":[[2]],"translation":["0"]}]}"#,
        ),
        ("broken.json", r#"{"dimension":1"#),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let o = bin(&["validate", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(o.stdout.is_empty());
    }
    assert_eq!(
        bin(&["h1", "/nonexistent/group.json"]).status.code(),
        Some(2)
    );
    assert_eq!(bin(&["catalog", "show", "nope"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn catalog_list_json() {
    let v = json(&["catalog", "list", "--format", "json"]);
    let keys: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["key"].as_str().unwrap())
        .collect();
    assert!(keys.contains(&"hw") && keys.contains(&"dim3_c2c2_connective"));
    assert_eq!(keys.len(), 11);
}
