use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("mixbound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// Every `{num, den}` object in `v` is reduced with a positive denominator.
fn rationals_reduced(v: &Value) -> bool {
    match v {
        Value::Object(m) if m.len() == 2 && m.contains_key("num") && m.contains_key("den") => {
            let (n, d) = (m["num"].as_i64().unwrap(), m["den"].as_i64().unwrap());
            fn gcd(a: i64, b: i64) -> i64 {
                if b == 0 { a.abs() } else { gcd(b, a % b) }
            }
            d > 0 && gcd(n, d) == 1
        }
        Value::Object(m) => m.values().all(rationals_reduced),
        Value::Array(a) => a.iter().all(rationals_reduced),
        _ => true,
    }
}

#[test]
fn analyze_triangle() {
    let out = run(&["analyze", "--prime", "2", "--poly", "u2+u1+u1^3u2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    for key in ["prime", "poly", "support", "hull_vertices", "faces", "newton", "bounds", "notes"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert!(r.get("shape_verdicts").is_none());
    assert_eq!(r["poly"], "u2 + u1 + u1^3*u2");
    assert_eq!(r["bounds"]["lower"], 2);
    assert_eq!(r["bounds"]["upper"], 2);
    assert_eq!(r["bounds"]["exact"], 2);
    assert_eq!(r["faces"].as_array().unwrap().len(), 3);
    let f2 = &r["newton"][1]["extended_norm"];
    assert_eq!(f2["log_u1"], serde_json::json!({"num": 1, "den": 2}));
    assert_eq!(r["newton"][0]["points"][2]["ordinate"], "inf");
    assert!(rationals_reduced(&r));
}

#[test]
fn analyze_four_term_has_note() {
    let out = run(&["analyze", "--prime", "2", "--poly", "1+u1+u2+u2^2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["bounds"]["lower"], 2);
    assert_eq!(r["bounds"]["upper"], 3);
    assert!(r["bounds"]["exact"].is_null());
    let notes = r["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("3-mixing")));
}

#[test]
fn analyze_corpus_reports_are_well_formed() {
    for (p, poly) in [
        ("2", "u1^2+u1u2^2+u2^3+u2"),
        ("2", "u1^6+u1^5u2+u1^3u2^2+u2+u2^3"),
        ("3", "1+2u1^-1+u2^2+u1u2"),
        ("5", "u1^3+u2^3+1"),
        ("7", "1 - u1 + 3*u2^-2"),
    ] {
        let out = run(&["analyze", "-p", p, "--poly", poly]);
        assert_eq!(out.status.code(), Some(0), "{poly}");
        let r = json(&out);
        assert!(rationals_reduced(&r), "{poly}");
        assert_eq!(r["faces"].as_array().unwrap().len(), r["newton"].as_array().unwrap().len());
    }
}

#[test]
fn analyze_with_shapes_and_figures() {
    let (svg, tikz) = (tmp("a.svg"), tmp("a.tex"));
    let out = run(&[
        "analyze",
        "-p",
        "2",
        "--poly",
        "1+u1+u2+u2^2",
        "--shape",
        "(0,0);(1,0);(0,1)",
        "--shape",
        "(0,0);(1,0);(0,2)",
        "--kmax",
        "4",
        "--svg",
        svg.to_str().unwrap(),
        "--tikz",
        tikz.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let v = r["shape_verdicts"].as_array().unwrap();
    assert_eq!(v[0]["verdict"], "GeometricallyMixing");
    assert_eq!(v[1]["verdict"], "RelationFound");
    assert!(std::fs::read_to_string(svg).unwrap().starts_with("<svg"));
    assert!(std::fs::read_to_string(tikz).unwrap().contains("tikzpicture"));
}

#[test]
fn analyze_pretty() {
    let out = run(&["analyze", "-p", "2", "--poly", "u2+u1+u1^3u2", "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("exact 2"));
}

#[test]
fn degenerate_and_malformed_inputs() {
    assert_eq!(run(&["analyze", "-p", "2", "--poly", "u1"]).status.code(), Some(3));
    assert_eq!(run(&["analyze", "-p", "2", "--poly", "u1+u1"]).status.code(), Some(3));
    assert_eq!(run(&["analyze", "-p", "2", "--poly", "u1+"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "-p", "2", "--poly", "1+u3"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "-p", "4", "--poly", "1+u1"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "-p", "2"]).status.code(), Some(2));
    let err = run(&["analyze", "-p", "2", "--poly", "1 + u3"]);
    assert!(String::from_utf8(err.stderr).unwrap().contains("1:5"));
}

#[test]
fn segment_hull_is_not_mixing() {
    let out = run(&["analyze", "-p", "2", "--poly", "1+u1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["bounds"]["not_mixing"], true);
}

#[test]
fn shape_test_examples() {
    let out = run(&["shape-test", "-p", "2", "--poly", "1+u1+u2", "--shape", "(0,0);(1,0);(0,1)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "CertifiedNonMixing");
    assert_eq!(v["witness"]["k"], 1);
    assert_eq!(v["certifying"], true);

    let out = run(&["shape-test", "-p", "2", "--poly", "1+u1+u2+u2^2", "--shape", "(0,0);(1,0);(0,1)"]);
    assert_eq!(json(&out)["verdict"], "GeometricallyMixing");

    let out = run(&["shape-test", "-p", "2", "--poly", "1+u1+u2+u2^2", "--shape", "(0,0);(1,0);(0,2)"]);
    let v = json(&out);
    assert_eq!(v["verdict"], "RelationFound");
    assert_eq!(v["certifying"], false);
    assert_eq!(v["witness"]["coefficients"], serde_json::json!(["1", "1", "u2^-1 + 1"]));
    assert_eq!(v["kmax"], 16);
    assert_eq!(v["windows"], serde_json::json!([0, 1, 2]));
}

#[test]
fn shape_test_search_only_and_options() {
    let out = run(&[
        "shape-test",
        "-p",
        "2",
        "--poly",
        "1+u1+u2+u2^2",
        "--shape",
        "(0,0);(1,0);(0,2)",
        "--search-only",
        "--kmax",
        "3",
        "--windows",
        "0",
        "--no-constants-first",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "Unresolved");
    assert_eq!(v["kmax"], 3);
}

#[test]
fn shape_test_rejects_bad_shapes() {
    for shape in ["(0,0)", "(0,0);(1,0", "(0,0);(0,0)", "(a,b);(1,0)"] {
        let out = run(&["shape-test", "-p", "2", "--poly", "1+u1+u2", "--shape", shape]);
        assert_eq!(out.status.code(), Some(2), "{shape}");
    }
}

#[test]
fn seq_diagnose_from_flags_and_file() {
    let out = run(&[
        "seq-diagnose",
        "-p",
        "2",
        "--poly",
        "1+u1+u2+u2^2",
        "--tuple",
        "(0,0);(1,0);(0,1)",
        "--tuple",
        "(0,0);(2,0);(0,2)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let d = json(&out);
    let rows = d["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["j"], 2);
    assert!(rationals_reduced(&d));

    let path = tmp("family.txt");
    std::fs::write(&path, "# dilates\n1: (0,0);(1,0);(0,1)\n\n3: (0,0);(3,0);(0,3)\n").unwrap();
    let out = run(&["seq-diagnose", "-p", "2", "--poly", "1+u1+u2", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let d = json(&out);
    let rows = d["rows"].as_array().unwrap();
    assert_eq!(rows[1]["j"], 3);
    for row in rows {
        assert!(row["faces"].as_array().unwrap().iter().all(|a| a["offset"] == 0));
    }

    std::fs::write(&path, "1: (0,0);(1,0)\nnot a tuple\n").unwrap();
    let out = run(&["seq-diagnose", "-p", "2", "--poly", "1+u1+u2", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("2:"));
}

#[test]
fn voloch_scan_command() {
    let out = run(&["voloch-scan", "--mmax", "64"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["solutions"], serde_json::json!([]));
    assert_eq!(v["skeleton"].as_array().unwrap().len(), 7);
    assert_eq!(run(&["voloch-scan", "--mmax", "0"]).status.code(), Some(2));
}

#[test]
fn verify_paper_command() {
    let out = run(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["failed"], 0);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert!(checks
        .iter()
        .any(|c| c["check"].as_str().unwrap().contains("newton points (0,1),(1,0),(2,inf),(3,1)")));
    assert!(checks.iter().any(|c| c["check"] == "voloch scan mmax=4096 -> 0 solutions"));
    assert!(checks.iter().any(|c| c["check"] == "pentagon R=5, bounds [4,4]"));

    let out = run(&["verify-paper", "--pretty"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("0 failed"));
}

#[test]
fn render_command() {
    let out = run(&["render", "-p", "2", "--poly", "u2+u1+u1^3u2"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("../golden/triangle.svg");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);

    let out = run(&["render", "-p", "2", "--poly", "u1^6+u1^5u2+u1^3u2^2+u2+u2^3"]);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches("<circle").count(), 5);
    assert_eq!(svg.matches("<text").count(), 5);

    let out = run(&["render", "-p", "2", "--poly", "u2+u1+u1^3u2", "--newton-face", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("id=\"newton\""));

    let path = tmp("f.tex");
    let out = run(&["render", "-p", "2", "--poly", "u2+u1+u1^3u2", "--format", "tikz", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(path).unwrap().contains("\\draw"));

    assert_eq!(run(&["render", "-p", "2", "--poly", "1+u1"]).status.code(), Some(3));
    assert_eq!(run(&["render", "-p", "2", "--poly", "u2+u1+u1^3u2", "--newton-face", "9"]).status.code(), Some(2));
}

#[test]
fn help_documents_exit_codes() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("Exit codes"));
    for cmd in ["analyze", "shape-test", "seq-diagnose", "voloch-scan", "verify-paper", "render"] {
        assert!(s.contains(cmd), "{cmd}");
    }
}
