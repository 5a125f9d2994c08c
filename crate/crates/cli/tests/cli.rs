use std::f64::consts::PI;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tricenter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tricenter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tricenter_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tricenter"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(o));
    serde_json::from_str(&stdout(o)).unwrap()
}

fn point(v: &Value) -> (f64, f64) {
    (v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

/// Documents without the timing and tolerance block, for equality checks.
fn without_meta(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("meta");
    v
}

#[test]
fn compute_t1_equiareal() {
    let doc = json(&tricenter(&[
        "compute",
        "--triangle",
        "T1",
        "--centers",
        "equiareal",
    ]));
    let want = 0.25 * (1.0 + 1.0 / PI);
    let c = &doc["centers"]["equiareal"];
    let (s, t) = point(&c["point"]);
    assert!(
        (s - want).abs() < 1e-9 && (t - want).abs() < 1e-9,
        "{s} {t}"
    );
    assert_eq!(c["converged"], true);
    assert!(c["error"].is_null());
    assert!((c["aux"]["asymmetry"].as_f64().unwrap() - 0.450).abs() < 5e-3);
    assert_eq!(doc["triangle"]["label"], "T1");
    assert_eq!(doc["centers"].as_object().unwrap().len(), 1);
    assert!(doc["meta"]["version"].is_string());
    assert!(doc["meta"]["runtime_ms"]["total"].as_f64().unwrap() >= 0.0);
}

#[test]
fn near_equilateral_classical_centers_coincide() {
    let doc = json(&tricenter(&[
        "compute",
        "--triangle",
        "0,0 1,0 0.5,0.8660254",
        "--centers",
        "classical",
    ]));
    let classical = doc["classical"].as_object().unwrap();
    assert_eq!(classical.len(), 4);
    let (gx, gy) = point(&classical["centroid"]["point"]);
    for (name, c) in classical {
        let (x, y) = point(&c["point"]);
        assert!((x - gx).hypot(y - gy) < 1e-6, "{name}");
    }
}

#[test]
fn numbers_carry_seventeen_significant_digits() {
    let out = stdout(&tricenter(&[
        "compute",
        "--triangle",
        "T2",
        "--centers",
        "illuminating",
    ]));
    let start = out.find(r#""point":["#).unwrap() + 9;
    let first = &out[start..start + out[start..].find(',').unwrap()];
    let digits: String = first.chars().filter(char::is_ascii_digit).collect();
    assert_eq!(digits.trim_start_matches('0').len(), 17, "{first}");

    let text = stdout(&tricenter(&[
        "compute",
        "--triangle",
        "T2",
        "--centers",
        "illuminating",
        "--format",
        "text",
    ]));
    assert!(text.contains("0.35168768876766"), "{text}");
    assert!(text.starts_with("triangle T2:"));
}

#[test]
fn degenerate_and_malformed_input_exit_2() {
    let o = tricenter(&["compute", "--triangle", "0,0 1,1 2,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("degenerate"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());

    for args in [
        &["compute", "--triangle", "0,0 1,0"][..],
        &["compute", "--triangle", "T1", "--centers", "nope"],
        &["compute", "--triangle", "T1", "--tol", "-1"],
        &["compute", "--triangle", "T1", "--fem-level", "2"],
        &["compute"],
        &["frobnicate"],
    ] {
        assert_eq!(tricenter(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn strict_turns_unconverged_results_into_exit_1() {
    // A level-4 Richardson correction on T3 is well above 1e-4 × diameter.
    let args = [
        "compute",
        "--triangle",
        "T3",
        "--centers",
        "thermodynamic",
        "--fem-level",
        "4",
    ];
    let o = tricenter(&args);
    let doc = json(&o);
    assert_eq!(doc["centers"]["thermodynamic"]["converged"], false);
    assert_eq!(doc["centers"]["thermodynamic"]["aux"]["method"], "fem");
    let strict = tricenter(&[&args[..], &["--strict"]].concat());
    assert_eq!(strict.status.code(), Some(1));

    let ok = tricenter(&[
        "compute",
        "--triangle",
        "T1",
        "--strict",
        "--fem-level",
        "4",
    ]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn json_output_round_trips() {
    let out = stdout(&tricenter(&[
        "compute",
        "--triangle",
        "T3",
        "--fem-level",
        "4",
    ]));
    let parsed: Value = serde_json::from_str(&out).unwrap();
    for key in ["triangle", "centers", "classical", "meta"] {
        assert!(parsed.get(key).is_some(), "{key}");
    }
    assert!(parsed.get("error").is_none());
    for name in ["equiareal", "illuminating", "thermodynamic"] {
        let c = &parsed["centers"][name];
        for key in ["point", "aux", "converged", "error"] {
            assert!(c.get(key).is_some(), "{name}.{key}");
        }
    }
    // Values survive a parse: every float reads back to the same double.
    let again: Value = serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(again, parsed);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t1.json");
    let o = tricenter(&[
        "compute",
        "--triangle",
        "T1",
        "--centers",
        "classical",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(
        point(&doc["classical"]["circumcenter"]["point"]),
        (0.5, 0.5)
    );
}

fn write_lines(dir: &Path, name: &str, lines: &[&str]) -> String {
    let path = dir.join(name);
    fs::write(&path, lines.join("\n")).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn batch_matches_single_shot_runs() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_lines(
        dir.path(),
        "in.jsonl",
        &[
            r#"{"label":"T1","vertices":"T1"}"#,
            r#"{"vertices":"T2"}"#,
            r#"{"label":"T3","vertices":"T3"}"#,
        ],
    );
    let single: Vec<Value> = ["T1", "T2", "T3"]
        .iter()
        .map(|t| {
            without_meta(json(&tricenter(&[
                "compute",
                "--triangle",
                t,
                "--fem-level",
                "4",
            ])))
        })
        .collect();
    for threads in ["1", "3"] {
        let o = tricenter_env(
            &["batch", &input, "--fem-level", "4"],
            "TRICENTER_THREADS",
            threads,
        );
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let docs: Vec<Value> = stdout(&o)
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(docs.len(), 3);
        for (d, s) in docs.into_iter().zip(&single) {
            assert_eq!(&without_meta(d), s, "threads={threads}");
        }
        assert!(stderr(&o).contains("processed 3 triangles"));
    }
}

#[test]
fn batch_empty_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_lines(dir.path(), "empty.jsonl", &[]);
    let out = dir.path().join("out.jsonl");
    let o = tricenter(&["batch", &input, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), "");
    assert!(stderr(&o).contains("processed 0 triangles"));
}

#[test]
fn batch_records_degenerate_inline() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_lines(
        dir.path(),
        "mixed.jsonl",
        &[
            r#"{"label":"ok1","vertices":[[0,0],[1,0],[0,1]]}"#,
            r#"{"label":"flat","vertices":[[0,0],[1,1],[2,2]]}"#,
            "",
            r#"{"label":"ok2","vertices":"0,0 2,0 1,1.5"}"#,
        ],
    );
    let args = [
        "batch",
        input.as_str(),
        "--centers",
        "equiareal,illuminating",
    ];
    let o = tricenter_env(&args, "TRICENTER_THREADS", "2");
    assert_eq!(o.status.code(), Some(0));
    let docs: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let labels: Vec<&str> = docs
        .iter()
        .map(|d| d["triangle"]["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["ok1", "flat", "ok2"]);
    assert!(docs[0].get("error").is_none() && docs[2].get("error").is_none());
    assert!(docs[1]["error"].as_str().unwrap().contains("degenerate"));
    assert!(docs[1]["centers"].as_object().unwrap().is_empty());
    assert!(docs[2]["centers"]["illuminating"]["point"].is_array());

    let strict = tricenter(&[&args[..], &["--strict"]].concat());
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn batch_input_errors_exit_2() {
    let missing = tricenter(&["batch", "/nonexistent/triangles.jsonl"]);
    assert_eq!(missing.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let input = write_lines(dir.path(), "in.jsonl", &[r#"{"vertices":"T1"}"#]);
    let bad_threads = tricenter_env(&["batch", &input], "TRICENTER_THREADS", "zero");
    assert_eq!(bad_threads.status.code(), Some(2));
}

/// Values of `attr` on every element whose tag starts with `prefix`.
fn attributes(svg: &str, prefix: &str, attr: &str) -> Vec<String> {
    svg.lines()
        .filter(|l| l.trim_start().starts_with(prefix))
        .filter_map(|l| {
            let key = format!(" {attr}=\"");
            let start = l.find(&key)? + key.len();
            Some(l[start..start + l[start..].find('"')?].to_string())
        })
        .collect()
}

fn plot(triangle: &str, extra: &[&str], out: &Path) -> String {
    let o = tricenter(
        &[
            &[
                "plot",
                "--triangle",
                triangle,
                "--fem-level",
                "5",
                "--out",
                out.to_str().unwrap(),
            ],
            extra,
        ]
        .concat(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    fs::read_to_string(out).unwrap()
}

#[test]
fn plot_t1_disk_to_diameter_ratio() {
    let dir = tempfile::tempdir().unwrap();
    let svg = plot("T1", &[], &dir.path().join("t1.svg"));
    assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<svg").count(), 1);

    let pts: Vec<(f64, f64)> = attributes(&svg, "<polygon", "points")[0]
        .split(' ')
        .map(|p| {
            let (x, y) = p.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    assert_eq!(pts.len(), 3);
    let mut diameter: f64 = 0.0;
    for i in 0..3 {
        for j in 0..i {
            diameter = diameter.max((pts[i].0 - pts[j].0).hypot(pts[i].1 - pts[j].1));
        }
    }
    let r: f64 = attributes(&svg, r#"<circle id="equal-area-disk""#, "r")[0]
        .parse()
        .unwrap();
    let want = (1.0 / (2.0 * PI)).sqrt() / 2f64.sqrt();
    assert!(
        (r / diameter - want).abs() < 1e-5,
        "{} vs {want}",
        r / diameter
    );

    let names = attributes(&svg, "<circle class=\"marker\"", "data-center");
    for name in [
        "equiareal",
        "illuminating",
        "thermodynamic",
        "incenter",
        "centroid",
        "circumcenter",
        "orthocenter",
    ] {
        assert!(names.iter().any(|n| n == name), "{name}");
        assert!(svg.contains(&format!(">{name}</text>")), "{name}");
    }
}

#[test]
fn plot_equilateral_markers_coincide() {
    let dir = tempfile::tempdir().unwrap();
    let svg = plot(
        "0,0 1,0 0.5,0.8660254037844386",
        &[],
        &dir.path().join("eq.svg"),
    );
    let xs = attributes(&svg, "<circle class=\"marker\"", "cx");
    let ys = attributes(&svg, "<circle class=\"marker\"", "cy");
    assert_eq!(xs.len(), 7);
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x.parse().unwrap(), y.parse().unwrap()))
        .collect();
    for a in &pts {
        for b in &pts {
            assert!((a.0 - b.0).hypot(a.1 - b.1) <= 1.0, "{a:?} {b:?}");
        }
    }
}

#[test]
fn plot_is_deterministic_and_respects_centers() {
    let dir = tempfile::tempdir().unwrap();
    let first = plot(
        "T3",
        &["--centers", "illuminating"],
        &dir.path().join("a.svg"),
    );
    let second = plot(
        "T3",
        &["--centers", "illuminating"],
        &dir.path().join("b.svg"),
    );
    assert_eq!(first, second);
    // The disk is drawn even though only one marker was requested.
    assert_eq!(
        attributes(&first, "<circle id=\"equal-area-disk\"", "r").len(),
        1
    );
    assert_eq!(
        attributes(&first, "<circle class=\"marker\"", "data-center"),
        ["illuminating"]
    );
}

#[test]
fn plot_to_unwritable_path_exits_2() {
    let o = tricenter(&[
        "plot",
        "--triangle",
        "T1",
        "--centers",
        "equiareal",
        "--out",
        "/nonexistent/dir/t1.svg",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_quick_passes_and_tampering_fails() {
    let o = tricenter(&["verify", "--quick", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["passed"], true);
    let rows = report["criteria"].as_array().unwrap();
    assert_eq!(rows.len(), 13);
    for row in rows {
        let want = if row["id"] == 8 { "SKIP" } else { "PASS" };
        assert_eq!(row["status"], want, "{row}");
    }

    let tampered = tricenter(&["verify", "--quick", "--tolerance-scale", "1e-30"]);
    assert_eq!(tampered.status.code(), Some(1));
    let text = stdout(&tampered);
    assert!(
        text.lines().filter(|l| l.starts_with("FAIL")).count() >= 1,
        "{text}"
    );
    assert_eq!(text.lines().filter(|l| l.contains("] ")).count(), 13);
}
