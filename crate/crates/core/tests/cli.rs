mod common;

use std::path::Path;
use std::process::Command;

use common::fixture;
use discrete_torsion::cli::run;
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("discrete-torsion").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn h2_of_c4_with_z2() {
    for method in ["linalg", "brute"] {
        let r = cli(&["h2", "--group", "cyclic:4", "--coeff", "coeff:2", "--method", method]);
        assert_eq!((r.code, r.out.as_str()), (0, "2\n"), "{}", r.err);
    }
}

#[test]
fn methods_agree_on_h2() {
    let groups = ["cyclic:1", "cyclic:4", "cyclic:6", "product:cyclic:2xcyclic:2", &format!("table:{}", path("s3.json"))];
    for g in groups {
        for a in ["coeff:2", "coeff:3", "coeff:2x2", "coeff:4"] {
            let lin = cli(&["h2", "--group", g, "--coeff", a]);
            let brute = cli(&["h2", "--group", g, "--coeff", a, "--method", "brute"]);
            assert_eq!(lin.code, 0, "{g} {a}: {}", lin.err);
            assert_eq!(lin.out, brute.out, "{g} {a}");
        }
    }
}

#[test]
fn cohomologous_verdicts() {
    let c = path("carrying_c2_z2.json");
    let z = path("zero.json");
    for method in ["linalg", "brute"] {
        let r = cli(&["cohomologous", &c, &z, "--method", method]);
        assert_eq!(r.code, 1);
        assert_eq!(json(&r.out)["verdict"], "not cohomologous");
        let r = cli(&["cohomologous", &c, &c, "--method", method]);
        assert_eq!(r.code, 0);
        let v = json(&r.out);
        assert_eq!(v["verdict"], "cohomologous");
        assert_eq!(v["witness"], serde_json::json!(["0", "0"]));
    }
}

#[test]
fn verdicts_on_fixture_configs() {
    for (name, code) in [
        ("circle_c3.json", 0),
        ("cp1_c3.json", 0),
        ("cp2_c2.json", 0),
        ("dual_c2.json", 0),
        ("dual_s3.json", 0),
        ("cp1_c2_carrying.json", 1),
    ] {
        let r = cli(&["verdict", &path(name)]);
        assert_eq!(r.code, code, "{name}: {}{}", r.out, r.err);
        let v = json(&r.out);
        assert_eq!(v["splits"], code == 0, "{name}");
        assert_eq!(v["checked_iso"], code == 0, "{name}");
    }
    let v = json(&cli(&["verdict", &path("circle_c3.json")]).out);
    assert_eq!(v["summary"], "splits: true, witness: ξ ≡ 0");
    let v = json(&cli(&["verdict", &path("cp1_c2_carrying.json")]).out);
    assert_eq!(v["summary"], "splits: false, obstruction of order 2");
    assert_eq!(v["obstruction_order"], 2);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn tqft_on_fixtures() {
    for name in ["circle_c3.json", "cp1_c3.json", "dual_c2.json", "dual_s3.json"] {
        let r = cli(&["tqft", &path(name)]);
        assert_eq!(r.code, 0, "{name}: {}", r.out);
        assert_eq!(json(&r.out)["passed"], true);
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["verdict", "cp1_c3.json"],
        vec!["verdict", "cp1_c2_carrying.json"],
        vec!["twist", "dual_s3.json"],
        vec!["tqft", "dual_c2.json"],
        vec!["cohomologous", "carrying_c2_z2.json", "zero.json"],
    ] {
        let full: Vec<String> = args.iter().map(|a| if a.ends_with(".json") { path(a) } else { a.to_string() }).collect();
        let full: Vec<&str> = full.iter().map(String::as_str).collect();
        let first = cli(&full);
        for _ in 0..3 {
            let again = cli(&full);
            assert_eq!(again.out, first.out);
            assert_eq!(again.code, first.code);
        }
    }
}

#[test]
fn twist_table_has_header_and_one_row_per_pair() {
    let r = cli(&["twist", &path("cp1_c3.json")]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.out.lines().collect();
    assert!(lines[0].starts_with("# basis\t"));
    assert_eq!(lines.len(), 1 + 36);
    assert!(lines.contains(&"[CP^1]⊗g1\t[CP^1]⊗g2\t→\t[CP^1]⊗e + eps⊗e"));
}

#[test]
fn report_and_table_files() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let table = dir.path().join("table.tsv");
    let r = cli(&[
        "verdict",
        &path("cp1_c3.json"),
        "--report",
        report.to_str().unwrap(),
        "--table",
        table.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.is_empty());
    let v = json(&std::fs::read_to_string(&report).unwrap());
    assert_eq!(v["splits"], true);
    let tsv = std::fs::read_to_string(&table).unwrap();
    assert_eq!(tsv, cli(&["twist", &path("cp1_c3.json")]).out);
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn input_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cases = [
        (r#"{"algebra": "cpl:1:2", "group": "cyclic:0", "coeff": "coeff:2", "generator_images": ["[CP^1] + eps"], "cocycle": "zero"}"#, "error: group: "),
        (r#"{"algebra": "cpl:1:2", "group": "cyclic:3", "coeff": "coeff:x", "generator_images": ["[CP^1] + eps"], "cocycle": "zero"}"#, "error: coeff: "),
        (r#"{"algebra": "cpl:1:2", "group": "cyclic:3", "coeff": "coeff:2", "generator_images": ["nope"], "cocycle": "zero"}"#, "error: generator_images[0]: "),
        (r#"{"algebra": "cpl:1:2", "group": "cyclic:3", "coeff": "coeff:3", "generator_images": ["[CP^1] + eps"], "cocycle": "zero"}"#, "error: generator_images: "),
        (r#"{"algebra": "cpl:1:2", "group": "cyclic:3", "coeff": "coeff:2", "generator_images": ["[CP^1] + eps"], "cocycle": "what"}"#, "error: cocycle: "),
        (r#"{"algebra": "torus", "group": "cyclic:3", "coeff": "coeff:2", "generator_images": [], "cocycle": "zero"}"#, "error: algebra: "),
    ];
    for (i, (text, prefix)) in cases.iter().enumerate() {
        let cfg = write(d, &format!("cfg{i}.json"), text);
        let r = cli(&["verdict", &cfg]);
        assert_eq!(r.code, 2, "case {i}: {}", r.out);
        assert!(r.err.starts_with(prefix), "case {i}: {}", r.err);
        assert!(r.out.is_empty());
    }

    let bad = write(d, "bad.json", r#"{"group": "cyclic:2", "coeff": [2], "values": [[[0], [0]], [[0], [5]]]}"#);
    let r = cli(&["cohomologous", &bad, &path("zero.json")]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("values[1][1]"), "{}", r.err);

    let r = cli(&["verdict", "/nonexistent/config.json"]);
    assert_eq!(r.code, 2);
    assert!(r.err.starts_with("error: "));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(cli(&["h2", "--group", "cyclic:3"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    let help = cli(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.out.contains("verdict"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_discrete-torsion");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["h2", "--group", "cyclic:4", "--coeff", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(ok.stdout, b"2\n");
    let neg = status(&["cohomologous", &path("carrying_c2_z2.json"), &path("zero.json")]);
    assert_eq!(neg.status.code(), Some(1));
    let bad = status(&["h2", "--group", "cyclic:0", "--coeff", "2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error: group: "));
}
