// End-to-end tests of the zmc binary: output formats, exit codes, the
// config file, and byte determinism across runs and thread counts.

use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn zmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zmc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        !out.stdout.is_empty(),
        "no stdout; stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn generate_writes_ply_with_green_band() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.ply");
    let res = zmc(&[
        "generate",
        "--family",
        "euclidean-general",
        "--a",
        "1",
        "--b",
        "2",
        "--r",
        "0.05:3:60",
        "--theta",
        "0:6.2832:32",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("ply"));
    assert_eq!(lines.next(), Some("format ascii 1.0"));
    assert!(text.contains("element vertex 1920"));
    assert!(text.contains("property double x"));
    assert!(text.contains("property list uchar int vertex_indices"));
    // snapped band along the inner equator: one green vertex per radius row
    let greens = text.lines().filter(|l| l.ends_with(" 0 255 0")).count();
    assert_eq!(greens, 60);
}

#[test]
fn generate_csv_by_extension_and_format_flag() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("mesh.csv");
    let res = zmc(&[
        "generate",
        "--family",
        "hyperbola-ii",
        "--a",
        "0",
        "--b",
        "-1",
        "--delta",
        "0.5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("p1,p2,x,y,t,causal\n"));
    for ch in ["S", "T", "L"] {
        assert!(
            text.lines().any(|l| l.ends_with(&format!(",{ch}"))),
            "missing character {ch}"
        );
    }
    // --format overrides the extension
    let res = zmc(&[
        "generate",
        "--family",
        "euclidean-singular",
        "--a",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(res.status.code(), Some(0));
    assert!(res.stdout.starts_with(b"p1,p2,x,y,t,causal\n"));
}

#[test]
fn classify_agreement_exits_zero_with_loci() {
    let res = zmc(&[
        "classify",
        "--family",
        "parabola-singular",
        "--a",
        "-2",
        "--b",
        "0",
        "--p",
        "0",
        "--json",
    ]);
    assert_eq!(res.status.code(), Some(0));
    let v = stdout_json(&res);
    assert_eq!(v["agreement"], Value::Bool(true));
    assert_eq!(v["loci"][0]["kind"], "line");
    assert_eq!(v["family"], "parabola-singular");
}

#[test]
fn characteristic_reports_mu_and_alpha_type() {
    let res = zmc(&[
        "characteristic",
        "--family",
        "euclidean-general",
        "--a",
        "1",
        "--b",
        "2",
        "--json",
    ]);
    assert_eq!(res.status.code(), Some(0));
    let v = stdout_json(&res);
    assert!((v["mu"].as_f64().unwrap() - 1.0).abs() < 1e-4);
    assert_eq!(v["alpha_type"], "alpha_plus");
    assert!(v["mu_residual"].as_f64().unwrap() < 1e-4);
    assert!(v["closed_form_residual"].as_f64().unwrap() < 1e-6);
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 2001);
    assert_eq!(samples[0].as_array().unwrap().len(), 2);
}

#[test]
fn verify_passes_and_reports_checks() {
    let res = zmc(&[
        "verify",
        "--family",
        "entire-graph",
        "--a",
        "-2",
        "--p",
        "-1",
        "--json",
    ]);
    assert_eq!(res.status.code(), Some(0));
    let v = stdout_json(&res);
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["ruled"], Value::Bool(false));
    assert_eq!(v["helicoid_ruled"], Value::Bool(true));
    assert!(v["checks"].as_array().unwrap().len() >= 4);
}

#[test]
fn exit_codes_follow_the_contract() {
    // 2: invalid parameters, with the violated invariant named
    let res = zmc(&["generate", "--family", "euclidean-general", "--a", "-1", "--b", "2"]);
    assert_eq!(res.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&res.stderr);
    assert!(msg.contains("a > 0"), "stderr: {msg}");
    // 2: missing parameter
    let res = zmc(&["classify", "--family", "euclidean-general", "--a", "1"]);
    assert_eq!(res.status.code(), Some(2));
    // 2: unknown family
    let res = zmc(&["classify", "--family", "torus", "--a", "1"]);
    assert_eq!(res.status.code(), Some(2));
    // 3: unwritable output path
    let res = zmc(&[
        "generate",
        "--family",
        "euclidean-singular",
        "--a",
        "1",
        "--out",
        "/nonexistent-dir/out.ply",
    ]);
    assert_eq!(res.status.code(), Some(3));
    // 4: no lightlike part to analyze
    let res = zmc(&[
        "characteristic",
        "--family",
        "euclidean-general",
        "--a",
        "1",
        "--b",
        "3",
    ]);
    assert_eq!(res.status.code(), Some(4));
    // 4: graph's lightlike locus is not a line
    let res = zmc(&["characteristic", "--family", "entire-graph", "--a", "-2", "--p", "-1"]);
    assert_eq!(res.status.code(), Some(4));
}

#[test]
fn config_file_drives_a_run_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(
        &cfg,
        r#"{"family": "euclidean-general", "a": 1.0, "b": 3.0, "r": "0.1:2:5", "theta": "0:6:5"}"#,
    )
    .unwrap();
    let res = zmc(&["classify", "--config", cfg.to_str().unwrap(), "--json"]);
    assert_eq!(res.status.code(), Some(0));
    let v = stdout_json(&res);
    assert_eq!(v["params"]["b"], 3.0);
    // flag wins over the file
    let res = zmc(&["classify", "--config", cfg.to_str().unwrap(), "--b", "2", "--json"]);
    assert_eq!(res.status.code(), Some(0));
    let v = stdout_json(&res);
    assert_eq!(v["params"]["b"], 2.0);
    assert_eq!(
        v["predicted"],
        serde_json::json!(["spacelike", "lightlike"])
    );
}

fn run_generate(out: &Path, threads: &str) -> Vec<u8> {
    let res = zmc(&[
        "generate",
        "--family",
        "parabola-gen-neg",
        "--a",
        "-1",
        "--b",
        "0.4",
        "--p",
        "0.3",
        "--threads",
        threads,
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(0));
    std::fs::read(out).unwrap()
}

#[test]
fn outputs_are_byte_identical_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("mesh.ply");
    let one = run_generate(&out, "1");
    let again = run_generate(&out, "1");
    let many = run_generate(&out, "6");
    assert_eq!(one, again, "same config must give identical bytes");
    assert_eq!(one, many, "thread count must not change the bytes");
    // JSON reports too
    let args = [
        "classify",
        "--family",
        "hyperbola-ii",
        "--a",
        "0",
        "--b",
        "1",
        "--delta",
        "1",
        "--r",
        "0.05:0.999:33",
    ];
    let a = zmc(&args);
    let b = zmc(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
