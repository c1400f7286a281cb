//! The JSON reports printed by the binary validate against the schema
//! files shipped under schema/ at the repository root.

use std::path::{Path, PathBuf};
use std::process::Command;

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema")
}

fn load_schema(name: &str) -> jsonschema::Validator {
    let path = schema_dir().join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("reading {}: {e}", path.display()));
    let schema: serde_json::Value = serde_json::from_str(&text).expect("schema is valid JSON");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn run_zmc(args: &[&str]) -> serde_json::Value {
    let out = Command::new(env!("CARGO_BIN_EXE_zmc"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "zmc {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

fn assert_valid(validator: &jsonschema::Validator, instance: &serde_json::Value, what: &str) {
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| format!("{}: {e}", e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{what} violates its schema:\n{}", errors.join("\n"));
}

#[test]
fn classify_reports_validate() {
    let schema = load_schema("classify.schema.json");
    let cases: &[&[&str]] = &[
        // line locus with a direction
        &["classify", "--family", "euclidean-general", "--a", "1", "--b", "2", "--json"],
        // line plus two null curves (direction absent on curves)
        &["classify", "--family", "euclidean-general", "--a", "1", "--b", "-2", "--r0", "2", "--json"],
        // timelike everywhere, empty locus list
        &["classify", "--family", "hyperbola-i", "--a", "1.5", "--b", "0.5", "--delta", "0.3", "--json"],
        &["classify", "--family", "parabola-singular", "--a", "-2", "--b", "0", "--p", "-1", "--json"],
    ];
    for args in cases {
        assert_valid(&schema, &run_zmc(args), &format!("{args:?}"));
    }
}

#[test]
fn characteristic_reports_validate() {
    let schema = load_schema("characteristic.schema.json");
    let cases: &[&[&str]] = &[
        &["characteristic", "--family", "euclidean-singular", "--a", "1", "--json"],
        &["characteristic", "--family", "euclidean-general", "--a", "1", "--b", "2", "--json"],
        &["characteristic", "--family", "parabola-gen-neg", "--a", "-1", "--b", "0", "--c", "0", "--p", "0", "--json"],
    ];
    for args in cases {
        assert_valid(&schema, &run_zmc(args), &format!("{args:?}"));
    }
}

#[test]
fn verify_reports_validate() {
    let schema = load_schema("verify.schema.json");
    let cases: &[&[&str]] = &[
        // rotational flag present on parabolic families
        &["verify", "--family", "parabola-gen-neg", "--a", "-1", "--b", "0", "--c", "0", "--p", "0", "--json"],
        // ruled and helicoid_ruled present on the graph
        &["verify", "--family", "entire-graph", "--a", "-2", "--p", "-1", "--json"],
        // none of the optional fields
        &["verify", "--family", "euclidean-general", "--a", "1", "--b", "3", "--json"],
    ];
    for args in cases {
        assert_valid(&schema, &run_zmc(args), &format!("{args:?}"));
    }
}

#[test]
fn pretty_output_is_the_same_instance() {
    let schema = load_schema("classify.schema.json");
    let compact = run_zmc(&["classify", "--family", "euclidean-general", "--a", "1", "--b", "2", "--json"]);
    let pretty = run_zmc(&["classify", "--family", "euclidean-general", "--a", "1", "--b", "2"]);
    assert_valid(&schema, &pretty, "pretty classify output");
    assert_eq!(compact, pretty);
}
