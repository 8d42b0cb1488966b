#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use jsonschema::{Registry, Validator};
use serde_json::Value;

pub const REQUEST_ID: &str = "https://example.invalid/minexp/request.schema.json";
pub const REPORT_ID: &str = "https://example.invalid/minexp/report.schema.json";

pub fn docs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs")
}

fn load(name: &str) -> Value {
    let text = std::fs::read_to_string(docs_dir().join(name)).expect("schema file");
    serde_json::from_str(&text).expect("schema is JSON")
}

pub struct Schemas {
    pub report: Validator,
    pub request: Validator,
    pub manifest: Validator,
}

pub fn schemas() -> Schemas {
    let registry = Registry::new()
        .add(REQUEST_ID, load("request.schema.json"))
        .expect("request schema registers")
        .add(REPORT_ID, load("report.schema.json"))
        .expect("report schema registers")
        .prepare()
        .expect("registry");
    let build = |reference: String| {
        jsonschema::options()
            .with_registry(&registry)
            .build(&serde_json::json!({ "$ref": reference }))
            .expect("schema compiles")
    };
    Schemas {
        report: build(REPORT_ID.to_string()),
        request: build(REQUEST_ID.to_string()),
        manifest: build(format!("{REQUEST_ID}#/$defs/manifest")),
    }
}

pub fn schema_errors(v: &Validator, instance: &Value) -> Vec<String> {
    v.iter_errors(instance).map(|e| format!("{e} at {}", e.instance_path())).collect()
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn minexp(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_minexp"));
    cmd.args(args).env_remove("MINEXP_SCAN_BOUNDS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Output {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

pub fn minexp_json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = minexp(&all, &[]);
    let value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out.code, value)
}

/// Exact value of a named result.
pub fn result<'a>(report: &'a Value, name: &str) -> &'a str {
    report["results"]
        .as_array()
        .and_then(|rs| rs.iter().find(|q| q["name"] == name))
        .and_then(|q| q["exact"].as_str())
        .unwrap_or_else(|| panic!("no result `{name}` in {report}"))
}

pub fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("minexp-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("temp file");
    path
}
