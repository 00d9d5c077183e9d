use std::fs;
use std::path::{Path, PathBuf};

use polycomp::cli::{parse_and_run, OUTPUT_SCHEMA};
use serde::Deserialize;

#[derive(Deserialize)]
pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub struct CaseResult {
    pub name: String,
    pub code: i32,
    pub matches_golden: bool,
    pub schema_errors: Vec<String>,
}

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/cli")
}

pub fn cases() -> Vec<Case> {
    let raw = fs::read_to_string(fixture_dir().join("cases.json")).expect("cases.json");
    serde_json::from_str(&raw).expect("valid manifest")
}

/// Runs every case with `--json`. Golden files hold the exact bytes of the
/// JSON stream (stdout on success, stderr otherwise) preceded by an
/// `exit: <code>` line. With `POLYCOMP_BLESS=1` missing goldens are written.
pub fn run_all() -> Vec<CaseResult> {
    let schema_doc: serde_json::Value = serde_json::from_str(OUTPUT_SCHEMA).expect("schema parses");
    let schema = jsonschema::JSONSchema::compile(&schema_doc).expect("schema compiles");
    let bless = std::env::var("POLYCOMP_BLESS").is_ok_and(|v| v == "1");
    cases()
        .into_iter()
        .map(|case| {
            let argv = std::iter::once("polycomp".to_string()).chain(case.args.iter().cloned()).chain(["--json".to_string()]);
            let out = parse_and_run(argv);
            let stream = if out.code == 0 { &out.stdout } else { &out.stderr };
            let other = if out.code == 0 { &out.stderr } else { &out.stdout };
            let actual = format!("exit: {}\n{}", out.code, stream);
            let path = fixture_dir().join(format!("{}.golden", case.name));
            if bless && !path.exists() {
                fs::write(&path, &actual).expect("write golden");
            }
            let golden = fs::read_to_string(&path).unwrap_or_default();
            let mut schema_errors = Vec::new();
            match serde_json::from_str::<serde_json::Value>(stream) {
                Ok(doc) => {
                    if let Err(errs) = schema.validate(&doc) {
                        schema_errors.extend(errs.map(|e| format!("{} at {}", e, e.instance_path)));
                    }
                }
                Err(e) => schema_errors.push(format!("not JSON: {e}")),
            }
            if !other.is_empty() {
                schema_errors.push("output on both streams".into());
            }
            CaseResult { name: case.name, code: out.code, matches_golden: golden == actual, schema_errors }
        })
        .collect()
}
