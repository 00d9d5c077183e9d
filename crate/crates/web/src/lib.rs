//! wasm-bindgen entry points for the static demo page. Each call runs the
//! command-line front end with `--json` and hands back the exit code and
//! both streams as one JSON object.

use polycomp::cli::parse_and_run;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn run(args: &[&str]) -> String {
    let argv = std::iter::once("polycomp").chain(args.iter().copied()).chain(["--json"]);
    let out = parse_and_run(argv);
    json!({ "code": out.code, "stdout": out.stdout, "stderr": out.stderr }).to_string()
}

/// Property verdicts for a ring description.
#[wasm_bindgen]
pub fn props(ring: &str) -> String {
    run(&["props", "--ring", ring])
}

/// gcd of two elements with cofactors.
#[wasm_bindgen]
pub fn gcd(ring: &str, a: &str, b: &str) -> String {
    run(&["gcd", "--ring", ring, a, b])
}

/// Normal form `b*J*R` of an ideal such as `ideal(2*X; 3*X^2)`.
#[wasm_bindgen]
pub fn normalize(ring: &str, ideal: &str) -> String {
    run(&["normalize", "--ring", ring, ideal])
}
