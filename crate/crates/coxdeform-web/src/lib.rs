//! JSON-in, JSON-out bindings for the browser page in `www/`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use coxdeform::pipeline::{self, PipelineError};

fn run<T: Serialize>(
    input: &str,
    f: impl Fn(&pipeline::ProblemInstance) -> Result<T, PipelineError>,
) -> Result<String, String> {
    let inst = pipeline::parse(input).map_err(|e| e.to_string())?;
    let out = f(&inst).map_err(|e| e.to_string())?;
    serde_json::to_string_pretty(&out).map_err(|e| e.to_string())
}

pub fn analyze_json(input: &str) -> Result<String, String> {
    run(input, pipeline::analyze)
}

/// Full sharpening trace. With `theta_only` set, H3-containing diagrams are rejected.
pub fn sharpen_json(input: &str, theta_only: bool) -> Result<String, String> {
    if theta_only {
        run(input, pipeline::sharpen_no_h3)
    } else {
        run(input, pipeline::sharpen)
    }
}

pub fn oracle_json(input: &str) -> Result<String, String> {
    run(input, pipeline::oracle)
}

#[wasm_bindgen]
pub fn analyze(input: &str) -> Result<String, JsValue> {
    analyze_json(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sharpen(input: &str, theta_only: bool) -> Result<String, JsValue> {
    sharpen_json(input, theta_only).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn oracle(input: &str) -> Result<String, JsValue> {
    oracle_json(input).map_err(|e| JsValue::from_str(&e))
}
