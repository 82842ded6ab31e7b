//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes the algebra file as JSON text and returns the same
//! output the command line would print.

use a3kit_cli::commands::{cmd_classify, cmd_rb2ybe, cmd_search};
use a3kit_cli::{Format, Outcome, SearchKind};
use wasm_bindgen::prelude::*;

const PRESETS: [(&str, &str); 2] = [
    (
        "admissible_plane",
        include_str!("../../cli/data/admissible_plane.json"),
    ),
    (
        "idempotent_rb",
        include_str!("../../cli/data/idempotent_rb.json"),
    ),
];

#[wasm_bindgen]
pub struct Response {
    output: String,
    code: i32,
}

#[wasm_bindgen]
impl Response {
    #[wasm_bindgen(getter)]
    pub fn output(&self) -> String {
        self.output.clone()
    }

    /// 0 passed, 1 failed, 2 bad input.
    #[wasm_bindgen(getter)]
    pub fn code(&self) -> i32 {
        self.code
    }
}

impl From<Outcome> for Response {
    fn from(o: Outcome) -> Self {
        Response {
            output: o.stdout + &o.stderr,
            code: o.code,
        }
    }
}

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Table
    }
}

#[wasm_bindgen]
pub fn preset(name: &str) -> Option<String> {
    PRESETS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.to_string())
}

#[wasm_bindgen]
pub fn classify(text: &str, json: bool) -> Response {
    cmd_classify(text, format(json)).into()
}

#[wasm_bindgen]
pub fn search_aybe(text: &str, grid: &str, max_solutions: usize, json: bool) -> Response {
    cmd_search(
        text,
        SearchKind::Aybe,
        grid,
        max_solutions,
        None,
        format(json),
    )
    .into()
}

#[wasm_bindgen]
pub fn rb_to_ybe(text: &str, map: &str, json: bool) -> Response {
    cmd_rb2ybe(text, map, format(json)).into()
}
