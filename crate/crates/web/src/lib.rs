//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string; graphs travel between calls as graph6
//! so the page holds all state.

pub mod view;

use wasm_bindgen::prelude::*;

fn to_js(r: cubic3ec::Result<serde_json::Value>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e.to_string()))
}

/// Counts, girth and a drawn coloring of `P(m,k)`.
#[wasm_bindgen(js_name = petersenView)]
pub fn petersen_view(m: usize, k: usize) -> Result<String, JsError> {
    to_js(view::petersen_view(m, k))
}

/// Kempe cycles for colors `a`, `b`; `switch < 0` leaves the coloring alone.
#[wasm_bindgen(js_name = kempeView)]
pub fn kempe_view(graph6: &str, colors: &[u8], a: u8, b: u8, switch: i32) -> Result<String, JsError> {
    to_js(view::kempe_view(graph6, colors, (a, b), usize::try_from(switch).ok()))
}

#[wasm_bindgen(js_name = starView)]
pub fn star_view(g1: &str, g2: &str, v1: usize, v2: usize, perm: u8) -> Result<String, JsError> {
    to_js(view::star_view(g1, g2, v1, v2, perm))
}

#[wasm_bindgen(js_name = factorNames)]
pub fn factor_names() -> Vec<String> {
    view::factor_names().into_iter().map(String::from).collect()
}
