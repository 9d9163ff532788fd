//! WebAssembly bindings for the page in `www/`.
//!
//! Every export takes and returns JSON text. The work happens in plain Rust
//! functions, so the native test suite covers the same code the browser runs.

use std::collections::BTreeMap;

use psl_core::constructors::{
    construct_isogeometric, construct_like_geometric, construct_strong_like_geometric,
    construct_uniform_isogeometric, ConstructionError, ConstructionParams,
};
use psl_core::graph::{Graph, GraphDocument};
use psl_core::labeling::{classify, edge_label, validate_document, Labeling, LabelingDocument};
use psl_core::setalgebra::{cardinality_bounds, gp_ratio, product_set, quotient_set, LabelSet};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn parse_graph(text: &str) -> Result<Graph, String> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| format!("graph: {e}"))?;
    Graph::from_document(doc).map_err(|e| e.to_string())
}

fn edge_labels(g: &Graph, f: &Labeling) -> BTreeMap<String, LabelSet> {
    g.edges()
        .map(|e| {
            let (u, v) = e.endpoints();
            (e.to_string(), edge_label(f, u, v).expect("labeling covers the graph"))
        })
        .collect()
}

fn labeled(g: &Graph, f: &Labeling) -> Value {
    json!({
        "labeling": f,
        "report": classify(g, f),
        "edge_labels": edge_labels(g, f),
    })
}

/// Classification report plus induced edge labels for a labeling document.
pub fn classify_text(graph: &str, labeling: &str) -> Result<String, String> {
    let g = parse_graph(graph)?;
    let doc: LabelingDocument = serde_json::from_str(labeling).map_err(|e| format!("labeling: {e}"))?;
    let f = validate_document(&g, &doc)
        .map_err(|vs| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))?;
    Ok(labeled(&g, &f).to_string())
}

/// Builds a labeling with `scheme` (isogeometric, uniform, like-geometric or
/// strong). A non-bipartite graph under a bipartite-only scheme yields
/// `{"odd_cycle": [...]}` rather than an error.
pub fn construct_text(graph: &str, scheme: &str, ratio: u64, size: usize, size_y: Option<usize>) -> Result<String, String> {
    let g = parse_graph(graph)?;
    let sizes = |y: Option<usize>| -> BTreeMap<_, _> {
        let bp = g.bipartition();
        g.vertices()
            .map(|v| {
                let on_y = bp.as_ref().is_some_and(|bp| bp.y.contains(v));
                (v.clone(), if on_y { y.unwrap_or(size) } else { size })
            })
            .collect()
    };
    let result = match scheme {
        "isogeometric" => construct_isogeometric(&g, &ConstructionParams::uniform(&g, ratio, size)),
        "uniform" => construct_uniform_isogeometric(&g, size, size_y, ratio),
        "like-geometric" => {
            let params = ConstructionParams {
                ratio,
                sizes: sizes(size_y),
                bases: None,
                char_index: None,
            };
            construct_like_geometric(&g, &params)
        }
        "strong" => construct_strong_like_geometric(&g, ratio, size, &sizes(size_y)),
        other => return Err(format!("unknown scheme {other}")),
    };
    match result {
        Ok(f) => Ok(labeled(&g, &f).to_string()),
        Err(ConstructionError::NotBipartite(cycle)) => Ok(json!({ "odd_cycle": cycle.0 }).to_string()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_set(text: &str) -> Result<LabelSet, String> {
    let items: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    let values = items
        .iter()
        .map(|s| s.parse().map_err(|e| format!("{s}: {e}")))
        .collect::<Result<Vec<_>, String>>()?;
    LabelSet::from_elements(values).map_err(|e| e.to_string())
}

/// `A * B` for comma- or space-separated integer lists, with its size bounds
/// and the progression ratios of both factors.
pub fn product_text(a: &str, b: &str) -> Result<String, String> {
    let (a, b) = (parse_set(a)?, parse_set(b)?);
    let ab = product_set(&a, &b);
    let (lo, hi) = cardinality_bounds(&a, &b);
    let ratio = |s: &LabelSet| gp_ratio(s).map(|r| r.to_string());
    let disjoint = quotient_set(&a).is_disjoint(&quotient_set(&b));
    Ok(json!({
        "product": ab,
        "size": ab.len(),
        "lower_bound": lo,
        "upper_bound": hi,
        "a_ratio": ratio(&a),
        "b_ratio": ratio(&b),
        "quotients_disjoint": disjoint,
    })
    .to_string())
}

#[wasm_bindgen(js_name = classifyLabeling)]
pub fn classify_labeling(graph: &str, labeling: &str) -> Result<String, JsError> {
    classify_text(graph, labeling).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = constructLabeling)]
pub fn construct_labeling(graph: &str, scheme: &str, ratio: u32, size: u32, size_y: Option<u32>) -> Result<String, JsError> {
    construct_text(graph, scheme, ratio.into(), size as usize, size_y.map(|n| n as usize))
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = productSet)]
pub fn product_set_js(a: &str, b: &str) -> Result<String, JsError> {
    product_text(a, b).map_err(|e| JsError::new(&e))
}
